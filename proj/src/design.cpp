#include "latt14/design.hpp"

#include <sstream>

namespace latt {

namespace {

// dual coordinates y = G*c of a lattice vector
std::vector<Rat> dual_coords(const QMat& G, const std::vector<Int>& c) {
  int n = G.rows;
  std::vector<Rat> y(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c[j] != 0) y[i] += G.at(i, j) * Rat(c[j]);
  return y;
}

}  // namespace

std::string DesignReport::to_text() const {
  std::ostringstream os;
  os << "s: " << int_str(s) << "\n";
  os << "m: " << rat_str(m) << "\n";
  os << "spans: " << (spans ? "yes" : "no") << "\n";
  os << "is_4design: " << (is_4design ? "yes" : "no") << "\n";
  Rat max2(0), max4(0);
  for (auto& x : d2_defect) max2 = std::max(max2, Rat(abs(x)));
  for (auto& x : d4_defect) max4 = std::max(max4, Rat(abs(x)));
  os << "d2_defect_max: " << rat_str(max2) << "\n";
  os << "d4_defect_max: " << rat_str(max4) << "\n";
  os << "d22_consistent: " << (d22_consistent ? "yes" : "no") << "\n";
  return os.str();
}

DesignReport moment_check(const Lattice& L, const Layer& X) {
  int n = L.dim();
  const QMat& G = L.gram();
  DesignReport rep;
  rep.s = Int((long)X.reps.size());
  rep.m = X.norm;
  if (X.reps.empty()) throw std::invalid_argument("moment_check: empty layer");

  std::vector<std::vector<Rat>> ys;
  ys.reserve(X.reps.size());
  for (auto& c : X.reps) ys.push_back(dual_coords(G, c));

  // span check on the coordinates
  {
    QMat M((int)X.reps.size(), n);
    for (int i = 0; i < M.rows; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = Rat(X.reps[i][j]);
    rep.spans = (M.rank() == n);
  }

  Rat s((long)X.reps.size());
  const Rat& m = X.norm;
  Rat c2 = s * m / n;
  Rat c4 = s * m * m / (n * (n + 2));

  // degree 2: sum y y^T - (sm/n) G
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat acc(0);
      for (auto& y : ys) acc += y[i] * y[j];
      Rat defect = acc - c2 * G.at(i, j);
      rep.d2_defect.push_back(defect);
      if (defect != 0) ok = false;
    }

  // degree 4: sum y^{(x)4} - (sm^2/(n(n+2))) * (G_ij G_kl + G_ik G_jl + G_il G_jk)
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        for (int l = k; l < n; ++l) {
          Rat acc(0);
          for (auto& y : ys) acc += y[i] * y[j] * y[k] * y[l];
          Rat target = c4 * (G.at(i, j) * G.at(k, l) + G.at(i, k) * G.at(j, l) +
                             G.at(i, l) * G.at(j, k));
          Rat defect = acc - target;
          rep.d4_defect.push_back(defect);
          if (defect != 0) ok = false;
        }
  rep.is_4design = ok;

  // (D22) on basis pairs must agree with the tensor verdict
  bool d22 = true;
  for (int a = 0; a < n && d22; ++a)
    for (int b = 0; b < n && d22; ++b) {
      Rat lhs(0);
      for (auto& y : ys) lhs += y[a] * y[a] * y[b] * y[b];
      Rat rhs = c4 * (2 * G.at(a, b) * G.at(a, b) + G.at(a, a) * G.at(b, b));
      if (lhs != rhs) d22 = false;
    }
  rep.d22_consistent = (ok == d22) || (!ok);
  return rep;
}

std::string PerfectionReport::to_text() const {
  std::ostringstream os;
  os << "strongly_perfect: " << (is_strongly_perfect ? "yes" : "no") << "\n";
  os << "dual_strongly_perfect: " << (is_dual_strongly_perfect ? "yes" : "no") << "\n";
  os << "gamma_product: " << rat_str(gamma_product) << "\n";
  os << "[primal]\n" << primal.to_text();
  os << "[dual]\n" << dual.to_text();
  return os.str();
}

PerfectionReport perfection_report(const Lattice& L) {
  PerfectionReport rep;
  Lattice D = L.dual();
  rep.primal = moment_check(L, L.min_layer());
  rep.dual = moment_check(D, D.min_layer());
  rep.is_strongly_perfect = rep.primal.is_4design;
  rep.is_dual_strongly_perfect = rep.primal.is_4design && rep.dual.is_4design;
  rep.gamma_product = L.minimum() * D.minimum();
  return rep;
}

IntegralityWitness integrality_witness(const Int& s, int n, const Rat& m, const Rat& alpha_norm) {
  IntegralityWitness w;
  Rat S(s);
  w.d2 = S * m / n * alpha_norm;
  w.d4 = 3 * S * m * m / (n * (n + 2)) * alpha_norm * alpha_norm;
  w.e12 = (w.d4 - w.d2) / 12;
  w.d2_integral = is_integer(w.d2);
  w.d4_integral = is_integer(w.d4);
  w.e12_integral = is_integer(w.e12);
  return w;
}

N2Config n2_config(const Lattice& L, const std::vector<Rat>& alpha) {
  int n = L.dim();
  const QMat& G = L.gram();
  N2Config cfg;
  const Layer& lay = L.min_layer();
  Rat m = lay.norm;
  Rat s((long)lay.reps.size());

  auto ip_alpha = [&](const std::vector<Int>& c) {
    Rat v(0);
    for (int i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      Rat row(0);
      for (int j = 0; j < n; ++j) row += G.at(i, j) * alpha[j];
      v += Rat(c[i]) * row;
    }
    return v;
  };
  Rat anorm(0);
  for (int i = 0; i < n; ++i) {
    Rat row(0);
    for (int j = 0; j < n; ++j) row += G.at(i, j) * alpha[j];
    anorm += alpha[i] * row;
  }

  cfg.applicable = true;
  for (auto& x : lay.reps) {
    Rat v = ip_alpha(x);
    if (abs(v) > 2) {
      cfg.applicable = false;
      return cfg;
    }
    if (v == 2) cfg.members.push_back(x);
    if (v == -2) {
      auto neg = x;
      for (auto& e : neg) e = -e;
      cfg.members.push_back(neg);
    }
  }
  cfg.c = s * m / (6 * n) * (3 * m / (n + 2) * anorm - 1);
  cfg.cardinality_ok = (Rat((long)cfg.members.size()) == cfg.c * anorm / 2);
  std::vector<Rat> sum(n, Rat(0));
  for (auto& x : cfg.members)
    for (int i = 0; i < n; ++i) sum[i] += Rat(x[i]);
  cfg.sum_ok = true;
  for (int i = 0; i < n; ++i)
    if (sum[i] != cfg.c * alpha[i]) cfg.sum_ok = false;
  return cfg;
}

Rat n2_bound(int n, const Rat& r, const Rat& m) {
  Rat rm = r * m;
  if (rm > 8) throw std::invalid_argument("n2_bound: rm > 8 has no bound from these lemmas");
  if (rm == 8) return Rat(2 * (n - 1));
  return rm / (8 - rm);
}

Rat design_defect(const Lattice& L, const Layer& X, int t) {
  if (t < 1) throw std::invalid_argument("design_defect: t >= 1");
  int n = L.dim();
  Rat ct(1);
  for (int i = 1; i <= t; ++i) ct *= Rat(2 * i - 1, n + 2 * i - 2);
  Rat sum(0);
  size_t N = X.reps.size();
  for (size_t i = 0; i < N; ++i) {
    sum += rat_pow(X.norm, 2 * t);  // diagonal term
    for (size_t j = i + 1; j < N; ++j) {
      Rat ip = L.inner(X.reps[i], X.reps[j]);
      sum += 2 * rat_pow(ip, 2 * t);
    }
  }
  return sum - ct * Rat((long)N) * Rat((long)N) * rat_pow(X.norm, 2 * t);
}

std::pair<Rat, MinimalTypeClass> minimal_type(const Lattice& L) {
  Rat gamma = L.minimum() * L.dual().minimum();
  Rat bound(L.dim() + 2, 3);
  MinimalTypeClass cls = gamma < bound    ? MinimalTypeClass::below_bound
                         : gamma == bound ? MinimalTypeClass::minimal
                                          : MinimalTypeClass::general;
  return {gamma, cls};
}

NonpositiveDecomposition nonpositive_decompose(const QMat& V, const QMat& gram) {
  int N = V.rows;
  NonpositiveDecomposition out;
  QMat ips = V * gram * V.transpose();
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (ips.at(i, j) > 0) {
        out.offending_pair = {i, j};
        return out;
      }
  // zero-sum hypothesis
  for (int j = 0; j < V.cols; ++j) {
    Rat s(0);
    for (int i = 0; i < N; ++i) s += V.at(i, j);
    if (s != 0) {
      out.offending_pair = {-2, -2};
      return out;
    }
  }
  out.hypothesis_ok = true;
  // components = connected components of the strict-negativity graph
  std::vector<int> comp(N, -1);
  int nc = 0;
  for (int i = 0; i < N; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < N; ++v)
        if (comp[v] < 0 && ips.at(u, v) < 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  out.components.assign(nc, {});
  for (int i = 0; i < N; ++i) out.components[comp[i]].push_back(i);
  out.rank = V.rank();
  return out;
}

}  // namespace latt
