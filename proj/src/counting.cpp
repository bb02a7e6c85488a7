#include "latt14/counting.hpp"

#include <functional>
#include <sstream>

namespace latt {

AffineExpr AffineExpr::param(const std::string& name, const Rat& coeff) {
  AffineExpr e;
  e.coeffs[name] = coeff;
  return e;
}

AffineExpr AffineExpr::operator+(const AffineExpr& o) const {
  AffineExpr r = *this;
  r.constant += o.constant;
  for (auto& [k, v] : o.coeffs) {
    r.coeffs[k] += v;
    if (r.coeffs[k] == 0) r.coeffs.erase(k);
  }
  return r;
}

AffineExpr AffineExpr::operator-(const AffineExpr& o) const { return *this + o.scaled(Rat(-1)); }

AffineExpr AffineExpr::scaled(const Rat& c) const {
  AffineExpr r;
  if (c == 0) return r;
  r.constant = constant * c;
  for (auto& [k, v] : coeffs) r.coeffs[k] = v * c;
  return r;
}

Rat AffineExpr::eval(const std::map<std::string, Rat>& values) const {
  Rat s = constant;
  for (auto& [k, v] : coeffs) {
    auto it = values.find(k);
    if (it == values.end()) throw std::invalid_argument("AffineExpr::eval: missing " + k);
    s += v * it->second;
  }
  return s;
}

AffineExpr AffineExpr::substituted(const std::string& name, const AffineExpr& e) const {
  auto it = coeffs.find(name);
  if (it == coeffs.end()) return *this;
  Rat c = it->second;
  AffineExpr r = *this;
  r.coeffs.erase(name);
  return r + e.scaled(c);
}

std::string AffineExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (constant != 0 || coeffs.empty()) {
    os << rat_str(constant);
    first = false;
  }
  for (auto& [k, v] : coeffs) {
    if (v > 0 && !first) os << " + ";
    if (v < 0) os << (first ? "-" : " - ");
    Rat av = abs(v);
    if (av != 1) os << rat_str(av) << "*";
    os << k;
    first = false;
  }
  return os.str();
}

CountingProblem counting_problem(int n, const Rat& norm, const std::vector<Rat>& products,
                                 std::optional<AffineExpr> cardinality) {
  CountingProblem p;
  p.n = n;
  p.norm = norm;
  std::vector<Rat> sorted = products;
  std::sort(sorted.begin(), sorted.end());
  for (auto& i : sorted) {
    std::string nm = "a" + rat_str(i);
    for (auto& c : nm)
      if (c == '/') c = '_';
    p.unknowns_sq.push_back({nm, i * i});
  }
  p.cardinality = std::move(cardinality);
  return p;
}

CountingSolution counting_system(const CountingProblem& p) {
  // Unknown list: the a_i plus possibly symbolic "a".
  bool symbolic_a = !p.cardinality.has_value();
  std::vector<std::string> names;
  std::vector<Rat> sq;  // squared product per unknown (zero slot for "a")
  if (symbolic_a) {
    names.push_back("a");
    sq.push_back(Rat(0));
  }
  for (auto& [nm, s] : p.unknowns_sq) {
    names.push_back(nm);
    sq.push_back(s);
  }

  int m = (int)names.size();
  const Rat& M = p.norm;
  int n = p.n;

  // rows: eq over unknown coefficients, rhs affine in parameters
  std::vector<std::vector<Rat>> A(3, std::vector<Rat>(m, Rat(0)));
  std::vector<AffineExpr> rhs(3);
  AffineExpr card = symbolic_a ? AffineExpr(Rat(0)) : *p.cardinality;

  // Self shape (alpha = y0 in the layer):
  //   1 + sum a_i = a;  m^2 + sum i^2 a_i = a m^2/n;
  //   m^4 + sum i^4 a_i = 3 a m^4/(n(n+2)).
  // External shape (alpha outside, |alpha|^2 = anorm):
  //   sum a_i = a;  sum i^2 a_i = a (m/n) anorm;
  //   sum i^4 a_i = 3 a m^2 anorm^2/(n(n+2)).
  bool external = p.external_norm.has_value();
  Rat c2, c4;
  if (external) {
    c2 = (M / n) * (*p.external_norm);
    c4 = 3 * M * M * (*p.external_norm) * (*p.external_norm) / (n * (n + 2));
  } else {
    c2 = M * M / n;
    c4 = 3 * M * M * M * M / (n * (n + 2));
  }
  int off = symbolic_a ? 1 : 0;
  for (int u = 0; u < (int)p.unknowns_sq.size(); ++u) {
    A[0][off + u] = 1;
    A[1][off + u] = sq[off + u];
    A[2][off + u] = sq[off + u] * sq[off + u];
  }
  Rat k0 = external ? Rat(0) : Rat(1);
  Rat k2 = external ? Rat(0) : M * M;
  Rat k4 = external ? Rat(0) : M * M * M * M;
  if (symbolic_a) {
    A[0][0] = -1;
    A[1][0] = -c2;
    A[2][0] = -c4;
    rhs[0] = AffineExpr(-k0);
    rhs[1] = AffineExpr(-k2);
    rhs[2] = AffineExpr(-k4);
  } else {
    rhs[0] = card + AffineExpr(-k0);
    rhs[1] = card.scaled(c2) + AffineExpr(-k2);
    rhs[2] = card.scaled(c4) + AffineExpr(-k4);
  }

  // apply fixed assignments: move their contribution to the rhs
  std::vector<bool> is_fixed(m, false);
  for (int u = 0; u < m; ++u) {
    auto it = p.fixed.find(names[u]);
    if (it == p.fixed.end()) continue;
    is_fixed[u] = true;
    for (int e = 0; e < 3; ++e) {
      rhs[e] = rhs[e] - it->second.scaled(A[e][u]);
      A[e][u] = 0;
    }
  }

  // Gaussian elimination over the active unknowns
  std::vector<int> pivot_of_row;
  int row = 0;
  for (int col = 0; col < m && row < 3; ++col) {
    if (is_fixed[col]) continue;
    int pr = -1;
    for (int r = row; r < 3; ++r)
      if (A[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[pr], A[row]);
    std::swap(rhs[pr], rhs[row]);
    Rat f = 1 / A[row][col];
    for (int j = 0; j < m; ++j) A[row][j] *= f;
    rhs[row] = rhs[row].scaled(f);
    for (int r = 0; r < 3; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Rat g = A[r][col];
      for (int j = 0; j < m; ++j) A[r][j] -= g * A[row][j];
      rhs[r] = rhs[r] - rhs[row].scaled(g);
    }
    pivot_of_row.push_back(col);
    ++row;
  }

  CountingSolution sol;
  // consistency: zero rows need zero rhs (identically, as affine expressions)
  for (int r = row; r < 3; ++r) {
    bool zero = true;
    for (int j = 0; j < m; ++j)
      if (A[r][j] != 0) zero = false;
    if (zero && !(rhs[r].constant == 0 && rhs[r].coeffs.empty())) {
      sol.consistent = false;
      sol.residuals.push_back(rhs[r]);
    }
  }
  if (!sol.residuals.empty()) return sol;
  sol.consistent = true;

  // non-pivot unknowns become free parameters
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_of_row) is_pivot[c] = true;
  for (int u = 0; u < m; ++u) {
    if (is_fixed[u]) {
      sol.counts[names[u]] = p.fixed.at(names[u]);
    } else if (!is_pivot[u]) {
      sol.counts[names[u]] = AffineExpr::param(names[u]);
      sol.free_params.push_back(names[u]);
    }
  }
  for (int r = 0; r < row; ++r) {
    int pc = pivot_of_row[r];
    AffineExpr e = rhs[r];
    for (int j = 0; j < m; ++j) {
      if (j == pc || A[r][j] == 0) continue;
      // pivot + A[r][j]*u_j = rhs -> pivot = rhs - A[r][j]*expr(u_j)
      AffineExpr uj = is_fixed[j] ? p.fixed.at(names[j]) : AffineExpr::param(names[j]);
      e = e - uj.scaled(A[r][j]);
    }
    sol.counts[names[pc]] = e;
  }
  // rhs parameters (from a given cardinality like 21*t1) are also free
  std::map<std::string, bool> seen;
  for (auto& f : sol.free_params) seen[f] = true;
  for (auto& [nm, ex] : sol.counts)
    for (auto& [par, c] : ex.coeffs)
      if (!seen[par] && !sol.counts.count(par)) {
        sol.free_params.push_back(par);
        seen[par] = true;
      }
  return sol;
}

std::string CountingSolution::to_text() const {
  std::ostringstream os;
  if (!consistent) return "inconsistent (no design possible)\n";
  for (auto& [k, v] : counts) os << k << " = " << v.to_string() << "\n";
  return os.str();
}

std::vector<std::map<std::string, Rat>> enumerate_feasible(
    const CountingSolution& sol, const std::vector<SideConstraint>& constraints,
    const std::map<std::string, std::pair<long, long>>& param_ranges) {
  std::vector<std::map<std::string, Rat>> out;
  if (!sol.consistent) return out;
  std::vector<std::string> params = sol.free_params;
  for (auto& p : params)
    if (!param_ranges.count(p))
      throw std::invalid_argument("enumerate_feasible: no range for " + p);

  std::map<std::string, Rat> values;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == params.size()) {
      // all counts must be nonnegative integers
      for (auto& [nm, ex] : sol.counts) {
        Rat v = ex.eval(values);
        if (v < 0 || !is_integer(v)) return;
      }
      for (auto& c : constraints) {
        Rat v = c.expr.eval(values);
        switch (c.kind) {
          case SideConstraint::nonneg:
            if (v < 0) return;
            break;
          case SideConstraint::even:
            if (!is_integer(v) || v.get_num() % 2 != 0) return;
            break;
          case SideConstraint::divisible:
            if (!is_integer(v) || v.get_num() % c.modulus != 0) return;
            break;
        }
      }
      out.push_back(values);
      return;
    }
    auto [lo, hi] = param_ranges.at(params[k]);
    for (long v = lo; v <= hi; ++v) {
      values[params[k]] = Rat(v);
      rec(k + 1);
    }
    values.erase(params[k]);
  };
  rec(0);
  return out;
}

}  // namespace latt
