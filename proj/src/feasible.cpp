#include "latt14/feasible.hpp"

#include <algorithm>

#include "latt14/matrix.hpp"

namespace latt {

namespace {

// Rows of inequalities c0 + sum c_i x_i >= 0; tag carries (side, index) of
// the originating coefficient.
struct IneqRow {
  std::vector<Rat> c;  // c[0] constant, c[1..] coefficients
  std::pair<int, long> tag;
};

void normalize(IneqRow& r) {
  Int num_l = 1, den_g = 0;
  // scale so entries become a primitive integer vector (positive leading
  // scale); keeps Fourier-Motzkin output small
  Int L = 1;
  for (auto& x : r.c) L = lcm(L, x.get_den());
  Int g = 0;
  for (auto& x : r.c) {
    Rat y = x * Rat(L);
    g = gcd(g, y.get_num());
  }
  if (g == 0) g = 1;
  for (auto& x : r.c) x = x * Rat(L) / Rat(g);
  (void)num_l;
  (void)den_g;
}

}  // namespace

FeasResult feasible_space(const FeasibilityProblem& prob) {
  FeasResult res;
  int k = (int)prob.cusp.size();
  bool has_fricke = prob.base_fricke.has_value();
  if (has_fricke && (int)prob.cusp_fricke.size() != k)
    throw std::invalid_argument("feasible_space: fricke basis size mismatch");

  // --- linear constraints ---
  int m = (int)prob.constraints.size();
  QMat A(m, k), b(m, 1);
  for (int i = 0; i < m; ++i) {
    const auto& cst = prob.constraints[i];
    const QSeries& base = cst.on_fricke ? *prob.base_fricke : prob.base;
    if (cst.on_fricke && !has_fricke)
      throw std::invalid_argument("feasible_space: fricke constraint without fricke data");
    for (int j = 0; j < k; ++j) {
      const QSeries& f = cst.on_fricke ? prob.cusp_fricke[j] : prob.cusp[j];
      if (cst.k > f.kmax) throw std::invalid_argument("feasible_space: constraint beyond truncation");
      A.at(i, j) = f.at(cst.k);
    }
    if (cst.k > base.kmax) throw std::invalid_argument("feasible_space: constraint beyond truncation");
    b.at(i, 0) = cst.value - base.at(cst.k);
  }

  // Gaussian elimination for particular solution + kernel
  QMat M = A;
  QMat rhs = b;
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < k && row < m; ++col) {
    int pr = -1;
    for (int r = row; r < m; ++r)
      if (M.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < k; ++j) std::swap(M.at(pr, j), M.at(row, j));
    std::swap(rhs.at(pr, 0), rhs.at(row, 0));
    Rat f = 1 / M.at(row, col);
    for (int j = 0; j < k; ++j) M.at(row, j) *= f;
    rhs.at(row, 0) *= f;
    for (int r = 0; r < m; ++r) {
      if (r == row || M.at(r, col) == 0) continue;
      Rat g = M.at(r, col);
      for (int j = 0; j < k; ++j) M.at(r, j) -= g * M.at(row, j);
      rhs.at(r, 0) -= g * rhs.at(row, 0);
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int r = row; r < m; ++r)
    if (rhs.at(r, 0) != 0) {
      res.consistent = false;
      return res;
    }
  res.consistent = true;

  std::vector<bool> is_piv(k, false);
  for (int c : pivcol) is_piv[c] = true;
  res.particular.assign(k, Rat(0));
  for (int r = 0; r < row; ++r) res.particular[pivcol[r]] = rhs.at(r, 0);
  for (int c = 0; c < k; ++c) {
    if (is_piv[c]) continue;
    std::vector<Rat> dir(k, Rat(0));
    dir[c] = 1;
    for (int r = 0; r < row; ++r) dir[pivcol[r]] = -M.at(r, c);
    res.kernel.push_back(dir);
  }
  res.family_dim = (int)res.kernel.size();

  auto member_series = [&](const std::vector<Rat>& params, bool fricke_side) {
    QSeries s = fricke_side ? *prob.base_fricke : prob.base;
    for (int j = 0; j < k; ++j) {
      const QSeries& f = fricke_side ? prob.cusp_fricke[j] : prob.cusp[j];
      if (params[j] != 0) s = qs_add(s, qs_scale(f.truncated(s.kmax), params[j]));
    }
    return s;
  };
  res.particular_series = member_series(res.particular, false);

  // --- nonnegativity over the horizon ---
  // coefficient of index t (side): base + sum a_j f_j with a = particular +
  // sum_i y_i kernel_i; build rows in the free parameters y.
  std::vector<IneqRow> rows;
  auto add_side = [&](bool fricke_side) {
    const QSeries& base = fricke_side ? *prob.base_fricke : prob.base;
    long hmax = std::min(prob.horizon, base.kmax);
    for (int j = 0; j < k; ++j) {
      const QSeries& f = fricke_side ? prob.cusp_fricke[j] : prob.cusp[j];
      hmax = std::min(hmax, f.kmax);
    }
    for (long t = 0; t <= hmax; ++t) {
      IneqRow r;
      r.tag = {fricke_side ? 1 : 0, t};
      r.c.assign(res.family_dim + 1, Rat(0));
      Rat c0 = base.at(t);
      std::vector<Rat> cf(k, Rat(0));
      for (int j = 0; j < k; ++j)
        cf[j] = (fricke_side ? prob.cusp_fricke[j] : prob.cusp[j]).at(t);
      for (int j = 0; j < k; ++j) c0 += cf[j] * res.particular[j];
      r.c[0] = c0;
      for (int i = 0; i < res.family_dim; ++i) {
        Rat ci(0);
        for (int j = 0; j < k; ++j) ci += cf[j] * res.kernel[i][j];
        r.c[i + 1] = ci;
      }
      rows.push_back(r);
    }
  };
  add_side(false);
  if (has_fricke && prob.nonneg_on_fricke) add_side(true);

  if (res.family_dim == 0) {
    res.feasible = true;
    for (auto& r : rows)
      if (r.c[0] < 0) {
        res.feasible = false;
        res.negative_coefficient = true;
        res.first_negative = r.tag;
        break;
      }
    if (res.feasible) res.feasible_point = {};
    return res;
  }

  if (res.family_dim == 1) {
    // interval intersection with witness extraction
    bool have_lo = false, have_hi = false;
    Rat lo(0), hi(0);
    std::pair<int, long> lo_tag, hi_tag;
    for (auto& r : rows) {
      if (r.c[1] == 0) {
        if (r.c[0] < 0) {
          res.feasible = false;
          res.negative_coefficient = true;
          res.first_negative = r.tag;
          return res;
        }
        continue;
      }
      Rat bound = -r.c[0] / r.c[1];
      if (r.c[1] > 0) {  // y >= bound
        if (!have_lo || bound > lo) {
          lo = bound;
          lo_tag = r.tag;
          have_lo = true;
        }
      } else {  // y <= bound
        if (!have_hi || bound < hi) {
          hi = bound;
          hi_tag = r.tag;
          have_hi = true;
        }
      }
    }
    if (have_lo && have_hi && lo > hi) {
      res.feasible = false;
      res.witness = {{hi_tag, lo_tag}};
      return res;
    }
    res.feasible = true;
    Rat y = have_lo ? lo : (have_hi ? hi : Rat(0));
    res.feasible_point = {y};
    return res;
  }

  // Fourier-Motzkin elimination for 2 or 3 free parameters
  std::vector<IneqRow> cur = rows;
  std::vector<std::vector<IneqRow>> stages;  // for back-substitution
  int vars = res.family_dim;
  for (int v = vars; v >= 1; --v) {
    stages.push_back(cur);
    std::vector<IneqRow> pos, neg, zero;
    for (auto& r : cur) {
      if (r.c[v] > 0)
        pos.push_back(r);
      else if (r.c[v] < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    std::vector<IneqRow> next = zero;
    for (auto& p : pos)
      for (auto& q : neg) {
        IneqRow r;
        r.tag = {-1, -1};
        r.c.assign(v, Rat(0));
        // p.c[v] * q + (-q.c[v]) * p eliminates var v
        Rat a = p.c[v], bq = -q.c[v];
        for (int j = 0; j < v; ++j) r.c[j] = a * q.c[j] + bq * p.c[j];
        normalize(r);
        next.push_back(r);
      }
    // dedup
    std::sort(next.begin(), next.end(),
              [](const IneqRow& x, const IneqRow& y) { return x.c < y.c; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const IneqRow& x, const IneqRow& y) { return x.c == y.c; }),
               next.end());
    for (auto& r : next) r.c.resize(v);  // drop eliminated coordinate slot
    cur = next;
  }
  bool feas = true;
  for (auto& r : cur)
    if (r.c[0] < 0) feas = false;
  res.feasible = feas;
  if (feas) {
    // back-substitute a feasible point
    std::vector<Rat> point(vars, Rat(0));
    for (int v = 1; v <= vars; ++v) {
      auto& stage = stages[vars - v];
      bool have_lo = false, have_hi = false;
      Rat lo(0), hi(0);
      for (auto& r : stage) {
        Rat val = r.c[0];
        for (int j = 1; j < v; ++j) val += r.c[j] * point[j - 1];
        if (r.c[v] == 0) continue;
        Rat bound = -val / r.c[v];
        if (r.c[v] > 0) {
          if (!have_lo || bound > lo) {
            lo = bound;
            have_lo = true;
          }
        } else {
          if (!have_hi || bound < hi) {
            hi = bound;
            have_hi = true;
          }
        }
      }
      point[v - 1] = have_lo ? lo : (have_hi ? hi : Rat(0));
    }
    res.feasible_point = point;
  }
  return res;
}

}  // namespace latt
