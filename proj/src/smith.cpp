#include "latt14/smith.hpp"

namespace latt {

SmithResult smith(const ZMat& A) {
  int n = A.rows, m = A.cols;
  ZMat D = A, U = ZMat::identity(n), V = ZMat::identity(m);

  auto row_op = [&](int r1, int r2, const Int& q) {  // row r1 -= q*row r2
    for (int j = 0; j < m; ++j) D.at(r1, j) -= q * D.at(r2, j);
    for (int j = 0; j < n; ++j) U.at(r1, j) -= q * U.at(r2, j);
  };
  auto col_op = [&](int c1, int c2, const Int& q) {  // col c1 -= q*col c2
    for (int i = 0; i < n; ++i) D.at(i, c1) -= q * D.at(i, c2);
    for (int i = 0; i < m; ++i) V.at(i, c1) -= q * V.at(i, c2);
  };
  auto row_swap = [&](int r1, int r2) {
    for (int j = 0; j < m; ++j) std::swap(D.at(r1, j), D.at(r2, j));
    for (int j = 0; j < n; ++j) std::swap(U.at(r1, j), U.at(r2, j));
  };
  auto col_swap = [&](int c1, int c2) {
    for (int i = 0; i < n; ++i) std::swap(D.at(i, c1), D.at(i, c2));
    for (int i = 0; i < m; ++i) std::swap(V.at(i, c1), V.at(i, c2));
  };

  int t = 0;
  while (t < n && t < m) {
    // locate smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (D.at(i, j) != 0 &&
            (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = true;
    for (int i = t + 1; i < n; ++i) {
      Int q = floor_div(D.at(i, t), D.at(t, t));
      if (q != 0) row_op(i, t, q);
      if (D.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m; ++j) {
      Int q = floor_div(D.at(t, j), D.at(t, t));
      if (q != 0) col_op(j, t, q);
      if (D.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;

    // pivot must divide the rest of the block
    bool divides = true;
    for (int i = t + 1; i < n && divides; ++i)
      for (int j = t + 1; j < m; ++j)
        if (D.at(i, j) % D.at(t, t) != 0) {
          row_op(t, i, Int(-1));  // mix the offending row in and restart
          divides = false;
          break;
        }
    if (!divides) continue;
    if (D.at(t, t) < 0) {
      for (int j = 0; j < m; ++j) D.at(t, j) = -D.at(t, j);
      for (int j = 0; j < n; ++j) U.at(t, j) = -U.at(t, j);
    }
    ++t;
  }

  SmithResult r{D, U, V, {}};
  for (int i = 0; i < std::min(n, m); ++i)
    if (D.at(i, i) != 0) r.divisors.push_back(D.at(i, i));
  return r;
}

std::vector<Rat> elementary_divisors(const QMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("elementary_divisors: not square");
  if (M.det() == 0) throw std::invalid_argument("elementary_divisors: singular");
  Int c = M.denominator_lcm();
  ZMat N(M.rows, M.cols);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      Rat x = M.at(i, j) * Rat(c);
      N.at(i, j) = x.get_num();
    }
  auto sm = smith(N);
  std::vector<Rat> out;
  for (auto& d : sm.divisors) {
    Rat x(d, c);
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

Int dual_subset_divisor(const QMat& F) {
  if (!F.is_symmetric()) throw std::invalid_argument("dual_subset_divisor: not symmetric");
  // positive definiteness via leading minors
  for (int k = 1; k <= F.rows; ++k) {
    QMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = F.at(i, j);
    if (sub.det() <= 0) throw std::invalid_argument("dual_subset_divisor: not positive definite");
  }
  Int prod = 1;
  for (auto& d : elementary_divisors(F)) prod *= d.get_den();
  return prod;
}

}  // namespace latt
