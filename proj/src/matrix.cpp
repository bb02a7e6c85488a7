#include "latt14/matrix.hpp"

namespace latt {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("QMat mul: shape mismatch");
  QMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  QMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  QMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

QMat QMat::scaled(const Rat& c) const {
  QMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * c;
  return r;
}

bool QMat::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Rat QMat::det() const {
  if (rows != cols) throw std::invalid_argument("det: not square");
  QMat m = *this;
  Rat d(1);
  for (int c = 0; c < cols; ++c) {
    int piv = -1;
    for (int r = c; r < rows; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (int r = c + 1; r < rows; ++r) {
      if (m.at(r, c) == 0) continue;
      Rat f = m.at(r, c) * inv;
      for (int j = c; j < cols; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

QMat QMat::inverse() const {
  if (rows != cols) throw std::invalid_argument("inverse: not square");
  int n = rows;
  QMat m = *this, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("inverse: singular");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Rat f = 1 / m.at(c, c);
    for (int j = 0; j < n; ++j) {
      m.at(c, j) *= f;
      inv.at(c, j) *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c) == 0) continue;
      Rat g = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= g * m.at(c, j);
        inv.at(r, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

int QMat::rank() const {
  QMat m = *this;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rk, j));
    Rat f = 1 / m.at(rk, c);
    for (int r = rk + 1; r < rows; ++r) {
      if (m.at(r, c) == 0) continue;
      Rat g = m.at(r, c) * f;
      for (int j = c; j < cols; ++j) m.at(r, j) -= g * m.at(rk, j);
    }
    ++rk;
  }
  return rk;
}

std::optional<QMat> QMat::solve_left(const QMat& rhs) const {
  // x * A = b  <=>  A^T x^T = b^T; Gaussian elimination on the augmented
  // system, consistent also for non-square A.
  QMat At = transpose();
  QMat bt = rhs.transpose();
  int n = At.rows, m = At.cols, k = bt.cols;
  std::vector<int> pivcol;
  int rk = 0;
  for (int c = 0; c < m && rk < n; ++c) {
    int piv = -1;
    for (int r = rk; r < n; ++r)
      if (At.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rk) {
      for (int j = 0; j < m; ++j) std::swap(At.at(piv, j), At.at(rk, j));
      for (int j = 0; j < k; ++j) std::swap(bt.at(piv, j), bt.at(rk, j));
    }
    Rat f = 1 / At.at(rk, c);
    for (int j = 0; j < m; ++j) At.at(rk, j) *= f;
    for (int j = 0; j < k; ++j) bt.at(rk, j) *= f;
    for (int r = 0; r < n; ++r) {
      if (r == rk || At.at(r, c) == 0) continue;
      Rat g = At.at(r, c);
      for (int j = 0; j < m; ++j) At.at(r, j) -= g * At.at(rk, j);
      for (int j = 0; j < k; ++j) bt.at(r, j) -= g * bt.at(rk, j);
    }
    pivcol.push_back(c);
    ++rk;
  }
  for (int r = rk; r < n; ++r)
    for (int j = 0; j < k; ++j)
      if (bt.at(r, j) != 0) return std::nullopt;
  QMat xt(m, k);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < k; ++j) xt.at(pivcol[i], j) = bt.at(i, j);
  return xt.transpose();
}

Int QMat::denominator_lcm() const {
  Int l = 1;
  for (auto& x : a) l = lcm(l, x.get_den());
  return l;
}

ZMat ZMat::identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::transpose() const {
  ZMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

ZMat ZMat::operator*(const ZMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("ZMat mul: shape mismatch");
  ZMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Int ZMat::det() const {
  if (rows != cols) throw std::invalid_argument("det: not square");
  int n = rows;
  ZMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Int(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j)
        m.at(r, j) = (m.at(c, c) * m.at(r, j) - m.at(r, c) * m.at(c, j)) / prev;
      m.at(r, c) = 0;
    }
    prev = m.at(c, c);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

QMat ZMat::to_q() const { return to_qmat(*this); }

QMat to_qmat(const ZMat& m) {
  QMat q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

ZMat to_zmat(const QMat& m) {
  ZMat z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (m.a[i].get_den() != 1) throw std::invalid_argument("to_zmat: non-integral entry");
    z.a[i] = m.a[i].get_num();
  }
  return z;
}

std::pair<ZMat, ZMat> hnf(const ZMat& A) {
  int n = A.rows, m = A.cols;
  ZMat H = A, U = ZMat::identity(n);
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    // gcd-reduce the column below `row`
    while (true) {
      int piv = -1;
      for (int r = row; r < n; ++r)
        if (H.at(r, col) != 0 && (piv < 0 || abs(H.at(r, col)) < abs(H.at(piv, col)))) piv = r;
      if (piv < 0) break;
      if (piv != row) {
        for (int j = 0; j < m; ++j) std::swap(H.at(piv, j), H.at(row, j));
        for (int j = 0; j < n; ++j) std::swap(U.at(piv, j), U.at(row, j));
      }
      bool done = true;
      for (int r = row + 1; r < n; ++r) {
        if (H.at(r, col) == 0) continue;
        Int q = floor_div(H.at(r, col), H.at(row, col));
        if (q != 0) {
          for (int j = 0; j < m; ++j) H.at(r, j) -= q * H.at(row, j);
          for (int j = 0; j < n; ++j) U.at(r, j) -= q * U.at(row, j);
        }
        if (H.at(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (H.at(row, col) == 0) continue;
    if (H.at(row, col) < 0) {
      for (int j = 0; j < m; ++j) H.at(row, j) = -H.at(row, j);
      for (int j = 0; j < n; ++j) U.at(row, j) = -U.at(row, j);
    }
    for (int r = 0; r < row; ++r) {
      Int q = floor_div(H.at(r, col), H.at(row, col));
      if (q != 0) {
        for (int j = 0; j < m; ++j) H.at(r, j) -= q * H.at(row, j);
        for (int j = 0; j < n; ++j) U.at(r, j) -= q * U.at(row, j);
      }
    }
    ++row;
  }
  return {H, U};
}

ZMat kernel_basis(const ZMat& A) {
  auto [H, U] = hnf(A);
  // rows of U matching zero rows of H span the kernel
  std::vector<int> zr;
  for (int r = 0; r < H.rows; ++r) {
    bool zero = true;
    for (int j = 0; j < H.cols; ++j)
      if (H.at(r, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zr.push_back(r);
  }
  ZMat K((int)zr.size(), A.rows);
  for (size_t i = 0; i < zr.size(); ++i)
    for (int j = 0; j < A.rows; ++j) K.at(i, j) = U.at(zr[i], j);
  return K;
}

}  // namespace latt
