#pragma once

#include "latt14/rational.hpp"

namespace latt {

// Dense matrices over Q and Z. Sizes here are tiny (<= ~30), so the
// implementations favor clarity and exactness over asymptotics.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(r * c) {}

  Rat& at(int i, int j) { return a[i * cols + j]; }
  const Rat& at(int i, int j) const { return a[i * cols + j]; }

  static QMat identity(int n);
  bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& c) const;

  bool is_symmetric() const;
  Rat det() const;                 // square only
  QMat inverse() const;            // throws if singular
  int rank() const;
  // Solve x * this = rhs (row-vector convention); nullopt if inconsistent.
  std::optional<QMat> solve_left(const QMat& rhs) const;

  Int denominator_lcm() const;
};

struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(r * c) {}

  Int& at(int i, int j) { return a[i * cols + j]; }
  const Int& at(int i, int j) const { return a[i * cols + j]; }

  static ZMat identity(int n);
  bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  ZMat transpose() const;
  ZMat operator*(const ZMat& o) const;
  Int det() const;  // Bareiss, exact

  QMat to_q() const;
};

QMat to_qmat(const ZMat& m);
// Fails if any entry is non-integral.
ZMat to_zmat(const QMat& m);

// Row-style Hermite normal form H = U*A with U unimodular; returns (H, U).
// H is upper-triangular-ish with pivots positive, entries above pivots
// reduced to [0, pivot).
std::pair<ZMat, ZMat> hnf(const ZMat& A);

// Basis (as rows) of the pure sublattice { x in Z^n : x*A = 0 }.
ZMat kernel_basis(const ZMat& A);

}  // namespace latt
