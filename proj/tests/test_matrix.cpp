#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latt14/matrix.hpp"

using namespace latt;

static QMat qm(std::vector<std::vector<long>> rows) {
  QMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

static ZMat zm(std::vector<std::vector<long>> rows) {
  ZMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

TEST_CASE("det and inverse") {
  QMat a2 = qm({{2, 1}, {1, 2}});
  CHECK(a2.det() == 3);
  QMat inv = a2.inverse();
  CHECK(inv.at(0, 0) == Rat(2, 3));
  CHECK(inv.at(0, 1) == Rat(-1, 3));
  CHECK(a2 * inv == QMat::identity(2));

  ZMat z = zm({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}});
  CHECK(z.det() == -90);
  CHECK(to_qmat(z).det() == -90);
}

TEST_CASE("solve_left") {
  QMat A = qm({{1, 2}, {3, 4}});
  QMat b = qm({{5, 6}});
  auto x = A.solve_left(b);
  REQUIRE(x.has_value());
  CHECK((*x) * A == b);
}

TEST_CASE("hnf") {
  ZMat A = zm({{4, 6}, {2, 2}});
  auto [H, U] = hnf(A);
  CHECK(U * A == H);
  CHECK(abs(to_qmat(U).det()) == 1);
  CHECK(H.at(0, 0) > 0);
  // full-rank HNF is upper triangular
  CHECK(H.at(1, 0) == 0);
}

TEST_CASE("kernel") {
  ZMat A = zm({{1, 2}, {2, 4}, {3, 6}});
  ZMat K = kernel_basis(A);
  CHECK(K.rows == 2);
  ZMat prod = K * A;
  for (auto& e : prod.a) CHECK(e == 0);
}
