#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latt14/smith.hpp"

using namespace latt;

static ZMat zm(std::vector<std::vector<long>> rows) {
  ZMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

TEST_CASE("smith basic") {
  ZMat A = zm({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  auto r = smith(A);
  CHECK(r.U * A * r.V == r.D);
  REQUIRE(r.divisors.size() == 3);
  // gcd of entries is 2, gcd of 2x2 minors is 4, |det| = 624
  CHECK(r.divisors[0] == 2);
  CHECK(r.divisors[1] == 2);
  CHECK(r.divisors[2] == 156);
  Int prod = r.divisors[0] * r.divisors[1] * r.divisors[2];
  CHECK(prod == abs(A.det()));
  for (size_t i = 0; i + 1 < r.divisors.size(); ++i)
    CHECK(r.divisors[i + 1] % r.divisors[i] == 0);
}

TEST_CASE("smith randomized transform identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + (int)(rng() % 4), m = 2 + (int)(rng() % 4);
    ZMat A(n, m);
    for (auto& e : A.a) e = (long)(rng() % 21) - 10;
    auto r = smith(A);
    CHECK(r.U * A * r.V == r.D);
    for (size_t i = 0; i + 1 < r.divisors.size(); ++i)
      CHECK(r.divisors[i + 1] % r.divisors[i] == 0);
  }
}

TEST_CASE("elementary divisors of rational matrices") {
  // identity
  QMat I = QMat::identity(3);
  auto d = elementary_divisors(I);
  for (auto& x : d) CHECK(x == 1);

  // Gram of A2 -> (1, 3)
  QMat a2(2, 2);
  a2.at(0, 0) = 2; a2.at(0, 1) = 1; a2.at(1, 0) = 1; a2.at(1, 1) = 2;
  d = elementary_divisors(a2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 3);

  // (2/3) A2: divisors 2/3 and 2 -> denominators 3*1
  QMat b = a2;
  for (auto& e : b.a) e *= Rat(1, 3);
  d = elementary_divisors(b);
  CHECK(d[0] == Rat(1, 3));
  CHECK(d[1] == 1);
}

TEST_CASE("dual_subset_divisor basic") {
  QMat I = QMat::identity(4);
  CHECK(dual_subset_divisor(I) == 1);
  QMat a2(2, 2);
  a2.at(0, 0) = Rat(4, 3); a2.at(0, 1) = Rat(2, 3);
  a2.at(1, 0) = Rat(2, 3); a2.at(1, 1) = Rat(4, 3);
  // (2/3)A2 in rank 2: elementary divisors (2/3, 2): denominator product 3
  CHECK(dual_subset_divisor(a2) == 3);
}
