#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latt14/lattice.hpp"

using namespace latt;

static QMat qm(std::vector<std::vector<long>> rows) {
  QMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

TEST_CASE("construction rejects bad grams") {
  CHECK_THROWS(Lattice(qm({{1, 2}, {3, 4}})));            // not symmetric
  CHECK_THROWS(Lattice(qm({{1, 2}, {2, 1}})));            // not positive definite
  CHECK_NOTHROW(Lattice(qm({{2, 1}, {1, 2}})));
}

TEST_CASE("dual of A2 and involution") {
  Lattice a2(qm({{2, 1}, {1, 2}}));
  Lattice d = a2.dual();
  CHECK(d.gram().at(0, 0) == Rat(2, 3));
  CHECK(d.gram().at(0, 1) == Rat(-1, 3));
  CHECK(d.dual().gram() == a2.gram());
  CHECK(a2.det() * d.det() == 1);
}

TEST_CASE("rescale") {
  Lattice a2(qm({{2, 1}, {1, 2}}));
  CHECK(a2.rescaled(Rat(3)).minimum() == 6);
  CHECK(a2.rescaled(Rat(1)).gram() == a2.gram());
  CHECK_THROWS(a2.rescaled(Rat(0)));
  CHECK_THROWS(a2.rescaled(Rat(-2)));
}

TEST_CASE("det bounds") {
  auto [lo, hi] = det_bounds(14, Rat(10), Rat(2, 3), rat_parse("2776/1000"));
  CHECK(lo > 61962300);
  CHECK(lo < 61962302);
  CHECK(hi > 471140123);
  CHECK(hi < 471140125);
  auto [l2, h2] = det_bounds(3, Rat(2), Rat(2), Rat(2));
  CHECK(l2 == 1);
  CHECK(h2 == 1);
  CHECK_THROWS(det_bounds(3, Rat(0), Rat(1), Rat(2)));
}

TEST_CASE("square class") {
  CHECK(square_class(Rat(9, 4)) == 1);
  CHECK(square_class(Rat(12)) == 3);
  CHECK_THROWS(square_class(Rat(-1)));
}

TEST_CASE("parity sublattices") {
  // Z^1: even part has index 2
  Lattice z1(qm({{1}}));
  auto p = parity_sublattices(z1);
  REQUIRE(p.even.has_value());
  CHECK(p.even->index == 2);

  // already even lattice: index 1
  Lattice a2(qm({{2, 1}, {1, 2}}));
  p = parity_sublattices(a2);
  REQUIRE(p.even.has_value());
  CHECK(p.even->index == 1);

  // trace-3 sublattice of A2 has index 3 (norms 2(a^2+ab+b^2))
  REQUIRE(p.trace3.has_value());
  CHECK(p.trace3->index == 3);
  // verify: all basis vectors of the sublattice have norm divisible by 3
  Lattice sub = a2.sublattice(p.trace3->generators);
  for (int i = 0; i < 2; ++i) {
    Rat nn = sub.gram().at(i, i);
    CHECK(nn.get_den() == 1);
    CHECK(nn.get_num() % 3 == 0);
  }
}

TEST_CASE("orthogonal sum") {
  Lattice a1(qm({{2}}));
  Lattice s = orthogonal_sum(a1, a1);
  CHECK(s.dim() == 2);
  CHECK(s.det() == 4);
  CHECK(s.minimum() == 2);
  CHECK(s.kissing_number() == 4);
}
