#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latt14/catalog.hpp"
#include "latt14/neighbors.hpp"

using namespace latt;

TEST_CASE("neighbors of E8 at 2 are all E8") {
  Lattice e8 = root_E(8);
  auto nb = kneser_neighbors(e8, Int(2));
  CHECK(!nb.empty());
  for (size_t i = 0; i < nb.size(); i += 17)  // spot-check a subset
    CHECK(is_isometric(nb[i], e8));
  // closure gives class number 1 with mass 1/|Aut|
  auto gen = enumerate_genus(e8, {Int(2)});
  CHECK(gen.closure_exhausted);
  CHECK(gen.classes.size() == 1);
  CHECK(gen.mass_sum == ratq(Int(1), Int(696729600)));
}

TEST_CASE("neighbor of a neighbor returns to the start class") {
  Lattice a2a2 = catalog("A2+A2");
  auto nb = kneser_neighbors(a2a2, Int(2));
  for (auto& N : nb) {
    auto back = kneser_neighbors(N, Int(2));
    bool found = false;
    for (auto& B : back)
      if (is_isometric(B, a2a2)) found = true;
    CHECK(found);
  }
}

TEST_CASE("discriminant group of A2") {
  auto d = discriminant_group(root_A(2));
  CHECK(d.size == 3);
  REQUIRE(d.orders.size() == 1);
  CHECK(d.orders[0] == 3);
}

TEST_CASE("maximal even overlattices") {
  // E8 is already maximal
  auto m = maximal_even_overlattices(root_E(8));
  CHECK(m.size() == 1);
  CHECK(m[0].det() == 1);

  // D4 is maximal even (anisotropic discriminant form)
  auto md = maximal_even_overlattices(root_D(4));
  CHECK(md.size() == 1);
  CHECK(md[0].det() == 4);

  // A1+A1+A1+A1 climbs to D4 (det 16 -> det 4)
  auto ma = maximal_even_overlattices(catalog("A1+A1+A1+A1"));
  REQUIRE(ma.size() == 1);
  CHECK(ma[0].det() == 4);
  CHECK(is_isometric(ma[0], root_D(4)));

  // index law: det(L) = index^2 * det(M)
  CHECK(catalog("A1+A1+A1+A1").det() == 4 * ma[0].det());
}

TEST_CASE("D8 grows to E8") {
  auto m = maximal_even_overlattices(root_D(8));
  REQUIRE(m.size() == 1);
  CHECK(m[0].det() == 1);
  CHECK(is_isometric(m[0], root_E(8)));
}
