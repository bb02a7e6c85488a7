#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "latt14/catalog.hpp"
#include "latt14/io.hpp"

using namespace latt;

TEST_CASE("root lattices") {
  CHECK(root_A(5).det() == 6);
  CHECK(root_A(5).minimum() == 2);
  CHECK(root_D(14).det() == 4);
  CHECK(root_D(4).kissing_number() == 24);
  CHECK(root_E(6).det() == 3);
  CHECK(root_E(7).det() == 2);
  CHECK(root_E(8).det() == 1);
  CHECK(root_E(6).kissing_number() == 72);
  CHECK(root_E(7).kissing_number() == 126);
}

TEST_CASE("catalog parsing") {
  Lattice m = catalog("E6+E8");
  CHECK(m.dim() == 14);
  CHECK(m.det() == 3);
  CHECK(m.minimum() == 2);

  Lattice big = catalog("A2+A2+E8+(2)+(2)");
  CHECK(big.dim() == 14);
  CHECK(big.det() == 36);

  Lattice sc = catalog("A2*3");
  CHECK(sc.minimum() == 6);

  CHECK(catalog("L4").det() == 25);
  CHECK(catalog("L4").is_even());
  CHECK(catalog("f1").det() == 15);
  CHECK_THROWS(catalog("Q7"));
}

TEST_CASE("lattice file round trip") {
  Lattice a2 = catalog("A2");
  std::ostringstream os;
  lattice_write(os, a2);
  std::istringstream is(os.str());
  Lattice back = lattice_read(is);
  CHECK(back.gram() == a2.gram());
  CHECK(back.label() == "A2");

  // rational entries round trip bit-exactly
  Lattice d = a2.dual("A2 dual");
  std::ostringstream os2;
  lattice_write(os2, d);
  std::istringstream is2(os2.str());
  CHECK(lattice_read(is2).gram() == d.gram());
}
