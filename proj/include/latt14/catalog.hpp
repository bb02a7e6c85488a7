#pragma once

#include "latt14/lattice.hpp"

namespace latt {

// Root lattices in their Cartan bases plus the special Gram matrices used by
// the classification. Names for the CLI: "A5", "E6+E8", "A2*3" (scale), "(2)"
// (one-dimensional), "L4", "f1", "G2_14", and "+"-separated sums thereof.
Lattice root_A(int n);
Lattice root_D(int n);  // n >= 3
Lattice root_E(int n);  // n in {6,7,8}
Lattice one_dim(const Rat& a);
Lattice lattice_L4();    // maximal even, det 25
Lattice lattice_f1();    // Gram [[4,1],[1,4]]
Lattice lattice_g2_14(); // the extremal 3-modular 14-dimensional lattice

Lattice catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace latt
