#pragma once

#include "latt14/isometry.hpp"

namespace latt {

// All p-neighbors of an even lattice, one per admissible isotropic line mod
// p. Primes dividing the determinant are allowed; inadmissible lines are
// skipped.
std::vector<Lattice> kneser_neighbors(const Lattice& L, const Int& p);

struct GenusClass {
  Lattice lattice;
  Int aut;
};

struct GenusEnumeration {
  std::vector<GenusClass> classes;
  Rat mass_sum;             // sum of 1/|Aut| over classes
  bool complete_by_mass = false;
  bool closure_exhausted = false;
  std::vector<Int> primes_used;
};

// Transitive closure under neighboring with isometry dedup. Stops early when
// the mass sum hits `target_mass`; otherwise closes the graph at the given
// primes and reports. `mass_ceiling`: refuse enumeration when the target
// mass exceeds it (mirrors the infeasible-genera strategy).
GenusEnumeration enumerate_genus(const Lattice& seed, const std::vector<Int>& primes,
                                 std::optional<Rat> target_mass = std::nullopt,
                                 std::optional<Rat> mass_ceiling = std::nullopt);

// Even overlattices that are maximal even, via isotropic climbing in the
// discriminant form; deduplicated up to isometry.
std::vector<Lattice> maximal_even_overlattices(const Lattice& L);

// Discriminant group data: generators (rational coordinate rows) and orders.
struct DiscGroup {
  std::vector<std::vector<Rat>> gens;
  std::vector<Int> orders;
  Int size;
};
DiscGroup discriminant_group(const Lattice& L);

}  // namespace latt
