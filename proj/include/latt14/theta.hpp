#pragma once

#include "latt14/lattice.hpp"
#include "latt14/qseries.hpp"

namespace latt {

// Theta series of L up to norm B. The unit defaults to 2 for even lattices,
// 1 for odd integral ones, and the norm quantum 1/denominator otherwise.
QSeries theta_series(const Lattice& L, const Rat& B);
QSeries theta_series(const Lattice& L, const Rat& B, const Rat& unit);

// A harmonic polynomial of degree 2 or 4 given by its coefficient tensor in
// lattice coordinates. Degree 2: p(c) = c^T S c. Degree 4: p(c) =
// sum T[{i,j,k,l}] c_i c_j c_k c_l over sorted index quadruples.
struct HarmonicPoly {
  int degree = 2;
  QMat S;                                         // degree 2
  std::map<std::array<int, 4>, Rat> T;            // degree 4, sorted indices
  Rat eval(const std::vector<Int>& c) const;
};

// Checks harmonicity against the lattice's Gram (Laplacian contraction with
// G^{-1} must vanish) and sums p over each layer up to B.
QSeries harmonic_theta(const Lattice& L, const HarmonicPoly& p, const Rat& B);
bool is_harmonic(const Lattice& L, const HarmonicPoly& p);

// Fricke image realized as the theta series of sqrt(N) L^*; requires that
// lattice to be even. Constant term is 1 by construction.
QSeries fricke_image(const Lattice& L, long N, const Rat& B);

// Per-layer 4-design check for all nonempty layers with norm <= B.
struct UniversalReport {
  Rat checked_up_to;
  bool all_layers_4designs = true;
  std::vector<Rat> failing_norms;
};
UniversalReport universal_check(const Lattice& L, const Rat& B);

}  // namespace latt
