#pragma once

#include "latt14/lattice.hpp"

namespace latt {

// Exact isometry testing and automorphism groups via backtracking over
// short-vector images with invariant pruning. Deterministic.
bool is_isometric(const Lattice& A, const Lattice& B);
// The transformation T (rows) with T * gram(A) * T^T = gram(B)... returned
// as the matrix mapping A-coordinates to B-coordinates; nullopt if none.
std::optional<ZMat> isometry(const Lattice& A, const Lattice& B);

struct AutGroup {
  Int order;
  std::vector<ZMat> generators;  // act on coordinates (rows)
};
AutGroup aut_group(const Lattice& L);
Int aut_order(const Lattice& L);

// Cheap isometry invariant for dedup: (det, min, kissing, theta prefix).
std::string isometry_fingerprint(const Lattice& L);

}  // namespace latt
