#pragma once

#include <memory>

#include "latt14/matrix.hpp"

namespace latt {

struct Layer;

// A positive definite lattice given by its (exact rational) Gram matrix.
// Vectors are integer coordinate tuples w.r.t. the implicit basis.
// Immutable after construction; caches are filled on first use.
class Lattice {
 public:
  Lattice(QMat gram, std::string label = "");

  int dim() const { return gram_.rows; }
  const QMat& gram() const { return gram_; }
  const std::string& label() const { return label_; }

  Rat det() const;
  bool is_integral() const;
  bool is_even() const;

  Rat norm(const std::vector<Int>& v) const;
  Rat inner(const std::vector<Int>& v, const std::vector<Int>& w) const;

  Lattice dual(const std::string& label = "") const;
  Lattice rescaled(const Rat& c, const std::string& label = "") const;
  // Gram of the sublattice spanned by the given rows (coordinates in this
  // lattice's basis); rows must be linearly independent.
  Lattice sublattice(const ZMat& basis_rows, const std::string& label = "") const;

  // Minimum and the full layer at the minimum.
  Rat minimum() const;
  const Layer& min_layer() const;
  Layer layer(const Rat& a) const;
  // Antipodal representatives of all vectors with 0 < norm <= bound.
  std::vector<std::vector<Int>> short_vectors(const Rat& bound) const;
  // Norm histogram: (norm, count) for 0 < norm <= bound, counts include both
  // signs. Deterministic ascending order.
  std::vector<std::pair<Rat, Int>> norm_histogram(const Rat& bound) const;

  Int kissing_number() const;  // |Min(L)|

 private:
  QMat gram_;
  std::string label_;
  mutable std::shared_ptr<Layer> min_layer_;  // filled once
  mutable std::optional<Rat> det_;
};

// One layer L_a: all vectors of norm exactly a, stored as one representative
// per antipodal pair (first nonzero coordinate positive), sorted
// lexicographically.
struct Layer {
  Rat norm;
  std::vector<std::vector<Int>> reps;
  Int count() const { return Int(2) * Int((long)reps.size()); }
};

// ((m/b)^n, (b/r)^n): determinant bounds from the Hermite constant bound b.
std::pair<Rat, Rat> det_bounds(int n, const Rat& m, const Rat& r, const Rat& b);

// Squarefree part of a positive rational determinant.
Int square_class(const Rat& d);

struct SublatticeSpec {
  ZMat generators;  // rows, in the parent's basis
  Int index;
};

// Even sublattice {v : norm(v) even} and, when the 3-adic hypothesis holds,
// the sublattice {v : norm(v) in 3*Z_3}; indices lie in {1,2,4} / {1,3}.
struct ParitySublattices {
  std::optional<SublatticeSpec> even;     // requires 2-integral norms
  std::optional<SublatticeSpec> trace3;   // requires hypothesis of the 3-case
  bool trace3_hypothesis_holds = false;
};
ParitySublattices parity_sublattices(const Lattice& L);

Lattice orthogonal_sum(const Lattice& A, const Lattice& B, const std::string& label = "");

}  // namespace latt
