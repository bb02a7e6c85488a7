#pragma once

#include "latt14/lattice.hpp"

namespace latt {

// Degree-2/4 moment verdict for a layer. Defect tensors are stored flattened
// (the distinct entries i<=j resp. i<=j<=k<=l).
struct DesignReport {
  Int s;                      // half the layer cardinality
  Rat m;                      // layer norm
  bool spans = false;
  bool is_4design = false;
  std::vector<Rat> d2_defect;  // Sym^2 entries, zero iff (D2) holds for all alpha
  std::vector<Rat> d4_defect;  // Sym^4 entries, zero iff (D4) holds for all alpha
  bool d22_consistent = false;
  std::string to_text() const;
};

// Exact tensor comparison: builds sum x (x) x and sum x^(x)4 in dual
// coordinates and compares against the (D2)/(D4) targets. No sampling.
DesignReport moment_check(const Lattice& L, const Layer& X);

// Full strongly-perfect style report for a lattice.
struct PerfectionReport {
  DesignReport primal;
  DesignReport dual;
  bool is_strongly_perfect = false;
  bool is_dual_strongly_perfect = false;
  Rat gamma_product;  // min(L) * min(L*)
  std::string to_text() const;
};
PerfectionReport perfection_report(const Lattice& L);

// D2, D4 and (D4-D2)/12 for hypothetical parameters; the engine behind the
// exclusion lemmas.
struct IntegralityWitness {
  Rat d2, d4, e12;
  bool d2_integral, d4_integral, e12_integral;
};
IntegralityWitness integrality_witness(const Int& s, int n, const Rat& m, const Rat& alpha_norm);

// N_2(alpha) data: minimal vectors with (x, alpha) = 2.
struct N2Config {
  std::vector<std::vector<Int>> members;  // lattice coordinates
  Rat c;
  bool applicable = false;      // |(x,alpha)| <= 2 held for all minimal x
  bool cardinality_ok = false;  // |N2| == c*(alpha,alpha)/2
  bool sum_ok = false;          // sum x == c * alpha
};
// alpha is given by rational coordinates in L's basis.
N2Config n2_config(const Lattice& L, const std::vector<Rat>& alpha);

// rm < 8: rm/(8-rm);  rm == 8: 2(n-1);  rm > 8: rejected.
Rat n2_bound(int n, const Rat& r, const Rat& m);

// sum_{x1,x2 in X} (x1,x2)^{2t} - c_t |X|^2 m^t  (>= 0; == 0 iff 2t-design).
Rat design_defect(const Lattice& L, const Layer& X, int t);

enum class MinimalTypeClass { below_bound, minimal, general };
std::pair<Rat, MinimalTypeClass> minimal_type(const Lattice& L);

// Decomposition of equal-norm vectors with pairwise nonpositive inner
// products and zero sum into indecomposable components.
struct NonpositiveDecomposition {
  bool hypothesis_ok = false;
  std::pair<int, int> offending_pair{-1, -1};
  std::vector<std::vector<int>> components;  // index sets
  int rank = 0;
};
// rows of V are vectors in coordinates w.r.t. gram.
NonpositiveDecomposition nonpositive_decompose(const QMat& V, const QMat& gram);

}  // namespace latt
