#pragma once

#include <map>

#include "latt14/rational.hpp"

namespace latt {

// Affine expression c0 + sum coeff_p * p over named parameters.
struct AffineExpr {
  Rat constant;
  std::map<std::string, Rat> coeffs;

  AffineExpr() : constant(0) {}
  explicit AffineExpr(const Rat& c) : constant(c) {}
  static AffineExpr param(const std::string& name, const Rat& coeff = Rat(1));

  AffineExpr operator+(const AffineExpr& o) const;
  AffineExpr operator-(const AffineExpr& o) const;
  AffineExpr scaled(const Rat& c) const;
  bool is_constant() const { return coeffs.empty(); }
  Rat eval(const std::map<std::string, Rat>& values) const;
  // substitute name := expr
  AffineExpr substituted(const std::string& name, const AffineExpr& e) const;
  std::string to_string() const;
};

// The 0/2/4-moment counting system for an antipodal design layer:
// half-set Y of size `a` of vectors of norm m in dimension n, counts a_i of
// pairs with |inner product| = i against a fixed y0 in Y:
//    1 + sum a_i                = a
//    m^2 + sum i^2 a_i          = a m^2 / n
//    m^4 + sum i^4 a_i          = 3 a m^4 / (n (n+2))
struct CountingProblem {
  int n = 14;
  Rat norm;
  // unknown name -> squared inner product value it counts
  std::vector<std::pair<std::string, Rat>> unknowns_sq;
  // cardinality: either the unknown name "a" (symbolic) or a given affine
  // expression (e.g. 21*t1)
  std::optional<AffineExpr> cardinality;
  // extra fixed assignments unknown -> expression
  std::map<std::string, AffineExpr> fixed;
  // when set, the reference vector alpha lies outside the layer and has this
  // squared length; the constant terms drop out of the equations
  std::optional<Rat> external_norm;
};

struct CountingSolution {
  bool consistent = false;               // false: the system forces a contradiction
  std::map<std::string, AffineExpr> counts;  // every unknown (and "a" if symbolic)
  std::vector<std::string> free_params;
  std::vector<AffineExpr> residuals;     // nonzero rows witnessing inconsistency
  std::string to_text() const;
};

// Solve the 3-equation linear system exactly; leftover unknowns become free
// parameters.
CountingSolution counting_system(const CountingProblem& p);

// Convenience: products given as plain rationals i (names a<i>).
CountingProblem counting_problem(int n, const Rat& norm, const std::vector<Rat>& products,
                                 std::optional<AffineExpr> cardinality = std::nullopt);

// Nonnegative-integer specializations of a solution under side constraints;
// each returned map assigns every free parameter.
struct SideConstraint {
  AffineExpr expr;
  enum Kind { nonneg, even, divisible } kind = nonneg;
  Int modulus = 2;
};
std::vector<std::map<std::string, Rat>> enumerate_feasible(
    const CountingSolution& sol, const std::vector<SideConstraint>& constraints,
    const std::map<std::string, std::pair<long, long>>& param_ranges);

}  // namespace latt
