#pragma once

#include "latt14/matrix.hpp"

namespace latt {

// Smith normal form D = U*A*V with U, V unimodular and d_1 | d_2 | ... >= 0.
struct SmithResult {
  ZMat D, U, V;
  std::vector<Int> divisors;  // nonzero diagonal entries
};

SmithResult smith(const ZMat& A);

// Elementary divisors of a nonsingular rational square matrix: the Smith
// diagonal over Z of the integer matrix c*M, divided by c, each fraction in
// lowest terms; d_1 | d_2 | ... as rationals.
std::vector<Rat> elementary_divisors(const QMat& M);

// Product of the denominators of elementary_divisors(F).
Int dual_subset_divisor(const QMat& F);

}  // namespace latt
