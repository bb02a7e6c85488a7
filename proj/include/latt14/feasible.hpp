#pragma once

#include "latt14/qseries.hpp"

namespace latt {

struct FeasConstraint {
  bool on_fricke = false;
  long k = 0;
  Rat value;
};

// theta = base + sum a_i cusp[i] subject to exact value constraints on the
// series and (optionally) on its Fricke image, then nonnegativity of all
// coefficients up to the horizon.
struct FeasibilityProblem {
  QSeries base;
  std::vector<QSeries> cusp;
  std::optional<QSeries> base_fricke;
  std::vector<QSeries> cusp_fricke;  // same length as cusp when base_fricke set
  std::vector<FeasConstraint> constraints;
  long horizon = 40;  // in series indices
  bool nonneg_on_fricke = true;
};

struct FeasResult {
  bool consistent = false;  // linear constraints admit a solution
  int family_dim = 0;
  std::vector<Rat> particular;             // parameter vector of one solution
  std::vector<std::vector<Rat>> kernel;    // basis of the solution directions
  QSeries particular_series;               // base + particular
  bool feasible = false;                   // nonnegative member exists
  // for a 1-parameter family: the two coefficient indices whose constraints
  // clash ((side, k) pairs); side 0 = series, 1 = fricke image
  std::optional<std::array<std::pair<int, long>, 2>> witness;
  std::vector<Rat> feasible_point;         // parameters, when feasible
  bool negative_coefficient = false;       // unique solution has a coeff < 0
  std::pair<int, long> first_negative{-1, -1};
};

FeasResult feasible_space(const FeasibilityProblem& prob);

}  // namespace latt
