#pragma once

#include "latt14/rational.hpp"

namespace latt {

struct ParamTriple {
  long n2;
  long s;
  Rat r;
  bool bound_ok;  // n2 respects the N2 bound at this r (entries failing it
                  // are kept for comparison with the published case list)
};

// All (n2, s, r) with s in [s_min, s_max], r rational solving
// n2 = s*r*(3r-16)/(12*n*16), subject to the integrality conditions
// s*r/n in Z and 3*s*r^2/(16n) in Z, n2 >= 2, n2 <= r/(8-r), and
// 16/3 <= r <= gamma_sq_bound. Sorted by (n2, s).
std::vector<ParamTriple> general_type_search(int n, long s_min, long s_max,
                                             const Rat& gamma_sq_bound);

// Minimal-type search: n2 = s1*r*(3r-16)/2^7 with 5 <= s1 <= 83 and
// 16/3 < r <= 32/3; bound n2 <= r/(8-r) for r < 8 and n2 <= 2(n-1) for
// r = 8 (violations of the r = 8 bound are returned with bound_ok=false,
// matching the published case list). Grouped by s1.
struct MinimalTypeRow {
  long s1;
  std::vector<ParamTriple> solutions;  // s field holds s1
};
std::vector<MinimalTypeRow> minimal_type_search(int n);

}  // namespace latt
