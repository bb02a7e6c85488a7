#include "latt14/params.hpp"

#include <algorithm>

namespace latt {

std::vector<ParamTriple> general_type_search(int n, long s_min, long s_max,
                                             const Rat& gamma_sq_bound) {
  if (n != 14)
    throw std::invalid_argument("general_type_search: specialized to n = 14");
  std::vector<ParamTriple> out;
  const long K = 12 * 14 * 16;  // 2688
  for (long n2 = 2; n2 <= 26; ++n2) {
    for (long s = s_min; s <= s_max; ++s) {
      // 3r^2 - 16r - K*n2/s = 0  =>  r = (16 + sqrt(256 + 12*K*n2/s)) / 6
      Rat disc = Rat(256) + rat(12 * K * n2, s);
      auto sq = rat_sqrt_exact(disc);
      if (!sq) continue;
      Rat r = (Rat(16) + *sq) / 6;
      if (r < Rat(16, 3) || r > gamma_sq_bound) continue;
      if (r >= 8) continue;  // gamma bound keeps r < 8 anyway
      if (Rat(n2) > r / (8 - r)) continue;
      if (!is_integer(Rat(s) * r / 14)) continue;
      if (!is_integer(Rat(3 * s) * r * r / 224)) continue;
      out.push_back({n2, s, r, true});
    }
  }
  std::sort(out.begin(), out.end(), [](const ParamTriple& a, const ParamTriple& b) {
    return std::tie(a.n2, a.s) < std::tie(b.n2, b.s);
  });
  return out;
}

std::vector<MinimalTypeRow> minimal_type_search(int n) {
  if (n != 14)
    throw std::invalid_argument("minimal_type_search: specialized to n = 14");
  std::vector<MinimalTypeRow> rows;
  for (long s1 = 5; s1 <= 83; ++s1) {
    MinimalTypeRow row{s1, {}};
    long n2_max = (4 * s1) / 3;  // r <= 32/3 caps n2 at 4*s1/3
    for (long n2 = 1; n2 <= n2_max; ++n2) {
      Rat disc = Rat(256) + rat(1536 * n2, s1);
      auto sq = rat_sqrt_exact(disc);
      if (!sq) continue;
      Rat r = (Rat(16) + *sq) / 6;
      if (r <= Rat(16, 3) || r > Rat(32, 3)) continue;
      if (r < 8) {
        Rat bound = r / (8 - r);
        if (Rat(n2) > bound) continue;
        // equality forces n2 vectors with pairwise inner product m/2, a
        // simplex configuration of rank n2; impossible beyond the dimension
        if (Rat(n2) == bound && n2 > n) continue;
      } else if (r == 8) {
        if (n2 > 2 * (n - 1)) continue;
      }
      row.solutions.push_back({n2, s1, r, true});
    }
    if (!row.solutions.empty()) rows.push_back(row);
  }
  return rows;
}

}  // namespace latt
