#include "latt14/theta.hpp"

#include <array>

#include "latt14/design.hpp"

namespace latt {

static Rat default_unit(const Lattice& L) {
  if (L.is_even()) return Rat(2);
  if (L.is_integral()) return Rat(1);
  return ratq(Int(1), L.gram().denominator_lcm());
}

QSeries theta_series(const Lattice& L, const Rat& B) {
  return theta_series(L, B, default_unit(L));
}

QSeries theta_series(const Lattice& L, const Rat& B, const Rat& unit) {
  QSeries s;
  s.unit = unit;
  s.kmax = (long)rat_floor(B / unit).get_si();
  s.coeffs[0] = 1;
  for (auto& [nrm, cnt] : L.norm_histogram(B)) {
    Rat idx = nrm / unit;
    if (!is_integer(idx))
      throw std::invalid_argument("theta_series: norm " + rat_str(nrm) +
                                  " not a multiple of the unit");
    if (idx > s.kmax) continue;
    s.coeffs[(long)idx.get_num().get_si()] = Rat(cnt);
  }
  return s;
}

Rat HarmonicPoly::eval(const std::vector<Int>& c) const {
  if (degree == 2) {
    Rat v(0);
    for (int i = 0; i < S.rows; ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < S.cols; ++j)
        if (c[j] != 0) v += S.at(i, j) * Rat(c[i]) * Rat(c[j]);
    }
    return v;
  }
  Rat v(0);
  for (auto& [idx, coef] : T) {
    Rat term = coef;
    for (int t = 0; t < 4; ++t) term *= Rat(c[idx[t]]);
    v += term;
  }
  return v;
}

bool is_harmonic(const Lattice& L, const HarmonicPoly& p) {
  QMat Ginv = L.gram().inverse();
  int n = L.dim();
  if (p.degree == 2) {
    // Laplacian of c^T S c in Euclidean terms is 2 tr(G^{-1} S)
    Rat tr(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tr += Ginv.at(i, j) * p.S.at(j, i);
    return tr == 0;
  }
  // degree 4: the contraction sum_{k,l} T_{ijkl} (G^{-1})_{kl} must vanish
  // for every (i,j). Expand the sorted-tuple storage to full symmetry.
  auto full = [&](int i, int j, int k, int l) -> Rat {
    std::array<int, 4> key{i, j, k, l};
    std::sort(key.begin(), key.end());
    auto it = p.T.find(key);
    if (it == p.T.end()) return Rat(0);
    // stored coefficient is for the monomial; convert to symmetric-tensor
    // entry: monomial coeff = tensor entry * (#permutations of key)
    int perms = 24;
    std::map<int, int> mult;
    for (int t : key) mult[t]++;
    for (auto& [v, m] : mult)
      for (int f = 2; f <= m; ++f) perms /= f;
    return it->second / perms;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat acc(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += full(i, j, k, l) * Ginv.at(k, l);
      if (acc != 0) return false;
    }
  return true;
}

QSeries harmonic_theta(const Lattice& L, const HarmonicPoly& p, const Rat& B) {
  if (!is_harmonic(L, p)) throw std::invalid_argument("harmonic_theta: polynomial not harmonic");
  Rat unit = default_unit(L);
  QSeries s;
  s.unit = unit;
  s.kmax = (long)rat_floor(B / unit).get_si();
  for (auto& v : L.short_vectors(B)) {
    Rat nrm = L.norm(v);
    Rat idx = nrm / unit;
    if (!is_integer(idx) || idx > s.kmax) continue;
    long k = (long)idx.get_num().get_si();
    // antipodal pair: even degree, so both signs contribute equally
    s.coeffs[k] += 2 * p.eval(v);
  }
  for (auto it = s.coeffs.begin(); it != s.coeffs.end();)
    it = (it->second == 0) ? s.coeffs.erase(it) : std::next(it);
  return s;
}

QSeries fricke_image(const Lattice& L, long N, const Rat& B) {
  Lattice M = L.dual().rescaled(Rat(N));
  if (!M.is_even())
    throw std::invalid_argument("fricke_image: sqrt(N) L* is not even (level condition)");
  return theta_series(M, B, Rat(2));
}

UniversalReport universal_check(const Lattice& L, const Rat& B) {
  UniversalReport rep;
  rep.checked_up_to = B;
  auto hist = L.norm_histogram(B);
  for (auto& [nrm, cnt] : hist) {
    Layer lay = L.layer(nrm);
    auto mc = moment_check(L, lay);
    if (!mc.is_4design) {
      rep.all_layers_4designs = false;
      rep.failing_norms.push_back(nrm);
    }
  }
  return rep;
}

}  // namespace latt
