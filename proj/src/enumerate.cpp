#include "latt14/enumerate.hpp"

#include <cmath>
#include <cstring>

namespace latt {

namespace {

// Exact LDL^T data for v^T G v = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2.
struct LdlQ {
  int n;
  std::vector<Rat> d;
  std::vector<std::vector<Rat>> m;
};

LdlQ ldl_exact(const ZMat& G) {
  int n = G.rows;
  std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = Rat(G.at(i, j));
  LdlQ out;
  out.n = n;
  out.d.resize(n);
  out.m.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) {
      Rat f = c[k][i] / c[k][k];
      for (int j = i; j < n; ++j) c[i][j] -= f * c[k][j];
    }
    if (c[i][i] <= 0) throw std::invalid_argument("enumerate: Gram not positive definite");
    out.d[i] = c[i][i];
    for (int j = i + 1; j < n; ++j) out.m[i][j] = c[i][j] / c[i][i];
  }
  return out;
}

// Floating-point engine with slack margin; exact acceptance at the leaves.
struct FloatEnum {
  int n;
  const ZMat& G;
  Int boundz;
  double bound_slack;
  std::vector<std::vector<double>> mu, sigma;
  std::vector<double> d, rho, center;
  std::vector<long> x;
  // exact partial sums: zsig[i][l] = sum_{j >= l} G[i][j] x[j], zrho[l] = suffix norm
  std::vector<std::vector<__int128>> zsig;
  std::vector<__int128> zrho;
  const std::function<void(const std::vector<long>&, const Int&)>& cb;

  FloatEnum(const ZMat& g, const Int& b,
            const std::function<void(const std::vector<long>&, const Int&)>& cb_)
      : n(g.rows), G(g), boundz(b), cb(cb_) {
    LdlQ l = ldl_exact(g);
    mu.assign(n, std::vector<double>(n, 0.0));
    d.resize(n);
    for (int i = 0; i < n; ++i) {
      d[i] = l.d[i].get_d();
      for (int j = i + 1; j < n; ++j) mu[i][j] = l.m[i][j].get_d();
    }
    double bd = boundz.get_d();
    bound_slack = bd * (1.0 + 1e-9) + 1e-6;
    sigma.assign(n + 1, std::vector<double>(n + 1, 0.0));
    rho.assign(n + 1, 0.0);
    center.assign(n, 0.0);
    x.assign(n, 0);
    zsig.assign(n, std::vector<__int128>(n + 1, 0));
    zrho.assign(n + 1, 0);
  }

  void run() { descend(n - 1, true); }

  void descend(int i, bool all_above_zero) {
    // candidate range for x_i
    double t = bound_slack - rho[i + 1];
    if (t < 0) return;
    double c = 0;
    for (int j = i + 1; j < n; ++j) c -= mu[i][j] * x[j];
    double r = std::sqrt(t / d[i]) + 1e-9;
    long lb = (long)std::ceil(c - r - 1e-6) - 1;
    long ub = (long)std::floor(c + r + 1e-6) + 1;
    if (all_above_zero && lb < 0) lb = 0;
    for (long v = lb; v <= ub; ++v) {
      if (all_above_zero && v == 0 && i == 0) continue;  // zero vector
      double dx = v - c;
      double nr = rho[i + 1] + d[i] * dx * dx;
      if (nr > bound_slack) continue;
      x[i] = v;
      rho[i] = nr;
      // exact bookkeeping
      __int128 gii = (__int128)G.at(i, i).get_si();
      __int128 s = zsig[i][i + 1];
      __int128 zn = zrho[i + 1] + (__int128)v * ((__int128)v * gii + 2 * s);
      zrho[i] = zn;
      if (i == 0) {
        Int nz = int128_to_int(zn);
        if (nz > 0 && nz <= boundz) cb(x, nz);
      } else {
        for (int ii = 0; ii < i; ++ii)
          zsig[ii][i] = zsig[ii][i + 1] + (__int128)G.at(ii, i).get_si() * v;
        descend(i - 1, all_above_zero && v == 0);
      }
    }
    x[i] = 0;
  }

  static Int int128_to_int(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    Int hi = Int((unsigned long)(u >> 64));
    Int lo = Int((unsigned long)(u & 0xFFFFFFFFFFFFFFFFULL));
    Int r = (hi << 64) + lo;
    return neg ? -r : r;
  }
};

// Fully exact engine (rational pruning). Slow; used for cross-checks and as
// a fallback when entries do not fit machine words.
struct ExactEnum {
  int n;
  const ZMat& G;
  Int boundz;
  LdlQ l;
  std::vector<std::vector<Rat>> sigma;
  std::vector<Rat> rho;
  std::vector<long> x;
  const std::function<void(const std::vector<long>&, const Int&)>& cb;

  ExactEnum(const ZMat& g, const Int& b,
            const std::function<void(const std::vector<long>&, const Int&)>& cb_)
      : n(g.rows), G(g), boundz(b), l(ldl_exact(g)), cb(cb_) {
    sigma.assign(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    rho.assign(n + 1, Rat(0));
    x.assign(n, 0);
  }

  void run() { descend(n - 1, true); }

  void descend(int i, bool all_above_zero) {
    Rat t = Rat(boundz) - rho[i + 1];
    if (t < 0) return;
    Rat c(0);
    for (int j = i + 1; j < n; ++j) c -= l.m[i][j] * Rat((long)x[j]);
    // integer range: d_i (x - c)^2 <= t
    Rat t2 = t / l.d[i];
    double cd = c.get_d(), rd = std::sqrt(std::max(0.0, t2.get_d()));
    long lb = (long)std::floor(cd - rd) - 2, ub = (long)std::ceil(cd + rd) + 2;
    auto ok = [&](long v) {
      Rat dx = Rat((long)v) - c;
      return dx * dx <= t2;
    };
    while (lb <= ub && !ok(lb)) ++lb;
    while (ub >= lb && !ok(ub)) --ub;
    if (all_above_zero && lb < 0) lb = 0;
    for (long v = lb; v <= ub; ++v) {
      if (!ok(v)) continue;
      Rat dx = Rat((long)v) - c;
      x[i] = v;
      rho[i] = rho[i + 1] + l.d[i] * dx * dx;
      if (i == 0) {
        bool zero = all_above_zero && v == 0;
        if (!zero) {
          Int nz = exact_norm();
          if (nz > 0 && nz <= boundz) cb(x, nz);
        }
      } else {
        descend(i - 1, all_above_zero && v == 0);
      }
    }
    x[i] = 0;
  }

  Int exact_norm() const {
    Int s = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      Int row = 0;
      for (int j = 0; j < n; ++j)
        if (x[j] != 0) row += G.at(i, j) * Int(x[j]);
      s += Int(x[i]) * row;
    }
    return s;
  }
};

}  // namespace

void enumerate_short_vectors(const ZMat& G, const Int& bound,
                             const std::function<void(const std::vector<long>&, const Int&)>& cb,
                             bool exact_cholesky) {
  if (G.rows != G.cols || G.rows == 0) throw std::invalid_argument("enumerate: bad Gram");
  if (bound < 0) return;
  bool fits = true;
  for (auto& e : G.a)
    if (!e.fits_slong_p()) fits = false;
  if (exact_cholesky || !fits) {
    ExactEnum e(G, bound, cb);
    e.run();
  } else {
    FloatEnum e(G, bound, cb);
    e.run();
  }
}

}  // namespace latt
