#include "latt14/lattice.hpp"

#include <algorithm>
#include <map>

#include "latt14/enumerate.hpp"

namespace latt {

namespace {

// Exact-rational LLL on a Gram matrix; returns (reduced Gram, U) with
// reduced = U * G * U^T. Only used to speed up enumeration.
std::pair<QMat, ZMat> lll_gram(const QMat& G0, const Rat& delta = Rat(99, 100)) {
  int n = G0.rows;
  QMat G = G0;
  ZMat U = ZMat::identity(n);

  auto apply_sub = [&](int k, int j, const Int& q) {
    // row_k -= q*row_j as basis op: G updates on both sides
    for (int t = 0; t < n; ++t) G.at(k, t) -= Rat(q) * G.at(j, t);
    for (int t = 0; t < n; ++t) G.at(t, k) -= Rat(q) * G.at(t, j);
    for (int t = 0; t < n; ++t) U.at(k, t) -= q * U.at(j, t);
  };
  auto apply_swap = [&](int k) {
    for (int t = 0; t < n; ++t) std::swap(G.at(k, t), G.at(k - 1, t));
    for (int t = 0; t < n; ++t) std::swap(G.at(t, k), G.at(t, k - 1));
    for (int t = 0; t < n; ++t) std::swap(U.at(k, t), U.at(k - 1, t));
  };

  // Gram-Schmidt data from G, recomputed as needed (n is small).
  std::vector<Rat> B(n);
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  auto gso = [&]() {
    for (int i = 0; i < n; ++i) {
      Rat b = G.at(i, i);
      for (int j = 0; j < i; ++j) b -= mu[i][j] * mu[i][j] * B[j];
      B[i] = b;
      for (int k = i + 1; k < n; ++k) {
        Rat m = G.at(k, i);
        for (int j = 0; j < i; ++j) m -= mu[k][j] * mu[i][j] * B[j];
        mu[k][i] = m / b;
      }
    }
  };

  gso();
  int k = 1;
  int guard = 0;
  while (k < n && ++guard < 100000) {
    for (int j = k - 1; j >= 0; --j) {
      if (mu[k][j] * 2 > 1 || mu[k][j] * 2 < -1) {
        Int q = rat_floor(mu[k][j] + Rat(1, 2));
        apply_sub(k, j, q);
        gso();
      }
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      apply_swap(k);
      gso();
      k = std::max(k - 1, 1);
    }
  }
  return {G, U};
}

}  // namespace

Lattice::Lattice(QMat gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows != gram_.cols || gram_.rows < 1)
    throw std::invalid_argument("Lattice: Gram must be square, dim >= 1");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: Gram not symmetric");
  for (int k = 1; k <= gram_.rows; ++k) {
    QMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = gram_.at(i, j);
    if (sub.det() <= 0) throw std::invalid_argument("Lattice: Gram not positive definite");
  }
}

Rat Lattice::det() const {
  if (!det_) det_ = gram_.det();
  return *det_;
}

bool Lattice::is_integral() const {
  for (auto& x : gram_.a)
    if (!is_integer(x)) return false;
  return true;
}

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  for (int i = 0; i < dim(); ++i)
    if (gram_.at(i, i).get_num() % 2 != 0) return false;
  return true;
}

Rat Lattice::norm(const std::vector<Int>& v) const { return inner(v, v); }

Rat Lattice::inner(const std::vector<Int>& v, const std::vector<Int>& w) const {
  Rat s(0);
  for (int i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < dim(); ++j)
      if (w[j] != 0) row += gram_.at(i, j) * Rat(w[j]);
    s += Rat(v[i]) * row;
  }
  return s;
}

Lattice Lattice::dual(const std::string& label) const { return Lattice(gram_.inverse(), label); }

Lattice Lattice::rescaled(const Rat& c, const std::string& label) const {
  if (c <= 0) throw std::invalid_argument("rescale: factor must be positive");
  return Lattice(gram_.scaled(c), label);
}

Lattice Lattice::sublattice(const ZMat& basis_rows, const std::string& label) const {
  if (basis_rows.cols != dim()) throw std::invalid_argument("sublattice: wrong width");
  QMat B = to_qmat(basis_rows);
  return Lattice(B * gram_ * B.transpose(), label);
}

namespace {

struct IntButFine {
  ZMat gram_int;  // c * gram
  Int scale;      // c
  ZMat U;         // reduced = U * gram_int * U^T; coords map back via x -> x*U
  ZMat gram_red;
};

IntButFine integerize(const QMat& gram) {
  IntButFine r;
  r.scale = gram.denominator_lcm();
  r.gram_int = ZMat(gram.rows, gram.cols);
  for (int i = 0; i < gram.rows; ++i)
    for (int j = 0; j < gram.cols; ++j) {
      Rat x = gram.at(i, j) * Rat(r.scale);
      r.gram_int.at(i, j) = x.get_num();
    }
  auto [gr, u] = lll_gram(to_qmat(r.gram_int));
  r.U = u;
  r.gram_red = to_zmat(gr);
  return r;
}

std::vector<Int> map_back(const std::vector<long>& x, const ZMat& U) {
  int n = U.rows;
  std::vector<Int> v(n, Int(0));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) v[j] += Int(x[i]) * U.at(i, j);
  }
  // canonical sign: first nonzero coordinate positive
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    if (v[j] < 0)
      for (auto& c : v) c = -c;
    break;
  }
  return v;
}

}  // namespace

std::vector<std::vector<Int>> Lattice::short_vectors(const Rat& bound) const {
  IntButFine ib = integerize(gram_);
  Rat bscaled = bound * Rat(ib.scale);
  Int b = rat_floor(bscaled);
  std::vector<std::vector<Int>> out;
  enumerate_short_vectors(ib.gram_red, b,
                          [&](const std::vector<long>& x, const Int&) { out.push_back(map_back(x, ib.U)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Rat, Int>> Lattice::norm_histogram(const Rat& bound) const {
  IntButFine ib = integerize(gram_);
  Int b = rat_floor(bound * Rat(ib.scale));
  std::map<Int, Int> h;
  enumerate_short_vectors(ib.gram_red, b,
                          [&](const std::vector<long>&, const Int& nz) { h[nz] += 2; });
  std::vector<std::pair<Rat, Int>> out;
  for (auto& [nz, c] : h) {
    Rat nrm(nz, ib.scale);
    nrm.canonicalize();
    out.push_back({nrm, c});
  }
  return out;
}

const Layer& Lattice::min_layer() const {
  if (min_layer_) return *min_layer_;
  IntButFine ib = integerize(gram_);
  // min(diagonal of the reduced Gram) is attained by a lattice vector
  Int b = ib.gram_red.at(0, 0);
  for (int i = 1; i < dim(); ++i) b = std::min(b, ib.gram_red.at(i, i));
  Int best = b;
  std::vector<std::vector<long>> raw;
  enumerate_short_vectors(ib.gram_red, b, [&](const std::vector<long>& x, const Int& nz) {
    if (nz < best) {
      best = nz;
      raw.clear();
    }
    if (nz == best) raw.push_back(x);
  });
  auto lay = std::make_shared<Layer>();
  lay->norm = Rat(best, ib.scale);
  lay->norm.canonicalize();
  for (auto& x : raw) lay->reps.push_back(map_back(x, ib.U));
  std::sort(lay->reps.begin(), lay->reps.end());
  min_layer_ = lay;
  return *min_layer_;
}

Rat Lattice::minimum() const { return min_layer().norm; }

Layer Lattice::layer(const Rat& a) const {
  if (a <= 0) throw std::invalid_argument("layer: norm must be positive");
  IntButFine ib = integerize(gram_);
  Rat target = a * Rat(ib.scale);
  Layer lay;
  lay.norm = a;
  if (!is_integer(target)) return lay;
  Int t = target.get_num();
  enumerate_short_vectors(ib.gram_red, t, [&](const std::vector<long>& x, const Int& nz) {
    if (nz == t) lay.reps.push_back(map_back(x, ib.U));
  });
  std::sort(lay.reps.begin(), lay.reps.end());
  return lay;
}

Int Lattice::kissing_number() const { return min_layer().count(); }

std::pair<Rat, Rat> det_bounds(int n, const Rat& m, const Rat& r, const Rat& b) {
  if (m <= 0 || r <= 0) throw std::invalid_argument("det_bounds: minima must be positive");
  if (b <= 0) throw std::invalid_argument("det_bounds: Hermite bound must be positive");
  return {rat_pow(m / b, n), rat_pow(b / r, n)};
}

Int square_class(const Rat& d) {
  if (d <= 0) throw std::invalid_argument("square_class: need positive");
  return squarefree_part(d);
}

namespace {

// Basis rows of the kernel of a linear functional ell (mod p) on Z^n,
// together with p*Z^n; returned as an HNF basis of the index-p subgroup.
ZMat mod_p_kernel_lattice(const std::vector<Int>& ell, const Int& p, int n) {
  // rows: all e_i with ell_i ≡ 0; combinations e_i*a - e_j*b; plus p*e_i
  std::vector<std::vector<Int>> rows;
  int piv = -1;
  for (int i = 0; i < n; ++i)
    if (ell[i] % p != 0) {
      piv = i;
      break;
    }
  if (piv < 0) return ZMat::identity(n);  // functional is zero: whole lattice
  for (int i = 0; i < n; ++i) {
    std::vector<Int> r(n, Int(0));
    if (i == piv) {
      r[i] = p;
    } else {
      // ell[piv]*e_i - ell[i]*e_piv  lies in the kernel
      r[i] = ell[piv] % p;
      r[piv] = -(ell[i] % p);
    }
    rows.push_back(r);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Int> r(n, Int(0));
    r[i] = p;
    rows.push_back(r);
  }
  ZMat M((int)rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = rows[i][j];
  auto [H, U] = hnf(M);
  ZMat B(n, n);
  int k = 0;
  for (int i = 0; i < H.rows && k < n; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j)
      if (H.at(i, j) != 0) zero = false;
    if (!zero) {
      for (int j = 0; j < n; ++j) B.at(k, j) = H.at(i, j);
      ++k;
    }
  }
  return B;
}

}  // namespace

ParitySublattices parity_sublattices(const Lattice& L) {
  ParitySublattices out;
  int n = L.dim();
  const QMat& G = L.gram();

  // --- even part (2-adic) ---
  bool two_ok = true;
  for (int i = 0; i < n && two_ok; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = (i == j) ? G.at(i, i) : G.at(i, j) * 2;
      if (v.get_den() % 2 == 0) {
        two_ok = false;
        break;
      }
    }
  if (two_ok) {
    // Q(v) = norm(v) mod 2 on F_2^n; the even set is a sublattice iff it is
    // closed under addition, detected via its span.
    auto qval = [&](unsigned mask) {
      Rat s(0);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) {
          s += G.at(i, i);
          for (int j = i + 1; j < n; ++j)
            if (mask >> j & 1) s += 2 * G.at(i, j);
        }
      // value is 2-integral; reduce numerator mod 2 (denominator odd)
      Int r = abs(s.get_num() % 2);
      return (int)r.get_si();
    };
    std::vector<unsigned> zeros;
    for (unsigned m = 0; m < (1u << n); ++m)
      if (qval(m) == 0) zeros.push_back(m);
    // span over F_2
    std::vector<unsigned> basis;
    for (unsigned z : zeros) {
      unsigned v = z;
      for (unsigned b : basis) v = std::min(v, v ^ b);
      if (v) basis.push_back(v);
    }
    if (zeros.size() == (1ull << basis.size())) {
      // lift to an index-2^k sublattice basis
      std::vector<std::vector<Int>> rows;
      for (unsigned b : basis) {
        std::vector<Int> r(n, Int(0));
        for (int i = 0; i < n; ++i) r[i] = (b >> i) & 1;
        rows.push_back(r);
      }
      for (int i = 0; i < n; ++i) {
        std::vector<Int> r(n, Int(0));
        r[i] = 2;
        rows.push_back(r);
      }
      ZMat M((int)rows.size(), n);
      for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = rows[i][j];
      auto [H, U] = hnf(M);
      ZMat B(n, n);
      int k = 0;
      Int idx = 1;
      for (int i = 0; i < H.rows && k < n; ++i) {
        bool zero = true;
        for (int j = 0; j < n; ++j)
          if (H.at(i, j) != 0) zero = false;
        if (!zero) {
          for (int j = 0; j < n; ++j) B.at(k, j) = H.at(i, j);
          ++k;
        }
      }
      for (int i = 0; i < n; ++i) idx *= B.at(i, i);
      out.even = SublatticeSpec{B, idx};
    }
  }

  // --- trace-3 part ---
  bool three_ok = true;
  for (int i = 0; i < n && three_ok; ++i)
    for (int j = 0; j < n; ++j)
      if (G.at(i, j).get_den() % 3 == 0) three_ok = false;
  if (three_ok) {
    auto red3 = [&](const Rat& x) {
      // x has denominator coprime to 3; value mod 3
      Int nu = x.get_num() % 3, de = x.get_den() % 3;
      if (nu < 0) nu += 3;
      if (de < 0) de += 3;
      // invert de mod 3 (de is 1 or 2)
      Int inv = (de == 1) ? 1 : 2;
      return (int)Int((nu * inv) % 3).get_si();
    };
    bool hyp = true;
    for (int i = 0; i < n && hyp; ++i)
      for (int j = 0; j < n; ++j) {
        int val = red3(G.at(i, j) * G.at(i, j) - G.at(i, i) * G.at(j, j));
        if (val != 0) hyp = false;
      }
    // matrix mod 3 must have rank <= 1 for the norm-residue to be a square
    // of a linear form
    std::vector<std::vector<int>> M(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M[i][j] = red3(G.at(i, j));
    int pivot_row = -1;
    for (int i = 0; i < n && pivot_row < 0; ++i)
      for (int j = 0; j < n; ++j)
        if (M[i][j] != 0) {
          pivot_row = i;
          break;
        }
    bool rank_le_1 = true;
    if (pivot_row >= 0) {
      for (int i = 0; i < n && rank_le_1; ++i) {
        // row i must be a multiple of the pivot row
        int lam = -1;
        for (int c = 0; c < 3 && lam < 0; ++c) {
          bool ok = true;
          for (int j = 0; j < n; ++j)
            if (M[i][j] != c * M[pivot_row][j] % 3) ok = false;
          if (ok) lam = c;
        }
        if (lam < 0) rank_le_1 = false;
      }
    }
    out.trace3_hypothesis_holds = hyp && rank_le_1;
    if (out.trace3_hypothesis_holds) {
      if (pivot_row < 0) {
        out.trace3 = SublatticeSpec{ZMat::identity(n), Int(1)};
      } else {
        // norm(v) ≡ c*(ell.v)^2 with ell = pivot row of M
        std::vector<Int> ell(n);
        for (int j = 0; j < n; ++j) ell[j] = M[pivot_row][j];
        // diagonal entry at the pivot column decides c != 0; the kernel of
        // ell is the trace sublattice
        ZMat B = mod_p_kernel_lattice(ell, Int(3), n);
        Int idx = 1;
        for (int i = 0; i < n; ++i) idx *= B.at(i, i);
        // if Q vanishes identically although M != 0 (possible when the
        // diagonal of M is zero), the sublattice is everything
        bool qzero = true;
        for (int i = 0; i < n && qzero; ++i)
          if (M[i][i] != 0) qzero = false;
        if (qzero) {
          out.trace3 = SublatticeSpec{ZMat::identity(n), Int(1)};
        } else {
          out.trace3 = SublatticeSpec{B, idx};
        }
      }
    }
  }
  return out;
}

Lattice orthogonal_sum(const Lattice& A, const Lattice& B, const std::string& label) {
  int n = A.dim(), m = B.dim();
  QMat G(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G.at(i, j) = A.gram().at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G.at(n + i, n + j) = B.gram().at(i, j);
  return Lattice(G, label);
}

}  // namespace latt
