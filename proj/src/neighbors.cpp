#include "latt14/neighbors.hpp"

#include <functional>
#include <map>
#include <unordered_map>

#include "latt14/smith.hpp"

namespace latt {

namespace {

// lattice generated by the rows of B (rational coords in L's basis), as a
// new Lattice with Gram B G B^T; rows may be redundant
Lattice span_lattice(const Lattice& L, const std::vector<std::vector<Rat>>& rows,
                     const std::string& label = "") {
  int n = L.dim();
  Int scale = 1;
  for (auto& r : rows)
    for (auto& x : r) scale = lcm(scale, x.get_den());
  ZMat M((int)rows.size(), n);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = rows[i][j] * Rat(scale);
      M.at(i, j) = v.get_num();
    }
  auto [H, U] = hnf(M);
  QMat B(n, n);
  int k = 0;
  for (int i = 0; i < H.rows && k < n; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j)
      if (H.at(i, j) != 0) zero = false;
    if (zero) continue;
    for (int j = 0; j < n; ++j) B.at(k, j) = ratq(H.at(i, j), scale);
    ++k;
  }
  if (k != n) throw std::invalid_argument("span_lattice: rows do not span");
  return Lattice(B * L.gram() * B.transpose(), label);
}

}  // namespace

std::vector<Lattice> kneser_neighbors(const Lattice& L, const Int& p) {
  if (!L.is_even()) throw std::invalid_argument("kneser_neighbors: even lattices only");
  if (!is_prime(p)) throw std::invalid_argument("kneser_neighbors: p must be prime");
  int n = L.dim();
  ZMat Gz = to_zmat(L.gram());
  std::vector<std::vector<long>> G(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!Gz.at(i, j).fits_slong_p())
        throw std::invalid_argument("kneser_neighbors: Gram entries too large");
      G[i][j] = (long)Gz.at(i, j).get_si();
    }
  long pl = (long)p.get_si();

  std::vector<Lattice> out;
  std::vector<long> x(n, 0);

  auto process_line = [&]() {
    std::vector<long> gx(n, 0);
    long nrm = 0;
    for (int i = 0; i < n; ++i) {
      long s = 0;
      for (int j = 0; j < n; ++j) s += G[i][j] * x[j];
      gx[i] = s;
      nrm += s * x[i];
    }
    if (nrm % pl != 0) return;
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (gx[i] % pl != 0) piv = i;
    if (piv < 0) return;  // line inside p L^*: inadmissible

    std::vector<long> xc(x);
    auto recompute = [&]() {
      nrm = 0;
      for (int i = 0; i < n; ++i) {
        long s = 0;
        for (int j = 0; j < n; ++j) s += G[i][j] * xc[j];
        gx[i] = s;
        nrm += s * xc[i];
      }
    };
    if (pl == 2) {
      if (((nrm % 4) + 4) % 4 != 0) return;
      if (((nrm % 8) + 8) % 8 != 0) {
        // (x + 2 e_piv) shifts the norm by 4 (x,e_piv) + 4 (e_piv,e_piv)
        // = 4*odd + 0 mod 8
        xc[piv] += 2;
        recompute();
        if (((nrm % 8) + 8) % 8 != 0) return;
      }
    } else {
      long r = ((nrm / pl) % pl + pl) % pl;
      if (r != 0) {
        long g = ((gx[piv] % pl) + pl) % pl;
        long t = -1;
        for (long cand = 0; cand < pl; ++cand)
          if ((2 * g * cand + r) % pl == 0) {
            t = cand;
            break;
          }
        if (t < 0) return;
        xc[piv] += pl * t;
        recompute();
        if (nrm % (pl * pl) != 0) return;
      }
    }

    // neighbor = {y : (x,y) ≡ 0 mod p} + Z x/p
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < n; ++i) {
      if (i == piv) continue;
      std::vector<Rat> r0(n, Rat(0));
      r0[i] = rat(((gx[piv] % pl) + pl) % pl);
      r0[piv] = rat(-(((gx[i] % pl) + pl) % pl));
      rows.push_back(r0);
    }
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> r0(n, Rat(0));
      r0[i] = rat(pl);
      rows.push_back(r0);
    }
    std::vector<Rat> xp(n);
    for (int i = 0; i < n; ++i) xp[i] = rat(xc[i], pl);
    rows.push_back(xp);
    Lattice N = span_lattice(L, rows);
    if (N.det() != L.det() || !N.is_even())
      throw std::logic_error("kneser_neighbors: invalid neighbor");
    out.push_back(N);
  };

  std::function<void(int, bool)> iter = [&](int pos, bool leading_set) {
    if (pos == n) {
      if (leading_set) process_line();
      return;
    }
    if (!leading_set) {
      x[pos] = 0;
      iter(pos + 1, false);
      x[pos] = 1;
      iter(pos + 1, true);
      x[pos] = 0;
    } else {
      for (long v = 0; v < pl; ++v) {
        x[pos] = v;
        iter(pos + 1, true);
      }
      x[pos] = 0;
    }
  };
  iter(0, false);
  return out;
}

DiscGroup discriminant_group(const Lattice& L) {
  if (!L.is_integral()) throw std::invalid_argument("discriminant_group: integral only");
  ZMat G = to_zmat(L.gram());
  auto sm = smith(G);
  DiscGroup d;
  d.size = 1;
  int n = L.dim();
  for (int i = 0; i < n; ++i) {
    Int di = sm.D.at(i, i);
    if (di == 1) continue;
    std::vector<Rat> g(n);
    for (int j = 0; j < n; ++j) g[j] = ratq(sm.U.at(i, j), di);
    d.gens.push_back(g);
    d.orders.push_back(di);
    d.size *= di;
  }
  return d;
}

namespace {

Rat disc_norm(const Lattice& L, const std::vector<Rat>& x) {
  int n = L.dim();
  Rat s(0);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < n; ++j) row += L.gram().at(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

// value of q(x) mod 2Z in [0,2)
Rat qval(const Lattice& L, const std::vector<Rat>& x) {
  Rat v = disc_norm(L, x);
  Rat two(2);
  Rat r = v - Rat(2) * Rat(rat_floor(v / 2));
  return r;
}

}  // namespace

std::vector<Lattice> maximal_even_overlattices(const Lattice& L) {
  if (!L.is_even()) throw std::invalid_argument("maximal_even_overlattices: even only");
  std::vector<Lattice> maximal;
  std::vector<Lattice> frontier{L};
  std::vector<std::string> seen;
  while (!frontier.empty()) {
    Lattice cur = frontier.back();
    frontier.pop_back();
    DiscGroup d = discriminant_group(cur);
    if (d.size > 2000000)
      throw std::invalid_argument("maximal_even_overlattices: discriminant group too large");
    // enumerate disc elements, look for isotropic ones
    bool grew = false;
    int n = cur.dim();
    std::vector<Int> counter(d.gens.size(), Int(0));
    std::vector<Lattice> children;
    while (true) {
      // skip zero
      bool zero = true;
      for (auto& c : counter)
        if (c != 0) zero = false;
      if (!zero) {
        std::vector<Rat> x(n, Rat(0));
        for (size_t i = 0; i < d.gens.size(); ++i)
          for (int j = 0; j < n; ++j) x[j] += Rat(counter[i]) * d.gens[i][j];
        if (qval(cur, x) == 0) {
          // integral overlattice needs (x, cur) in Z: automatic (x in L*);
          // even needs q(x) in 2Z: checked
          std::vector<std::vector<Rat>> rows;
          for (int i = 0; i < n; ++i) {
            std::vector<Rat> e(n, Rat(0));
            e[i] = 1;
            rows.push_back(e);
          }
          rows.push_back(x);
          Lattice up = span_lattice(cur, rows, cur.label());
          if (up.det() != cur.det() && up.is_even()) {
            grew = true;
            children.push_back(up);
          }
        }
      }
      // increment counter
      size_t k = 0;
      while (k < counter.size() && counter[k] == d.orders[k] - 1) counter[k++] = 0;
      if (k == counter.size()) break;
      counter[k] += 1;
    }
    if (!grew) {
      bool dup = false;
      for (auto& m : maximal)
        if (m.det() == cur.det() && is_isometric(m, cur)) dup = true;
      if (!dup) maximal.push_back(cur);
    } else {
      // dedup children by Gram fingerprint before recursing
      std::map<std::string, Lattice> uniq;
      for (auto& c : children) uniq.emplace(isometry_fingerprint(c), c);
      for (auto& [k2, c] : uniq) frontier.push_back(c);
    }
  }
  return maximal;
}

GenusEnumeration enumerate_genus(const Lattice& seed, const std::vector<Int>& primes,
                                 std::optional<Rat> target_mass,
                                 std::optional<Rat> mass_ceiling) {
  if (target_mass && mass_ceiling && *target_mass > *mass_ceiling)
    throw std::invalid_argument("enumerate_genus: mass exceeds the configured ceiling");
  GenusEnumeration out;
  out.primes_used = primes;
  std::unordered_map<std::string, std::vector<int>> by_fp;

  auto add_class = [&](const Lattice& L) -> bool {
    std::string fp = isometry_fingerprint(L);
    auto& bucket = by_fp[fp];
    for (int idx : bucket)
      if (is_isometric(out.classes[idx].lattice, L)) return false;
    GenusClass gc{L, aut_order(L)};
    out.classes.push_back(gc);
    bucket.push_back((int)out.classes.size() - 1);
    out.mass_sum += ratq(Int(1), gc.aut);
    return true;
  };

  out.mass_sum = Rat(0);
  add_class(seed);
  size_t next = 0;
  while (next < out.classes.size()) {
    if (target_mass && out.mass_sum == *target_mass) {
      out.complete_by_mass = true;
      return out;
    }
    Lattice cur = out.classes[next].lattice;
    ++next;
    for (auto& p : primes) {
      for (auto& N : kneser_neighbors(cur, p)) {
        add_class(N);
        if (target_mass && out.mass_sum == *target_mass) {
          out.complete_by_mass = true;
          return out;
        }
      }
    }
  }
  out.closure_exhausted = true;
  if (target_mass) out.complete_by_mass = (out.mass_sum == *target_mass);
  return out;
}

}  // namespace latt
