#include "latt14/isometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace latt {

namespace {

// Short-vector environment for the backtracking: all vectors (both signs) of
// enough layers to span the space, their int64 coordinates, dual coordinates
// and refined invariant classes.
struct VecEnv {
  int n;
  std::vector<std::vector<long>> vecs;   // coordinates
  std::vector<std::vector<long>> duals;  // G * v (int64)
  std::vector<long> norms;
  std::vector<size_t> cls;               // invariant class per vector
  std::map<size_t, int> cls_sizes;
  std::unordered_map<std::string, int> index;  // coord key -> position

  long ip(int a, int b) const {
    const auto& x = vecs[a];
    const auto& y = duals[b];
    long s = 0;
    for (int i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  }
  int find(const std::vector<long>& v) const {
    std::string key(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(long));
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
  }
};

std::string coord_key(const std::vector<long>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(long));
}

bool build_env(const Lattice& L, VecEnv& env) {
  if (!L.is_integral()) throw std::invalid_argument("isometry: integral lattices only");
  env.n = L.dim();
  ZMat G = to_zmat(L.gram());
  // collect layers until the span is full
  Rat bound = L.minimum();
  while (true) {
    auto reps = L.short_vectors(bound);
    QMat M((int)reps.size(), env.n);
    for (int i = 0; i < (int)reps.size(); ++i)
      for (int j = 0; j < env.n; ++j) M.at(i, j) = Rat(reps[i][j]);
    if (M.rank() == env.n) {
      env.vecs.clear();
      for (auto& r : reps) {
        std::vector<long> v(env.n), w(env.n);
        for (int j = 0; j < env.n; ++j) {
          v[j] = (long)r[j].get_si();
          w[j] = -v[j];
        }
        env.vecs.push_back(v);
        env.vecs.push_back(w);
      }
      break;
    }
    bound = bound + std::max(Rat(1), L.minimum());
    if (bound > 1000 * L.minimum()) return false;
  }
  std::sort(env.vecs.begin(), env.vecs.end());
  for (int i = 0; i < (int)env.vecs.size(); ++i) env.index[coord_key(env.vecs[i])] = i;
  // dual coordinates and norms
  for (auto& v : env.vecs) {
    std::vector<long> d(env.n, 0);
    long nrm = 0;
    for (int i = 0; i < env.n; ++i) {
      long s = 0;
      for (int j = 0; j < env.n; ++j) s += (long)G.at(i, j).get_si() * v[j];
      d[i] = s;
      nrm += s * v[i];
    }
    env.duals.push_back(d);
    env.norms.push_back(nrm);
  }
  // invariant classes: norm, then two refinement rounds over ip profiles
  size_t m = env.vecs.size();
  env.cls.resize(m);
  for (size_t i = 0; i < m; ++i) env.cls[i] = (size_t)env.norms[i];
  for (int round = 0; round < 2; ++round) {
    std::vector<size_t> next(m);
    for (size_t i = 0; i < m; ++i) {
      std::map<std::pair<long, size_t>, int> profile;
      for (size_t j = 0; j < m; ++j) profile[{env.ip((int)i, (int)j), env.cls[j]}]++;
      std::ostringstream os;
      os << env.cls[i] << "|";
      for (auto& [k, c] : profile) os << k.first << "," << k.second << ":" << c << ";";
      next[i] = std::hash<std::string>{}(os.str());
    }
    env.cls = next;
  }
  env.cls_sizes.clear();
  for (size_t i = 0; i < m; ++i) env.cls_sizes[env.cls[i]]++;
  return true;
}

// Backtracking core: find a map sending base[i] of A into B compatible with
// inner products; prefix images may be pinned. Returns the full image list.
struct Search {
  const VecEnv* A;
  const VecEnv* B;
  std::vector<int> base;       // indices into A->vecs
  QMat base_inv;               // inverse of the base coordinate matrix
  std::vector<int> images;     // current image indices into B->vecs
  std::optional<ZMat> result;

  bool compatible(int level, int cand) const {
    if (B->cls[cand] != A->cls[base[level]]) return false;
    for (int j = 0; j < level; ++j)
      if (B->ip(images[j], cand) != A->ip(base[j], base[level])) return false;
    return true;
  }

  bool dfs(int level) {
    int n = A->n;
    if (level == n) {
      // T = base^{-1} * images; must be integral
      QMat W(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) W.at(i, j) = Rat(B->vecs[images[i]][j]);
      QMat T = base_inv * W;
      for (auto& e : T.a)
        if (!is_integer(e)) return false;
      result = to_zmat(T);
      return true;
    }
    for (int cand = 0; cand < (int)B->vecs.size(); ++cand) {
      if (!compatible(level, cand)) continue;
      images[level] = cand;
      if (dfs(level + 1)) return true;
    }
    return false;
  }
};

std::vector<int> choose_base(const VecEnv& A) {
  int n = A.n;
  std::vector<int> base;
  std::vector<std::vector<Rat>> echelon;  // reduced independent rows
  auto reduce = [&](std::vector<Rat> v) {
    for (auto& e : echelon) {
      int p = 0;
      while (p < n && e[p] == 0) ++p;
      if (p < n && v[p] != 0) {
        Rat f = v[p] / e[p];
        for (int j = p; j < n; ++j) v[j] -= f * e[j];
      }
    }
    return v;
  };
  while ((int)base.size() < n) {
    int best = -1;
    int best_cls = -1;
    std::vector<Rat> best_red;
    for (int i = 0; i < (int)A.vecs.size(); ++i) {
      int c = A.cls_sizes.at(A.cls[i]);
      if (best >= 0 && c >= best_cls) continue;
      std::vector<Rat> v(n);
      for (int j = 0; j < n; ++j) v[j] = Rat(A.vecs[i][j]);
      v = reduce(std::move(v));
      bool zero = true;
      for (auto& e : v)
        if (e != 0) zero = false;
      if (zero) continue;
      best = i;
      best_cls = c;
      best_red = v;
    }
    if (best < 0) throw std::logic_error("isometry: span failure");
    base.push_back(best);
    echelon.push_back(best_red);
  }
  return base;
}

QMat base_matrix_inv(const VecEnv& A, const std::vector<int>& base) {
  int n = A.n;
  QMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = Rat(A.vecs[base[i]][j]);
  return M.inverse();
}

}  // namespace

std::optional<ZMat> isometry(const Lattice& A, const Lattice& B) {
  if (A.dim() != B.dim()) return std::nullopt;
  if (A.det() != B.det()) return std::nullopt;
  if (A.minimum() != B.minimum()) return std::nullopt;
  if (A.kissing_number() != B.kissing_number()) return std::nullopt;
  VecEnv ea, eb;
  if (!build_env(A, ea) || !build_env(B, eb)) throw std::runtime_error("isometry: no spanning layer set");
  if (ea.vecs.size() != eb.vecs.size()) return std::nullopt;
  // class size multisets must match
  {
    std::vector<int> sa, sb;
    for (auto& [k, v] : ea.cls_sizes) sa.push_back(v);
    for (auto& [k, v] : eb.cls_sizes) sb.push_back(v);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  Search s;
  s.A = &ea;
  s.B = &eb;
  s.base = choose_base(ea);
  s.base_inv = base_matrix_inv(ea, s.base);
  s.images.assign(ea.n, -1);
  if (s.dfs(0)) return s.result;
  return std::nullopt;
}

bool is_isometric(const Lattice& A, const Lattice& B) { return isometry(A, B).has_value(); }

namespace {

// orbit of a point under permutations induced by matrix generators
std::vector<int> orbit_of(const VecEnv& env, int start, const std::vector<ZMat>& gens) {
  std::vector<int> orb{start};
  std::vector<char> seen(env.vecs.size(), 0);
  seen[start] = 1;
  for (size_t h = 0; h < orb.size(); ++h) {
    for (auto& g : gens) {
      // image of vector orb[h] under g (row vector * matrix)
      std::vector<long> img(env.n, 0);
      const auto& v = env.vecs[orb[h]];
      for (int i = 0; i < env.n; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < env.n; ++j) img[j] += v[i] * (long)g.at(i, j).get_si();
      }
      int idx = env.find(img);
      if (idx < 0) throw std::logic_error("aut: generator does not preserve the vector set");
      if (!seen[idx]) {
        seen[idx] = 1;
        orb.push_back(idx);
      }
    }
  }
  return orb;
}

}  // namespace

AutGroup aut_group(const Lattice& L) {
  VecEnv env;
  if (!build_env(L, env)) throw std::runtime_error("aut_group: no spanning layer set");
  int n = env.n;
  std::vector<int> base = choose_base(env);
  QMat binv = base_matrix_inv(env, base);

  AutGroup G;
  G.order = 1;
  // levels processed bottom-up: generators found at level i fix base[0..i-1]
  std::vector<std::vector<ZMat>> level_gens(n);
  for (int i = n - 1; i >= 0; --i) {
    // candidates compatible with identity on base[0..i-1]
    std::vector<int> cands;
    for (int c = 0; c < (int)env.vecs.size(); ++c) {
      if (env.cls[c] != env.cls[base[i]]) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (env.ip(base[j], c) != env.ip(base[j], base[i])) {
          ok = false;
          break;
        }
      if (ok) cands.push_back(c);
    }
    std::vector<ZMat> stab_gens;
    for (int lvl = i; lvl < n; ++lvl)
      for (auto& g : level_gens[lvl]) stab_gens.push_back(g);
    std::vector<int> orb = orbit_of(env, base[i], stab_gens);
    for (int c : cands) {
      if (std::find(orb.begin(), orb.end(), c) != orb.end()) continue;
      // search for an automorphism with prefix identity, base[i] -> c
      Search s;
      s.A = &env;
      s.B = &env;
      s.base = base;
      s.base_inv = binv;
      s.images.assign(n, -1);
      for (int j = 0; j < i; ++j) s.images[j] = base[j];
      s.images[i] = c;
      bool found = s.compatible(i, c) && s.dfs(i + 1);
      if (found) {
        level_gens[i].push_back(*s.result);
        stab_gens.push_back(*s.result);
        orb = orbit_of(env, base[i], stab_gens);
      }
    }
    G.order *= Int((long)orb.size());
    for (auto& g : level_gens[i]) G.generators.push_back(g);
  }
  return G;
}

Int aut_order(const Lattice& L) { return aut_group(L).order; }

std::string isometry_fingerprint(const Lattice& L) {
  std::ostringstream os;
  os << L.dim() << "|" << rat_str(L.det()) << "|" << rat_str(L.minimum());
  auto hist = L.norm_histogram(L.minimum() * 3 + 4);
  for (auto& [nrm, c] : hist) os << "|" << rat_str(nrm) << ":" << int_str(c);
  return os.str();
}

}  // namespace latt
