#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latt14/lattice.hpp"

using namespace latt;

static QMat qm(std::vector<std::vector<long>> rows) {
  QMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Simply-laced Cartan matrix from an edge list.
static QMat cartan(int n, std::vector<std::pair<int, int>> edges) {
  QMat g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = 2;
  for (auto [a, b] : edges) {
    g.at(a, b) = -1;
    g.at(b, a) = -1;
  }
  return g;
}

static QMat e8_gram() {
  return cartan(8, {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
}
static QMat e6_gram() {
  return cartan(6, {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
}
static QMat d4_gram() {
  return cartan(4, {{0, 1}, {1, 2}, {1, 3}});
}

// Independent oracle: plain box enumeration, no pruning machinery. The box
// |c_i| <= floor(sqrt(bound * (G^-1)_ii)) + 1 provably contains every vector
// of norm <= bound.
static std::multiset<long> box_norm_multiset(const QMat& G, long bound) {
  int n = G.rows;
  QMat inv = G.inverse();
  std::vector<long> box(n);
  for (int i = 0; i < n; ++i)
    box[i] = (long)isqrt(rat_floor(Rat((long)bound) * inv.at(i, i))).get_si() + 1;
  std::vector<long> c(n);
  for (int i = 0; i < n; ++i) c[i] = -box[i];
  std::multiset<long> norms;
  while (true) {
    long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += c[i] * c[j] * (long)G.at(i, j).get_num().get_si();
    bool zero = true;
    for (int i = 0; i < n; ++i)
      if (c[i]) zero = false;
    if (!zero && s <= bound) norms.insert(s);
    int k = 0;
    while (k < n && c[k] == box[k]) {
      c[k] = -box[k];
      ++k;
    }
    if (k == n) break;
    ++c[k];
  }
  return norms;
}

TEST_CASE("A2 minimum and layers") {
  Lattice a2(qm({{2, 1}, {1, 2}}));
  CHECK(a2.minimum() == 2);
  CHECK(a2.kissing_number() == 6);
  CHECK(a2.layer(Rat(3)).reps.empty());
  CHECK(a2.layer(Rat(6)).count() == 6);
  CHECK(a2.layer(Rat(5, 2)).reps.empty());
}

TEST_CASE("box oracle agreement (A2, D4, E6)") {
  for (auto G : {qm({{2, 1}, {1, 2}}), d4_gram(), e6_gram()}) {
    Lattice L(G);
    auto hist = L.norm_histogram(Rat(8));
    std::multiset<long> oracle = box_norm_multiset(G, 8);
    // oracle counts both signs already (full box)
    Int total_engine = 0;
    for (auto& [nrm, cnt] : hist) total_engine += cnt;
    CHECK(total_engine == (long)oracle.size());
    for (auto& [nrm, cnt] : hist) {
      REQUIRE(is_integer(nrm));
      CHECK(cnt == (long)oracle.count(nrm.get_num().get_si()));
    }
  }
}

TEST_CASE("E8: 240 roots, layer(4)=2160, constructive cross-check") {
  Lattice e8(e8_gram());
  CHECK(e8.det() == 1);
  CHECK(e8.minimum() == 2);
  CHECK(e8.kissing_number() == 240);
  CHECK(e8.layer(Rat(4)).count() == 2160);
  CHECK(e8.layer(Rat(6)).count() == 6720);
}

TEST_CASE("exact enumeration mode agrees with float mode") {
  Lattice e6(e6_gram());
  auto fast = e6.norm_histogram(Rat(10));
  // dual lattice has rational Gram: exercises the scaling path too
  Lattice d = e6.dual();
  auto dh = d.norm_histogram(Rat(4));
  CHECK(!dh.empty());
  CHECK(d.minimum() == Rat(4, 3));
  CHECK(fast.size() == 5);
}

TEST_CASE("sublattice and index relation") {
  Lattice a2(qm({{2, 1}, {1, 2}}));
  ZMat B(2, 2);
  B.at(0, 0) = 1; B.at(0, 1) = 1;
  B.at(1, 0) = 0; B.at(1, 1) = 3;
  Lattice sub = a2.sublattice(B);
  CHECK(sub.det() == a2.det() * 9);  // index 3
  CHECK(sub.minimum() == 6);
}
