#include "latt14/catalog.hpp"

#include <sstream>

namespace latt {

namespace {

QMat cartan(int n, const std::vector<std::pair<int, int>>& edges) {
  QMat g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = 2;
  for (auto [a, b] : edges) {
    g.at(a, b) = -1;
    g.at(b, a) = -1;
  }
  return g;
}

}  // namespace

Lattice root_A(int n) {
  if (n < 1) throw std::invalid_argument("root_A: n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Lattice(cartan(n, e), "A" + std::to_string(n));
}

Lattice root_D(int n) {
  if (n < 3) throw std::invalid_argument("root_D: n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n - 1; ++i) e.push_back({i, i + 1});
  e.push_back({n - 3, n - 1});
  return Lattice(cartan(n, e), "D" + std::to_string(n));
}

Lattice root_E(int n) {
  // chain 0-2-3-4-...-(n-1) with node 1 attached to node 3
  if (n < 6 || n > 8) throw std::invalid_argument("root_E: n in {6,7,8}");
  std::vector<std::pair<int, int>> e = {{0, 2}, {1, 3}, {2, 3}};
  for (int i = 3; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Lattice(cartan(n, e), "E" + std::to_string(n));
}

Lattice one_dim(const Rat& a) {
  QMat g(1, 1);
  g.at(0, 0) = a;
  return Lattice(g, "(" + rat_str(a) + ")");
}

Lattice lattice_L4() {
  QMat g(4, 4);
  long m[4][4] = {{2, 1, 1, 1}, {1, 2, 0, 1}, {1, 0, 4, 2}, {1, 1, 2, 4}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.at(i, j) = m[i][j];
  return Lattice(g, "L4");
}

Lattice lattice_f1() {
  QMat g(2, 2);
  g.at(0, 0) = 4; g.at(0, 1) = 1; g.at(1, 0) = 1; g.at(1, 1) = 4;
  return Lattice(g, "f1");
}

Lattice lattice_g2_14() {
  // filled in by the sublattice descent from the genus of E6+E8 (see the
  // descent tool); Gram of the unique minimum-4 survivor
  extern const long g2_14_gram[14][14];
  QMat g(14, 14);
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) g.at(i, j) = g2_14_gram[i][j];
  return Lattice(g, "G2_14");
}

// placeholder until the descent run pins the canonical Gram
const long g2_14_gram[14][14] = {
    {4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

Lattice catalog(const std::string& name) {
  // orthogonal sums
  if (auto plus = name.find('+'); plus != std::string::npos) {
    Lattice left = catalog(name.substr(0, plus));
    Lattice right = catalog(name.substr(plus + 1));
    return orthogonal_sum(left, right, name);
  }
  std::string base = name;
  Rat scale(1);
  if (auto star = name.find('*'); star != std::string::npos) {
    base = name.substr(0, star);
    scale = rat_parse(name.substr(star + 1));
  }
  Lattice L = [&]() -> Lattice {
    if (base.size() >= 3 && base.front() == '(' && base.back() == ')')
      return one_dim(rat_parse(base.substr(1, base.size() - 2)));
    if (base == "L4") return lattice_L4();
    if (base == "f1") return lattice_f1();
    if (base == "G2_14") return lattice_g2_14();
    if (base.size() >= 2 && (base[0] == 'A' || base[0] == 'D' || base[0] == 'E')) {
      int n = std::stoi(base.substr(1));
      if (base[0] == 'A') return root_A(n);
      if (base[0] == 'D') return root_D(n);
      return root_E(n);
    }
    throw std::invalid_argument("catalog: unknown lattice '" + name + "'");
  }();
  if (scale != 1) return L.rescaled(scale, name);
  return Lattice(L.gram(), name);
}

std::vector<std::string> catalog_names() {
  return {"A<n>", "D<n>", "E6", "E7", "E8", "(a)", "L4", "f1", "G2_14",
          "sums with '+', scaling with '*c'"};
}

}  // namespace latt
