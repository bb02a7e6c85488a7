#include "latt14/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace latt {

Lattice lattice_read(std::istream& in) {
  std::string line, label;
  int n = -1;
  std::vector<Rat> entries;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "label:") {
      std::getline(ls, label);
      while (!label.empty() && isspace((unsigned char)label.front())) label.erase(label.begin());
      continue;
    }
    if (n < 0) {
      n = std::stoi(tok);
      if (n < 1) throw std::invalid_argument("lattice_read: bad dimension");
      continue;
    }
    entries.push_back(rat_parse(tok));
    while (ls >> tok) entries.push_back(rat_parse(tok));
  }
  if (n < 0 || (int)entries.size() != n * n)
    throw std::invalid_argument("lattice_read: expected n^2 entries");
  QMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = entries[i * n + j];
  return Lattice(g, label);
}

Lattice lattice_read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("lattice_read: cannot open " + path);
  return lattice_read(in);
}

void lattice_write(std::ostream& out, const Lattice& L) {
  if (!L.label().empty()) out << "label: " << L.label() << "\n";
  out << L.dim() << "\n";
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = 0; j < L.dim(); ++j) out << (j ? " " : "") << rat_str(L.gram().at(i, j));
    out << "\n";
  }
}

void lattice_write_file(const std::string& path, const Lattice& L) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("lattice_write: cannot open " + path);
  lattice_write(out, L);
}

std::string data_dir() {
  const char* env = std::getenv("LATT14_DATA");
  return env ? env : "data";
}

}  // namespace latt
