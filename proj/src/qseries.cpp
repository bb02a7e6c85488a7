#include "latt14/qseries.hpp"

#include <fstream>
#include <sstream>

namespace latt {

long QSeries::valuation() const {
  for (auto& [k, c] : coeffs)
    if (c != 0) return k;
  return kmax + 1;
}

QSeries QSeries::truncated(long new_kmax) const {
  QSeries r;
  r.unit = unit;
  r.kmax = std::min(kmax, new_kmax);
  for (auto& [k, c] : coeffs)
    if (k <= r.kmax) r.coeffs[k] = c;
  return r;
}

std::string QSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int printed = 0;
  for (auto& [k, c] : coeffs) {
    if (c == 0) continue;
    if (printed) os << " + ";
    os << rat_str(c) << "*q^" << rat_str(Rat(k) * unit);
    if (++printed >= max_terms) {
      os << " + ...";
      break;
    }
  }
  if (!printed) os << "0";
  os << "  (known to q^" << rat_str(Rat(kmax) * unit) << ")";
  return os.str();
}

static void check_units(const QSeries& a, const QSeries& b, const char* op) {
  if (a.unit != b.unit)
    throw std::invalid_argument(std::string("qseries ") + op + ": unit mismatch");
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
  check_units(a, b, "add");
  QSeries r;
  r.unit = a.unit;
  r.kmax = std::min(a.kmax, b.kmax);
  for (long k = 0; k <= r.kmax; ++k) r.set(k, a.at(k) + b.at(k));
  return r;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, qs_scale(b, Rat(-1))); }

QSeries qs_scale(const QSeries& a, const Rat& c) {
  QSeries r;
  r.unit = a.unit;
  r.kmax = a.kmax;
  for (auto& [k, v] : a.coeffs) r.set(k, v * c);
  return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  check_units(a, b, "mul");
  QSeries r;
  r.unit = a.unit;
  long va = a.valuation(), vb = b.valuation();
  r.kmax = std::min(a.kmax + vb, b.kmax + va);
  if (r.kmax < 0) r.kmax = -1;
  for (auto& [i, ca] : a.coeffs) {
    if (ca == 0) continue;
    for (auto& [j, cb] : b.coeffs) {
      if (i + j > r.kmax) break;
      if (cb == 0) continue;
      r.coeffs[i + j] += ca * cb;
    }
  }
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
    it = (it->second == 0) ? r.coeffs.erase(it) : std::next(it);
  return r;
}

QSeries qs_div(const QSeries& a, const QSeries& b) {
  check_units(a, b, "div");
  long va = a.valuation(), vb = b.valuation();
  if (vb > b.kmax) throw std::invalid_argument("qseries div: zero divisor");
  if (va < vb) throw std::invalid_argument("qseries div: valuation mismatch");
  // shift both by vb, then invert the unit-leading series
  Rat lead = b.at(vb);
  long kmax = std::min(a.kmax - vb, b.kmax - vb);
  QSeries r;
  r.unit = a.unit;
  r.kmax = kmax;
  // long division: r[t] = (a[t+vb] - sum_{s<t} r[s]*b[t-s+vb]) / lead
  std::vector<Rat> rc(kmax + 1, Rat(0));
  for (long t = 0; t <= kmax; ++t) {
    Rat acc = a.at(t + vb);
    for (long s = 0; s < t; ++s)
      if (rc[s] != 0) acc -= rc[s] * b.at(t - s + vb);
    rc[t] = acc / lead;
    r.set(t, rc[t]);
  }
  return r;
}

bool qs_equal(const QSeries& a, const QSeries& b) {
  if (a.unit != b.unit) return false;
  long k = std::min(a.kmax, b.kmax);
  for (long i = 0; i <= k; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

QSeries qs_read(std::istream& in) {
  QSeries s;
  std::string line;
  bool have_unit = false, have_trunc = false;
  Rat B(0);
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "series") break;  // caller handles multi-series
    if (tok == "unit") {
      std::string v;
      ls >> v;
      s.unit = rat_parse(v);
      if (s.unit <= 0) throw std::invalid_argument("qseries: unit must be positive");
      have_unit = true;
    } else if (tok == "truncation") {
      std::string v;
      ls >> v;
      B = rat_parse(v);
      have_trunc = true;
    } else {
      long k = std::stol(tok);
      std::string v;
      if (!(ls >> v)) throw std::invalid_argument("qseries: missing coefficient");
      s.set(k, rat_parse(v));
    }
  }
  if (!have_unit || !have_trunc) throw std::invalid_argument("qseries: missing header");
  s.kmax = (long)rat_floor(B / s.unit).get_si();
  for (auto& [k, c] : s.coeffs)
    if (k > s.kmax) throw std::invalid_argument("qseries: coefficient beyond truncation");
  return s;
}

void qs_write(std::ostream& out, const QSeries& s) {
  out << "unit " << rat_str(s.unit) << "\n";
  out << "truncation " << rat_str(Rat(s.kmax) * s.unit) << "\n";
  for (auto& [k, c] : s.coeffs)
    if (c != 0) out << k << " " << rat_str(c) << "\n";
}

std::vector<std::pair<std::string, QSeries>> qs_read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("qseries: cannot open " + path);
  std::vector<std::pair<std::string, QSeries>> out;
  // format: repeated blocks:  series <name>\n unit ...\n truncation ...\n k c
  std::string line, cur_name;
  std::vector<std::string> block;
  auto flush = [&]() {
    if (cur_name.empty()) return;
    std::string joined;
    for (auto& l : block) joined += l + "\n";
    std::istringstream is(joined);
    out.push_back({cur_name, qs_read(is)});
    block.clear();
  };
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "series") {
      flush();
      ls >> cur_name;
      if (cur_name.empty()) throw std::invalid_argument("qseries: unnamed series");
    } else {
      if (cur_name.empty()) throw std::invalid_argument("qseries: data before series header");
      block.push_back(line);
    }
  }
  flush();
  return out;
}

}  // namespace latt
