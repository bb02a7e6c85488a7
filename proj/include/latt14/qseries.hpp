#pragma once

#include <map>

#include "latt14/rational.hpp"

namespace latt {

// q-expansion with exact coefficients, indexed by norm in a declared
// rational norm unit: coeffs[k] is the coefficient of q^{k*unit}.
// Coefficients are known exactly for k <= kmax.
struct QSeries {
  Rat unit = Rat(1);
  long kmax = -1;
  std::map<long, Rat> coeffs;  // absent index = 0

  Rat at(long k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  void set(long k, const Rat& v) {
    if (v == 0)
      coeffs.erase(k);
    else
      coeffs[k] = v;
  }
  long valuation() const;  // smallest k with nonzero coeff (kmax+1 if zero)

  QSeries truncated(long new_kmax) const;
  std::string to_string(int max_terms = 8) const;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const Rat& c);
QSeries qs_mul(const QSeries& a, const QSeries& b);
// requires valuation(a) >= valuation(b); exact power series division
QSeries qs_div(const QSeries& a, const QSeries& b);
bool qs_equal(const QSeries& a, const QSeries& b);  // up to common truncation

// file format: header lines `unit p/q` and `truncation B` (B in norm units),
// then `k c_k` lines; '#' comments allowed
QSeries qs_read(std::istream& in);
void qs_write(std::ostream& out, const QSeries& s);

// multi-series file: series separated by `series <name>` lines
std::vector<std::pair<std::string, QSeries>> qs_read_file(const std::string& path);

}  // namespace latt
