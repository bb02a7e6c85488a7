#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "latt14/io.hpp"
#include "latt14/qseries.hpp"

using namespace latt;

static QSeries qs(std::vector<std::pair<long, long>> cs, long kmax, Rat unit = Rat(1)) {
  QSeries s;
  s.unit = unit;
  s.kmax = kmax;
  for (auto& [k, c] : cs) s.set(k, Rat(c));
  return s;
}

TEST_CASE("ring ops") {
  auto one_plus_q = qs({{0, 1}, {1, 1}}, 10);
  auto one_minus_q = qs({{0, 1}, {1, -1}}, 10);
  auto prod = qs_mul(one_plus_q, one_minus_q);
  CHECK(prod.at(0) == 1);
  CHECK(prod.at(1) == 0);
  CHECK(prod.at(2) == -1);

  // division round trip
  auto back = qs_div(prod, one_minus_q);
  CHECK(qs_equal(back, one_plus_q));

  // f/f = 1
  auto f = qs({{0, 1}, {2, 240}, {3, 17}}, 9);
  auto r = qs_div(f, f);
  CHECK(r.at(0) == 1);
  for (long k = 1; k <= r.kmax; ++k) CHECK(r.at(k) == 0);

  // with valuation: (q^2 * f) / (q * g)
  auto q2f = qs({{2, 1}, {3, 5}}, 9);
  auto qg = qs({{1, 1}, {2, 2}}, 9);
  auto d = qs_div(q2f, qg);
  CHECK(d.valuation() == 1);
  CHECK(d.at(1) == 1);
  CHECK(d.at(2) == 3);  // (1+5q)/(1+2q) = 1+3q-...

  CHECK_THROWS(qs_div(qg, q2f));  // valuation mismatch
  auto other_unit = qs({{0, 1}}, 5, Rat(2));
  CHECK_THROWS(qs_add(one_plus_q, other_unit));
}

TEST_CASE("truncation propagation") {
  auto a = qs({{0, 1}, {1, 1}}, 5);
  auto b = qs({{1, 1}}, 3);  // valuation 1
  auto p = qs_mul(a, b);
  // known up to min(5+1, 3+0) = 3
  CHECK(p.kmax == 3);
}

TEST_CASE("file io round trip") {
  auto a = qs({{0, 1}, {5, 1008}, {8, -210044}}, 10, Rat(2));
  std::ostringstream os;
  qs_write(os, a);
  std::istringstream is(os.str());
  auto b = qs_read(is);
  CHECK(b.unit == a.unit);
  CHECK(b.kmax == a.kmax);
  CHECK(qs_equal(a, b));
}

TEST_CASE("fixture file parses") {
  auto series = qs_read_file(data_dir() + "/qseries/dim14_s504_family.qs");
  REQUIRE(series.size() == 2);
  CHECK(series[0].first == "theta");
  CHECK(series[0].second.at(7) == 43124);
  CHECK(series[1].first == "f0");
  CHECK(series[1].second.at(7) == -11);
  CHECK(series[1].second.unit == 2);
}
