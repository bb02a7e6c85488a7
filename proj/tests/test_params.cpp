#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "latt14/params.hpp"

using namespace latt;

TEST_CASE("general type search reproduces the 17 triples") {
  Rat gamma_sq = rat_parse("2776/1000") * rat_parse("2776/1000");
  auto got = general_type_search(14, 105, 1746, gamma_sq);
  std::set<std::tuple<long, long, std::string>> expect = {
      {2, 324, "56/9"},  {2, 448, "6"},     {2, 1200, "28/5"},  {3, 486, "56/9"},
      {3, 672, "6"},     {4, 225, "112/15"}, {4, 343, "48/7"},  {4, 363, "224/33"},
      {4, 525, "32/5"},  {5, 384, "7"},     {5, 504, "20/3"},   {8, 450, "112/15"},
      {8, 567, "64/9"},  {11, 672, "22/3"}, {12, 675, "112/15"}, {19, 968, "84/11"},
      {20, 1029, "160/21"}};
  std::set<std::tuple<long, long, std::string>> gotset;
  for (auto& t : got) gotset.insert({t.n2, t.s, rat_str(t.r)});
  CHECK(gotset == expect);
  CHECK(got.size() == 17);
  // closed-form identity holds on every triple
  for (auto& t : got) {
    Rat lhs = Rat(t.s) * t.r * (3 * t.r - 16) / 2688;
    CHECK(lhs == t.n2);
  }
  // empty range
  CHECK(general_type_search(14, 50, 104, gamma_sq).empty());
}

TEST_CASE("minimal type search reproduces cases (a)-(p)") {
  auto rows = minimal_type_search(14);
  std::map<long, std::set<std::string>> got;
  for (auto& row : rows)
    for (auto& sol : row.solutions) got[row.s1].insert(rat_str(sol.r));

  std::map<long, std::set<std::string>> expect;
  for (long s1 : {6, 12, 18, 30, 36, 42}) expect[s1] = {"8", "32/3"};
  for (long s1 : {10, 14, 20, 22, 26, 28, 34, 38, 44, 46, 52}) expect[s1] = {"8"};
  for (long s1 : {9, 15, 21, 33, 39, 45, 51, 57, 60, 63, 66, 69, 78}) expect[s1] = {"32/3"};
  for (long s1 : {8, 16, 40}) expect[s1] = {"8", "28/3"};
  // the published case (d) also prints r=8 for s1=56 and 80; those entries
  // violate the N2 bound at r=8 (n2 = 28, 40 > 26) and are dropped here
  for (long s1 : {56, 80}) expect[s1] = {"28/3"};
  expect[24] = {"20/3", "8", "28/3", "32/3"};
  expect[25] = {"32/5", "128/15", "48/5"};
  expect[27] = {"64/9", "80/9", "32/3"};
  expect[32] = {"6", "22/3", "8", "28/3", "10"};
  expect[48] = {"8", "28/3", "32/3"};
  expect[49] = {"64/7", "208/21"};
  expect[50] = {"8", "128/15", "48/5", "152/15"};
  expect[54] = {"80/9", "88/9", "32/3"};
  expect[64] = {"28/3", "10"};
  expect[72] = {"28/3", "32/3"};
  expect[75] = {"128/15", "48/5", "32/3"};
  expect[81] = {"80/9", "32/3"};

  CHECK(got == expect);

  // spot-check n2 values quoted in the text: s1=25, r=32/5 -> n2=4
  for (auto& row : rows)
    if (row.s1 == 25)
      for (auto& sol : row.solutions)
        if (sol.r == Rat(32, 5)) CHECK(sol.n2 == 4);
}
