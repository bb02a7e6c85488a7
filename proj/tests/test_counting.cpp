#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latt14/counting.hpp"

using namespace latt;

TEST_CASE("norm 4, products {2,1}: unique tight solution") {
  auto prob = counting_problem(14, Rat(4), {Rat(2), Rat(1)});
  auto sol = counting_system(prob);
  REQUIRE(sol.consistent);
  CHECK(sol.free_params.empty());
  CHECK(sol.counts.at("a").constant == 105);
  CHECK(sol.counts.at("a1").constant == 104);
  CHECK(sol.counts.at("a2").constant == 0);
}

TEST_CASE("norm 8, products {4,2,1}: affine family in a4") {
  auto prob = counting_problem(14, Rat(8), {Rat(4), Rat(2), Rat(1)});
  auto sol = counting_system(prob);
  REQUIRE(sol.consistent);
  REQUIRE(sol.free_params == std::vector<std::string>{"a4"});
  auto& a = sol.counts.at("a");
  CHECK(a.constant == 105);
  CHECK(a.coeffs.at("a4") == 5);
  auto& a1 = sol.counts.at("a1");
  CHECK(a1.constant == 0);
  CHECK(a1.coeffs.at("a4") == Rat(64, 21));
  auto& a2 = sol.counts.at("a2");
  CHECK(a2.constant == 104);
  CHECK(a2.coeffs.at("a4") == Rat(20, 21));
  // side constraints of the lemma: a4 > 0 even, divisible by 21, and <= 26:
  // no feasible point
  std::vector<SideConstraint> cs;
  cs.push_back({AffineExpr::param("a4") - AffineExpr(Rat(2)), SideConstraint::nonneg});
  cs.push_back({AffineExpr::param("a4"), SideConstraint::even});
  cs.push_back({AffineExpr::param("a4"), SideConstraint::divisible, Int(21)});
  cs.push_back({AffineExpr(Rat(26)) - AffineExpr::param("a4"), SideConstraint::nonneg});
  auto pts = enumerate_feasible(sol, cs, {{"a4", {0, 100}}});
  CHECK(pts.empty());
}

TEST_CASE("norm 10 family with cardinality 21*t1 and t1 = 8*t2") {
  auto prob = counting_problem(14, Rat(10), {Rat(5), Rat(2), Rat(1), Rat(0)},
                               AffineExpr::param("t1", Rat(21)));
  auto sol = counting_system(prob);
  REQUIRE(sol.consistent);
  // substitute t1 = 8 t2 and compare with the printed family
  auto sub = [&](const AffineExpr& e) {
    return e.substituted("t1", AffineExpr::param("t2", Rat(8)));
  };
  AffineExpr a2 = sub(sol.counts.at("a2"));
  CHECK(a2.constant == -825);
  CHECK(a2.coeffs.at("t2") == 1775);
  CHECK(a2.coeffs.at("a5") == -50);
  AffineExpr a1 = sub(sol.counts.at("a1"));
  CHECK(a1.constant == 3200);
  CHECK(a1.coeffs.at("t2") == -5900);
  CHECK(a1.coeffs.at("a5") == 175);
  AffineExpr a0 = sub(sol.counts.at("a0"));
  CHECK(a0.constant == -2376);
  CHECK(a0.coeffs.at("t2") == 4293);
  CHECK(a0.coeffs.at("a5") == -126);
}

TEST_CASE("external-alpha system can force a contradiction") {
  // layer of norm 20 (cardinality 21*t1) against external beta of norm 30,
  // products {15, 0}: only the zero solution, i.e. inconsistent for t1 > 0
  auto prob = counting_problem(14, Rat(20), {Rat(15), Rat(0)},
                               AffineExpr::param("t1", Rat(21)));
  prob.external_norm = Rat(30);
  auto sol = counting_system(prob);
  CHECK(!sol.consistent);
  REQUIRE(!sol.residuals.empty());
  // residual is proportional to t1
  CHECK(sol.residuals[0].coeffs.count("t1"));
}

TEST_CASE("external-alpha unique solution (norm-12 beta against norm-8 layer)") {
  auto prob = counting_problem(14, Rat(8), {Rat(6), Rat(3), Rat(0)},
                               AffineExpr::param("t1", Rat(21)));
  prob.external_norm = Rat(12);
  auto sol = counting_system(prob);
  REQUIRE(sol.consistent);
  CHECK(sol.free_params == std::vector<std::string>{"t1"});
  CHECK(sol.counts.at("a0").coeffs.at("t1") == 9);
  CHECK(sol.counts.at("a3").coeffs.at("t1") == Rat(32, 3));
  CHECK(sol.counts.at("a6").coeffs.at("t1") == Rat(4, 3));
}

TEST_CASE("substitution and printing") {
  AffineExpr e = AffineExpr(Rat(3)) + AffineExpr::param("x", Rat(2));
  auto f = e.substituted("x", AffineExpr::param("y", Rat(4)) + AffineExpr(Rat(1)));
  CHECK(f.constant == 5);
  CHECK(f.coeffs.at("y") == 8);
  CHECK(e.to_string() == "3 + 2*x");
}
