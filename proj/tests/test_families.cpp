#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "burch/families.hpp"

using namespace burch;

namespace {

RingPtr xyz() { return PolyRing::make({"x", "y", "z"}); }

Poly P(const RingPtr& R, const std::string& s) { return parse_poly(R, s); }

IdealHandle ideal(const RingPtr& R, std::initializer_list<std::string> gens) {
  std::vector<Poly> gs;
  for (const auto& s : gens) gs.push_back(parse_poly(R, s));
  return IdealHandle(R, std::move(gs));
}

std::vector<Poly> forms(const RingPtr& R,
                        std::initializer_list<std::string> fs) {
  std::vector<Poly> out;
  for (const auto& s : fs) out.push_back(parse_poly(R, s));
  return out;
}

}  // namespace

TEST_CASE("monomial family generators") {
  auto R = xyz();
  MonomialFamily a = monomial_family(R, "xy");
  CHECK(ideal_equal(IdealHandle(R, a.generators),
                    ideal(R, {"x*y", "y*z", "z^2"})));

  MonomialFamily b = monomial_family(R, "xyxy");
  CHECK(ideal_equal(IdealHandle(R, b.generators),
                    ideal(R, {"x^2*y^2", "x*y^2*z", "x*y*z^2", "y*z^3", "z^4"})));

  MonomialFamily c = monomial_family(R, "xxyy");
  CHECK(ideal_equal(IdealHandle(R, c.generators),
                    ideal(R, {"x^2*y^2", "x*y^2*z", "y^2*z^2", "y*z^3", "z^4"})));
  for (const auto& g : c.generators) CHECK(g.terms().size() == 1);
  CHECK(c.phi.rows() == 5);
  CHECK(c.phi.cols() == 4);

  CHECK_THROWS_AS(monomial_family(R, "xx"), std::invalid_argument);
  CHECK_THROWS_AS(monomial_family(R, "yy"), std::invalid_argument);
  CHECK_THROWS_AS(monomial_family(R, "x"), std::invalid_argument);
  CHECK_THROWS_AS(monomial_family(R, "xay"), std::invalid_argument);
}

TEST_CASE("mixed monomial family instances") {
  auto R = xyz();
  auto g1 = mixed_monomial_family(R, 4, 1);
  CHECK(ideal_equal(IdealHandle(R, g1),
                    IdealHandle(R, monomial_family(R, "xyy").generators)));

  auto g3 = mixed_monomial_family(R, 4, 3);
  REQUIRE(g3.size() == 4);
  CHECK(ideal_equal(IdealHandle(R, g3),
                    ideal(R, {"x*y^2", "x*y*z", "x*z^2", "z^3"})));
  // the r=3 member is linearly presented with chaos invariant 1
  SyzygyResult syz = linear_syzygy_matrix(g3);
  REQUIRE(syz.phi.has_value());
  CHECK(chaos_invariant(*syz.phi).u == 1);

  CHECK_THROWS_AS(mixed_monomial_family(R, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(mixed_monomial_family(R, 4, 4), std::invalid_argument);
}

TEST_CASE("arrangement family") {
  auto R = xyz();
  ArrangementFamily a = arrangement_family(forms(R, {"x", "y", "x + y", "z"}));
  REQUIRE(a.points.size() == 4);
  int doubles = 0, simples = 0;
  for (const auto& p : a.points) {
    if (p.multiplicity == 2) {
      ++doubles;
      CHECK(p.point == std::vector<mpq_class>{0, 0, 1});
    } else {
      CHECK(p.multiplicity == 1);
      ++simples;
    }
  }
  CHECK(doubles == 1);
  CHECK(simples == 3);
  for (const auto& g : a.generators) CHECK(g.degree() == 3);

  ArrangementFamily tri = arrangement_family(forms(R, {"x", "y", "z"}));
  CHECK(ideal_equal(IdealHandle(R, tri.generators),
                    ideal(R, {"x*y", "x*z", "y*z"})));
  for (const auto& p : tri.points) CHECK(p.multiplicity == 1);

  ArrangementFamily con =
      arrangement_family(forms(R, {"x", "y + z", "y - z", "y"}));
  int concurrent_mult = 0;
  for (const auto& p : con.points)
    if (p.point == std::vector<mpq_class>{1, 0, 0})
      concurrent_mult = p.multiplicity;
  CHECK(concurrent_mult == 2);

  CHECK_THROWS_AS(arrangement_family(forms(R, {"x", "y", "x + y"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(arrangement_family(forms(R, {"x", "y", "2*y", "z"})),
                  std::invalid_argument);
}

TEST_CASE("generic five line arrangement") {
  // ten simple crossings; the internal fat-point identity check on this
  // instance once exposed a reduction bug, keep it as a regression
  auto R = xyz();
  ArrangementFamily a =
      arrangement_family(forms(R, {"x", "y", "z", "x + y + z", "x - y + 2*z"}));
  CHECK(a.points.size() == 10);
  for (const auto& p : a.points) CHECK(p.multiplicity == 1);
  for (const auto& g : a.generators) CHECK(g.degree() == 4);
}

TEST_CASE("fat point pipeline") {
  auto R = xyz();
  // the fat point data of the arrangement {x, y, x+y, z}
  std::vector<FatPoint> spec = {{{P(R, "x"), P(R, "y")}, 2},
                                {{P(R, "x"), P(R, "z")}, 1},
                                {{P(R, "y"), P(R, "z")}, 1},
                                {{P(R, "x + y"), P(R, "z")}, 1}};
  FatPointResult fr = fat_point_ideal(R, spec);
  CHECK(fr.equigenerated);
  CHECK(fr.minimal_generators.size() == 4);
  REQUIRE(fr.syzygies.phi.has_value());
  CHECK(fr.hypotheses_hold);
  REQUIRE(fr.expected_u.has_value());
  CHECK(*fr.expected_u == 1);
  CHECK(fr.u_matches);
  ArrangementFamily af = arrangement_family(forms(R, {"x", "y", "x + y", "z"}));
  CHECK(ideal_equal(fr.ideal, IdealHandle(R, af.generators)));

  // a single double point falls outside the height hypotheses
  FatPointResult dbl = fat_point_ideal(R, {{{P(R, "x"), P(R, "y")}, 2}});
  CHECK(dbl.equigenerated);
  CHECK(dbl.syzygies.phi.has_value());
  CHECK_FALSE(dbl.hypotheses_hold);

  // two simple points are not equigenerated: (x, yz)
  FatPointResult two = fat_point_ideal(
      R, {{{P(R, "x"), P(R, "y")}, 1}, {{P(R, "x"), P(R, "z")}, 1}});
  CHECK_FALSE(two.equigenerated);
  CHECK(ideal_equal(two.ideal, ideal(R, {"x", "y*z"})));

  CHECK_THROWS_AS(
      fat_point_ideal(R, {{{P(R, "x"), P(R, "y")}, 1},
                          {{P(R, "2*x"), P(R, "-y")}, 2}}),
      std::invalid_argument);
  CHECK_THROWS_AS(fat_point_ideal(R, {{{P(R, "x"), P(R, "2*x")}, 1}}),
                  std::invalid_argument);
}

TEST_CASE("subhomaloidal degree") {
  CHECK(subhomaloidal_degree({1, 1, 1, 1, 1, 1}) == 3);
  CHECK(subhomaloidal_degree({2, 2, 2, 2, 1, 1, 1, 1}) == 5);
  CHECK_FALSE(subhomaloidal_degree({2, 1, 1}).has_value());
  CHECK_THROWS_AS(subhomaloidal_degree({-1, 4}), std::invalid_argument);

  // short sweep: every solvable list yields an odd degree, never a throw
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d) {
          auto s = subhomaloidal_degree({a, b, c, d});
          if (s) CHECK(*s % 2 == 1);
        }
}

TEST_CASE("degenerate arrangement equivalences") {
  auto R = xyz();
  DegenerateReport deg =
      degenerate_arrangement_check(forms(R, {"x", "y", "y + z", "y - z", "y + 2*z"}));
  CHECK(deg.concurrent);
  CHECK(deg.u == 1);
  CHECK(deg.r_at_most_one);
  CHECK(deg.consistent);
  CHECK(deg.identities_checked);
  CHECK(deg.sum_identity);
  CHECK(deg.square_identity);
  CHECK(deg.mu_square_identity);
  CHECK(deg.multiplicities == std::vector<int>{3, 1, 1, 1, 1});

  DegenerateReport gen =
      degenerate_arrangement_check(forms(R, {"x", "y", "z", "x + y + z"}));
  CHECK_FALSE(gen.concurrent);
  CHECK(gen.u == 2);
  CHECK_FALSE(gen.r_at_most_one);
  CHECK(gen.consistent);
  CHECK_FALSE(gen.identities_checked);

  DegenerateReport tri = degenerate_arrangement_check(forms(R, {"x", "y", "z"}));
  CHECK(tri.concurrent);
  CHECK(tri.u == 1);
  CHECK(tri.consistent);
  CHECK(tri.identities_checked);
  CHECK(tri.sum_identity);
  CHECK(tri.square_identity);
  CHECK(tri.mu_square_identity);
}
