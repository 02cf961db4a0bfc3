#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burch/binary.hpp"
#include "burch/linalg.hpp"
#include "burch/poly.hpp"

using namespace burch;

namespace {

RingPtr xyz() { return PolyRing::make({"x", "y", "z"}); }

Poly P(const RingPtr& R, const std::string& s) { return parse_poly(R, s); }

// deterministic random polynomial for property checks
Poly random_poly(const RingPtr& R, std::mt19937_64& rng, int maxdeg) {
  std::vector<Term> terms;
  int nterms = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < nterms; ++i) {
    Exp e(R->nvars(), 0);
    int left = maxdeg;
    for (int v = 0; v < R->nvars(); ++v) {
      e[v] = static_cast<int>(rng() % (left + 1));
      left -= e[v];
    }
    long c = static_cast<long>(rng() % 21) - 10;
    if (c != 0) terms.push_back({std::move(e), mpq_class(c)});
  }
  return Poly::from_terms(R, std::move(terms));
}

}  // namespace

TEST_CASE("parse linear form") {
  auto R = xyz();
  Poly f = P(R, "x + 2*y - z");
  CHECK(f.is_linear_form());
  CHECK(f.linear_coeff(0) == 1);
  CHECK(f.linear_coeff(1) == 2);
  CHECK(f.linear_coeff(2) == -1);
}

TEST_CASE("parse zero") {
  auto R = xyz();
  Poly f = P(R, "0");
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
}

TEST_CASE("parse with expansion") {
  auto R = xyz();
  CHECK(P(R, "(x+y)^2 - x^2 - 2*x*y") == P(R, "y^2"));
}

TEST_CASE("parse errors") {
  auto R = xyz();
  CHECK_THROWS_AS(parse_poly(R, "x + w"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(R, "x+*y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(R, "x^"), std::invalid_argument);
}

TEST_CASE("parse print round trip") {
  auto R = xyz();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    Poly f = random_poly(R, rng, 5);
    CHECK(parse_poly(R, f.str()) == f);
  }
}

TEST_CASE("rational coefficients") {
  auto R = xyz();
  Poly f = P(R, "1/2*x + 1/3*x");
  CHECK(f == P(R, "5/6*x"));
}

TEST_CASE("ring axioms on random samples") {
  auto R = xyz();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    Poly f = random_poly(R, rng, 4);
    Poly g = random_poly(R, rng, 4);
    Poly h = random_poly(R, rng, 4);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("degree multiplicativity for homogeneous parts") {
  auto R = xyz();
  Poly f = P(R, "x^2 + 3*y*z");
  Poly g = P(R, "x*y*z - z^3");
  CHECK(f.is_homogeneous());
  CHECK(g.is_homogeneous());
  CHECK((f * g).degree() == f.degree() + g.degree());
}

TEST_CASE("substitution homomorphism") {
  auto R = xyz();
  std::vector<Poly> swap_xy = {P(R, "y"), P(R, "x"), P(R, "z")};
  CHECK(P(R, "x*y").map(R, swap_xy) == P(R, "x*y"));

  std::vector<Poly> shear = {P(R, "x+z"), P(R, "y"), P(R, "z")};
  CHECK(P(R, "x^2").map(R, shear) == P(R, "x^2 + 2*x*z + z^2"));
}

TEST_CASE("substitution kills toric relation") {
  auto T = PolyRing::make({"t1", "t2", "t3", "t4"});
  auto R = xyz();
  std::vector<Poly> images = {P(R, "y^2*z"), P(R, "x*y^2"), P(R, "y*z^2"),
                              P(R, "z^3")};
  Poly rel = parse_poly(T, "t1*t4 - t3^2");
  CHECK(rel.map(R, images).is_zero());
}

TEST_CASE("binary form gcd") {
  auto R = PolyRing::make({"a", "b"});
  CHECK(binary_form_gcd({P(R, "a^2"), P(R, "a*b")}) == P(R, "a"));
  CHECK(binary_form_gcd({P(R, "a^2 - b^2"), P(R, "a^2 + a*b")}) ==
        P(R, "a + b"));
  CHECK(binary_form_gcd({P(R, "a"), P(R, "b")}) == P(R, "1"));
}

TEST_CASE("binary form gcd divides members") {
  auto R = PolyRing::make({"a", "b"});
  std::vector<Poly> forms = {P(R, "a^3*b - a*b^3"), P(R, "a^4 - a^2*b^2"),
                             P(R, "a^2*b^2 + a^3*b")};
  Poly g = binary_form_gcd(forms);
  CHECK(g == P(R, "a^2 + a*b"));
  // g divides f exactly when gcd(f, g) = g
  for (const auto& f : forms) CHECK(binary_form_gcd({f, g}) == g);
}

TEST_CASE("binary form rational root") {
  auto R = PolyRing::make({"a", "b"});
  auto root = binary_form_rational_root(P(R, "a^2 - 4*b^2"));
  REQUIRE(root.has_value());
  // (a:b) with a^2 = 4 b^2
  CHECK(root->first * root->first == 4 * root->second * root->second);
  CHECK_FALSE(binary_form_rational_root(P(R, "a^2 + b^2")).has_value());
  CHECK(binary_form_rational_root(P(R, "a*b")).has_value());
}

TEST_CASE("linear coefficient matrix") {
  auto R = xyz();
  QMat m = linear_coeff_matrix({P(R, "x+y"), P(R, "y+z")});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.rank() == 2);
  CHECK(linear_coeff_matrix({P(R, "x"), P(R, "2*x")}).rank() == 1);
  CHECK(linear_coeff_matrix({P(R, "x"), P(R, "y"), P(R, "z"),
                             P(R, "x+y+z")}).rank() == 3);
  CHECK_THROWS_AS(linear_coeff_matrix({P(R, "x^2")}), std::invalid_argument);
}

TEST_CASE("rank invariant under row recombination") {
  auto R = xyz();
  std::vector<Poly> forms = {P(R, "x+y"), P(R, "y-z")};
  std::vector<Poly> mixed = {forms[0] + forms[1] * mpq_class(3),
                             forms[1] - forms[0] * mpq_class(2)};
  CHECK(linear_coeff_matrix(forms).rank() == linear_coeff_matrix(mixed).rank());
}

TEST_CASE("random linear forms deterministic") {
  auto R = xyz();
  auto a = random_linear_forms(R, 1, 1);
  auto b = random_linear_forms(R, 1, 1);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == b[0]);
  CHECK(a[0].is_linear_form());
  CHECK(random_linear_forms(R, 0, 1).empty());

  auto T = PolyRing::make({"t1", "t2", "t3", "t4", "t5"});
  auto fs = random_linear_forms(T, 3, 7);
  CHECK(linear_coeff_matrix(fs).rank() == 3);
}

TEST_CASE("prime field arithmetic") {
  FieldSpec F = FieldSpec::prime_field(32003);
  CHECK(F.canon(mpq_class(-1)) == 32002);
  CHECK(F.canon(F.inv(mpq_class(2)) * 2) == 1);
  CHECK(F.canon(mpq_class(1, 2)) == F.inv(mpq_class(2)));
  CHECK_THROWS_AS(FieldSpec::prime_field(32004), std::invalid_argument);

  auto R = PolyRing::make({"x", "y"}, MonomialOrder::degrevlex(), F);
  Poly f = parse_poly(R, "x + y");
  Poly p = f.pow(5);
  CHECK(p.coeff_of({4, 1}) == 5);
  CHECK(p.coeff_of({3, 2}) == 10);
}

TEST_CASE("evaluation and lifting") {
  auto R = xyz();
  Poly f = P(R, "x^2*y - z");
  CHECK(f.eval({2, 3, 5}) == 7);

  auto big = PolyRing::make({"w", "x", "y", "z"});
  Poly lifted = f.lift_to(big);
  CHECK(lifted.str() == f.str());
  CHECK(lifted.project_to(R) == f);
}

TEST_CASE("canonical scaling") {
  auto R = xyz();
  Poly f = P(R, "-2/3*x^2 - 4/3*y*z");
  Poly c = f.canonical_scaled();
  CHECK(c == P(R, "x^2 + 2*y*z"));
  CHECK(c.canonical_scaled() == c);
  CHECK(f.content() > 0);
}

TEST_CASE("cross ring operations rejected") {
  auto R = xyz();
  auto S = PolyRing::make({"x", "y"});
  CHECK_THROWS_AS(P(R, "x") + parse_poly(S, "x"), std::invalid_argument);
}
