#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "burch/linear_matrix.hpp"

using namespace burch;

namespace {

RingPtr xyz() { return PolyRing::make({"x", "y", "z"}); }

Poly P(const RingPtr& R, const std::string& s) { return parse_poly(R, s); }

LinearMatrix mat(const RingPtr& R,
                 std::vector<std::vector<std::string>> entries) {
  std::vector<std::vector<Poly>> rows;
  for (auto& row : entries) {
    rows.emplace_back();
    for (auto& e : row) rows.back().push_back(parse_poly(R, e));
  }
  return LinearMatrix::from_entries(R, std::move(rows));
}

// bidiagonal matrix of a basic entry sequence: diagonal z, subdiagonal -c_i
LinearMatrix sequence_phi(const RingPtr& R, const std::string& letters) {
  int n = static_cast<int>(letters.size()) + 1;
  LinearMatrix m(R, n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    m.set(j, j, P(R, "z"));
    m.set(j + 1, j, -P(R, std::string(1, letters[j])));
  }
  return m;
}

IdealHandle ideal(const RingPtr& R, std::initializer_list<std::string> gens) {
  std::vector<Poly> gs;
  for (const auto& s : gens) gs.push_back(parse_poly(R, s));
  return IdealHandle(R, std::move(gs));
}

std::vector<int> height_spectrum(const LinearMatrix& m) {
  std::vector<int> hs;
  for (int t = 1; t <= std::min(m.rows(), m.cols()); ++t)
    hs.push_back(dimension_and_height(minors_ideal(m, t)).height);
  return hs;
}

}  // namespace

TEST_CASE("minors ideal") {
  auto R = xyz();
  CHECK(ideal_equal(minors_ideal(mat(R, {{"x", "0"}, {"0", "y"}}), 2),
                    ideal(R, {"x*y"})));
  LinearMatrix phi = sequence_phi(R, "xy");
  CHECK(ideal_equal(minors_ideal(phi, 2), ideal(R, {"x*y", "y*z", "z^2"})));
  CHECK(ideal_equal(minors_ideal(phi, 1), ideal(R, {"x", "y", "z"})));
  // minors larger than the matrix give the zero ideal
  CHECK(minors_ideal(phi, 3).gens().empty());
  CHECK_THROWS_AS(minors_ideal(phi, 0), std::invalid_argument);
}

TEST_CASE("hilbert burch generators") {
  auto R = xyz();
  auto f = hilbert_burch_generators(sequence_phi(R, "xy"));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == P(R, "x*y"));
  CHECK(f[1] == P(R, "y*z"));
  CHECK(f[2] == P(R, "z^2"));

  auto g = hilbert_burch_generators(sequence_phi(R, "xyy"));
  REQUIRE(g.size() == 4);
  IdealHandle I(R, g);
  CHECK(ideal_equal(I, ideal(R, {"x*y^2", "y^2*z", "y*z^2", "z^3"})));

  // degenerate: repeated rows give a zero generator, identity still holds
  auto z = hilbert_burch_generators(
      mat(R, {{"x", "y"}, {"x", "y"}, {"z", "x"}}));
  CHECK(z[2].is_zero());

  CHECK_THROWS_AS(hilbert_burch_generators(mat(R, {{"x", "y"}})),
                  std::invalid_argument);
}

TEST_CASE("generators regenerate the maximal minors ideal") {
  auto R = xyz();
  LinearMatrix phi = sequence_phi(R, "xxy");
  IdealHandle I(R, hilbert_burch_generators(phi));
  CHECK(ideal_equal(I, minors_ideal(phi, 3)));
}

TEST_CASE("conjugation") {
  auto R = xyz();
  LinearMatrix phi = sequence_phi(R, "xy");
  auto id = ConjugationAction::identity(R, 3, 2);
  LinearMatrix same = conjugate(phi, id);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) CHECK(same.at(i, j) == phi.at(i, j));

  // coordinate swap x <-> y sends the "xy" matrix to the "yx" matrix
  ConjugationAction swap_xy = id;
  swap_xy.coord_change = QMat(3, 3);
  swap_xy.coord_change.at(0, 1) = 1;
  swap_xy.coord_change.at(1, 0) = 1;
  swap_xy.coord_change.at(2, 2) = 1;
  LinearMatrix yx = conjugate(phi, swap_xy);
  LinearMatrix expect = sequence_phi(R, "yx");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) CHECK(yx.at(i, j) == expect.at(i, j));

  ConjugationAction bad = id;
  bad.row_op = QMat(3, 3);
  CHECK_THROWS_AS(conjugate(phi, bad), std::invalid_argument);
}

TEST_CASE("height spectrum invariant under conjugation") {
  auto R = xyz();
  LinearMatrix phi = sequence_phi(R, "xyy");
  auto hs = height_spectrum(phi);
  for (unsigned long seed : {3UL, 17UL}) {
    auto g = ConjugationAction::random(R, 4, 3, seed);
    CHECK(height_spectrum(conjugate(phi, g)) == hs);
  }
  auto g = ConjugationAction::random(R, 4, 3, 5);
  LinearMatrix back = conjugate(conjugate(phi, g), g.inverse());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) CHECK(back.at(i, j) == phi.at(i, j));
}

TEST_CASE("rank at point") {
  auto R = xyz();
  LinearMatrix phi = sequence_phi(R, "xyy");
  CHECK(rank_at_point(phi, {1, 0, 0}) == 1);
  CHECK(rank_at_point(phi, {0, 1, 0}) == 2);
  CHECK(rank_at_point(LinearMatrix(R, 2, 2), {1, 1, 1}) == 0);
  CHECK_THROWS_AS(rank_at_point(phi, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("one generic test") {
  auto T3 = PolyRing::make({"t1", "t2", "t3"});
  auto h = one_generic_test(mat(T3, {{"t1", "t2"}, {"t2", "t3"}}));
  CHECK(h.one_generic);

  auto T2 = PolyRing::make({"t1", "t2"});
  auto d = one_generic_test(mat(T2, {{"t1", "0"}, {"0", "t2"}}));
  CHECK_FALSE(d.one_generic);
  REQUIRE(d.witness.has_value());
  // the witness row makes the combined row have dependent entries
  mpq_class a1 = d.witness->first, a2 = d.witness->second;
  CHECK((a1 == 0 || a2 == 0));

  auto T4 = PolyRing::make({"t1", "t2", "t3", "t4"});
  auto b = one_generic_test(mat(T4, {{"-t3", "-t4"}, {"t1", "t3"}}));
  CHECK(b.one_generic);
}

TEST_CASE("one generic invariant under scalar action") {
  auto T3 = PolyRing::make({"t1", "t2", "t3"});
  LinearMatrix H = mat(T3, {{"t1", "t2"}, {"t2", "t3"}});
  for (unsigned long seed : {2UL, 9UL}) {
    auto g = ConjugationAction::random(T3, 2, 2, seed);
    g.coord_change = QMat::identity(3);
    CHECK(one_generic_test(conjugate(H, g)).one_generic ==
          one_generic_test(H).one_generic);
  }
}

TEST_CASE("structured matrices") {
  auto T = PolyRing::make({"t0", "t1", "t2", "t3", "t4"});
  LinearMatrix C = catalecticant_2step(T, {0, 1, 2, 3, 4});
  CHECK(C.rows() == 2);
  CHECK(C.cols() == 3);
  CHECK(C.at(0, 0) == P(T, "t0"));
  CHECK(C.at(0, 2) == P(T, "t2"));
  CHECK(C.at(1, 0) == P(T, "t2"));
  CHECK(C.at(1, 2) == P(T, "t4"));

  LinearMatrix H = hankel_matrix(T, {2, 3, 4});
  CHECK(H.cols() == 2);
  CHECK(H.at(0, 0) == P(T, "t2"));
  CHECK(H.at(1, 0) == P(T, "t3"));
  CHECK(H.at(1, 1) == P(T, "t4"));

  auto big = PolyRing::make({"x", "y", "z", "t0", "t1", "t2"});
  LinearMatrix S = scroll_matrix(P(big, "x"), P(big, "-z"), {3, 4, 5});
  CHECK(S.cols() == 3);
  CHECK(S.at(0, 0) == P(big, "x"));
  CHECK(S.at(1, 0) == P(big, "-z"));
  CHECK(S.at(0, 1) == P(big, "t0"));
  CHECK(S.at(1, 2) == P(big, "t2"));

  CHECK_THROWS_AS(catalecticant_2step(T, {0, 1}), std::invalid_argument);
}

TEST_CASE("canonicalization") {
  auto R = xyz();
  LinearMatrix phi = sequence_phi(R, "xyy");
  std::vector<Poly> p = {P(R, "y"), P(R, "z")};
  CanonicalForm cf = canonicalize_chaos_form(phi, p, 1);
  // block predicate: x appears only in the first diagonal slot
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) {
      mpq_class xc = cf.phi_c.at(i, j).is_zero()
                         ? mpq_class(0)
                         : cf.phi_c.at(i, j).linear_coeff(0);
      CHECK(xc == ((i == 0 && j == 0) ? 1 : 0));
    }
  // the action reproduces phi_c from phi
  LinearMatrix again = conjugate(phi, cf.action);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) CHECK(again.at(i, j) == cf.phi_c.at(i, j));
  // conjugation preserves the ideal of maximal minors up to coordinates
  CHECK(height_spectrum(cf.phi_c) == height_spectrum(phi));

  // already canonical input stays canonical
  CanonicalForm cf2 = canonicalize_chaos_form(cf.phi_c, p, 1);
  CHECK(cf2.phi_c.at(0, 0).linear_coeff(0) == 1);

  CHECK_THROWS_AS(canonicalize_chaos_form(phi, p, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize_chaos_form(phi, {P(R, "y"), P(R, "2*y")}, 1),
                  std::invalid_argument);
}
