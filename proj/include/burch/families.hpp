#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burch/invariants.hpp"

namespace burch {

/// Bidiagonal presentation matrix of a monomial ideal: diagonal z,
/// subdiagonal the negated entry sequence over {x, y}.  The sequence must
/// contain both letters; the generators are the signed maximal minors, and
/// the scheme they cut out is the two points (1:0:0), (0:1:0).
struct MonomialFamily {
  std::string letters;
  LinearMatrix phi;
  std::vector<Poly> generators;
};
MonomialFamily monomial_family(const RingPtr& ring, const std::string& letters);

/// Monomial generator lists x*y^(n-2-i)*z^i for i < r, y^(n-1-i)*z^i for
/// r <= i <= n-2, and z^(n-1); the parameter r counts the generators
/// divisible by x.
std::vector<Poly> mixed_monomial_family(const RingPtr& ring, int n, int r);

struct ArrangementPoint {
  std::vector<mpq_class> point;
  std::vector<Poly> prime;  // two linear forms vanishing at the point
  int lines = 0;            // arrangement forms vanishing at the point
  int multiplicity = 0;     // lines - 1
};

/// A line arrangement: n pairwise non-proportional linear forms of rank 3.
/// Generators are the (n-1)-fold products; phi is bidiagonal with diagonal
/// form_i and subdiagonal -form_(i+1), re-verified against the signed
/// minors.  The identity I = intersection of point powers is re-verified.
struct ArrangementFamily {
  std::vector<Poly> forms;
  LinearMatrix phi;
  std::vector<Poly> generators;
  std::vector<ArrangementPoint> points;
};
ArrangementFamily arrangement_family(const std::vector<Poly>& forms);

struct FatPoint {
  std::vector<Poly> prime;  // two independent linear forms
  int multiplicity = 1;
};

/// Intersection of powers of rational point ideals, with a presentation
/// attempt.  When the minimal generators are equigenerated and carry a
/// linear syzygy matrix phi of full size, the chaos invariant is computed
/// and compared with n - m1 - 1 (m1 the largest multiplicity); specs whose
/// phi falls outside the height hypotheses are flagged, not rejected.
struct FatPointResult {
  IdealHandle ideal;
  std::vector<Poly> minimal_generators;
  bool equigenerated = false;
  SyzygyResult syzygies;
  bool hypotheses_hold = false;
  std::optional<ChaosProfile> chaos;
  std::optional<int> expected_u;  // n - m1 - 1
  bool u_matches = false;
};
FatPointResult fat_point_ideal(const RingPtr& ring, std::vector<FatPoint> spec);

/// s with sum(mu) = 3(s-1) and sum(mu^2) = s(s-1), when such an s exists.
/// The returned s is always odd; an even solution would contradict the
/// parity of the two identities and raises an internal error.
std::optional<int> subhomaloidal_degree(const std::vector<int>& mults);

/// The three degenerate-arrangement conditions, computed independently:
/// (a) some n-1 of the forms are concurrent, (b) the chaos invariant is 1,
/// (c) the reduction number is at most 1.  `consistent` records whether
/// they agree; when they hold, the multiplicity identities
/// sum(m) = 2n-3, sum(m^2) = n^2-3n+3 and mu(I^2) = 3(n-1) are checked.
struct DegenerateReport {
  bool concurrent = false;
  int u = 0;
  std::optional<int> reduction_number;
  bool r_at_most_one = false;
  bool consistent = false;
  bool identities_checked = false;
  bool sum_identity = false;
  bool square_identity = false;
  bool mu_square_identity = false;
  std::vector<int> multiplicities;
};
DegenerateReport degenerate_arrangement_check(const std::vector<Poly>& forms);

}  // namespace burch
