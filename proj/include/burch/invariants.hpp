#pragma once

#include <map>
#include <optional>
#include <vector>

#include "burch/hilbert.hpp"
#include "burch/linear_matrix.hpp"

namespace burch {

/// Rational points of the projective scheme cut out by a homogeneous ideal of
/// height 2 in three variables, found chart by chart.  `complete` is true
/// when every point over the algebraic closure was shown to be rational.
struct PointSearch {
  std::vector<std::vector<mpq_class>> points;
  bool complete = false;
};
PointSearch rational_points_codim2(const IdealHandle& I);

/// Two independent linear forms generating the ideal of a projective point.
std::vector<Poly> linear_prime_at(const RingPtr& ring,
                                  const std::vector<mpq_class>& pt);

struct LocalProfile {
  std::vector<Poly> prime;         // two linear forms
  std::vector<mpq_class> point;    // V(prime)
  int u_p = 0;
  int mu = 0;                      // minimal generators of I localized at p
  bool complete_intersection = false;
};

struct ChaosProfile {
  std::map<int, int> heights;      // t -> ht I_t(phi)
  int u = 0;
  std::vector<LocalProfile> local;
  /// Present when all minimal primes of I_(u+1) were found rational.
  bool local_complete = false;
  /// The shared point of I_(u+1)..I_(n-u-1) when that range is nonempty and a
  /// single rational point carries all of them.
  std::optional<std::vector<mpq_class>> universal_point;
  bool single_minimal_prime_verified = false;
};

/// Heights table, threshold u, and local data at the rational points of
/// I_(u+1).  Requires ht I_1 = 3 and ht I_(n-1) = 2.
ChaosProfile chaos_invariant(const LinearMatrix& phi);

struct JacobianDual {
  LinearMatrix B;                  // 3 x (n-1) over the t-ring
  RingPtr t_ring;
  int canonical_u = -1;
  /// Rows 2,3 and columns u+1..n-1 of B, for a canonicalized phi.
  std::optional<LinearMatrix> b_prime;
};

/// The matrix B with (t) * phi = (x y z) * B; the identity is re-verified.
/// When canonical_u >= 0, the input is expected canonicalized and B' is cut
/// out of B.
JacobianDual jacobian_dual(const LinearMatrix& phi, int canonical_u = -1);

/// Ambient ring k[x, y, z, t1..tn] shared by symmetric and Rees ideals.
RingPtr rees_ambient_ring(const LinearMatrix& phi);
RingPtr fiber_ring(const LinearMatrix& phi);

/// I_1((t) * phi): the n-1 bilinear entries of the row vector (t) * phi.
IdealHandle symmetric_ideal(const LinearMatrix& phi);

/// Presentation ideal of the Rees algebra: symmetric ideal saturated at the
/// first nonzero signed minor, cross-checked against a second minor; the
/// quotient dimension 4 is verified.
IdealHandle rees_ideal(const LinearMatrix& phi);

/// Defining ideal of the special fiber: eliminate x, y, z from (t_i - f_i).
IdealHandle fiber_ideal(const LinearMatrix& phi);

struct FiberTypeResult {
  bool fiber_type = false;
  /// Normal forms of the Rees generators against (symmetric + fiber); all
  /// zero exactly when fiber_type holds.
  std::vector<Poly> residues;
};
FiberTypeResult fiber_type_check(const IdealHandle& sym,
                                 const IdealHandle& fiber,
                                 const IdealHandle& rees);

struct BirationalityData {
  int rank_mod_fiber = 0;
  std::optional<std::vector<Poly>> inverse_quadrics;  // three quadrics in t
  std::optional<Poly> common_factor;                  // g_i(f) / coordinate_i
};

/// Rank of B modulo the fiber ideal via minor membership; when 2, inverse
/// quadrics from the first pair of columns of B whose 2-minors do not all lie
/// in the fiber ideal, with g1(f)/x = g2(f)/y = g3(f)/z verified exactly.
BirationalityData birationality_and_inverse(const JacobianDual& jd,
                                            const IdealHandle& fiber,
                                            const std::vector<Poly>& gens);

struct DepthZeroResult {
  bool depth_zero = false;
  std::optional<Poly> witness;  // element of (I^2 : m^inf) outside I^2
};
DepthZeroResult depth_zero_square_check(const IdealHandle& I);

struct ReductionReport {
  int analytic_spread = 0;
  CmEvidence fiber_cm;
  int h_degree = 0;
  std::optional<int> reduction_number;  // only when the fiber is CM
  mpz_class multiplicity;
  /// Hilbert function vs Hilbert polynomial of the fiber at t = 1..5.
  std::vector<bool> function_matches_polynomial;
};
ReductionReport reduction_number_report(const IdealHandle& fiber,
                                        unsigned long seed);

/// u_p, mu(I_p) = n - rank at V(p), and the complete-intersection flag, at a
/// rational linear prime containing I.
LocalProfile local_profile(const LinearMatrix& phi,
                           const std::vector<Poly>& prime_forms);

struct SyzygyResult {
  std::optional<LinearMatrix> phi;
  int nullity = 0;
};

/// Recovers the matrix of linear syzygies of an equigenerated list; succeeds
/// exactly when the nullity of the linear-coefficient system is n-1 and the
/// maximal minors regenerate the input ideal.
SyzygyResult linear_syzygy_matrix(const std::vector<Poly>& gens);

}  // namespace burch
