#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "burch/ideal.hpp"
#include "burch/linalg.hpp"

namespace burch {

/// Matrix whose entries are homogeneous linear forms (zero allowed).
class LinearMatrix {
 public:
  LinearMatrix() = default;
  LinearMatrix(RingPtr ring, int rows, int cols);
  static LinearMatrix from_entries(RingPtr ring,
                                   std::vector<std::vector<Poly>> entries);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Poly& at(int r, int c) const { return e_[r * cols_ + c]; }
  void set(int r, int c, Poly p);

  LinearMatrix transpose() const;
  LinearMatrix submatrix(const std::vector<int>& rows,
                         const std::vector<int>& cols) const;
  /// Rewrites every entry in a ring containing this ring's variables.
  LinearMatrix lift_to(const RingPtr& target) const;

  /// Determinant of the square submatrix on the given rows and columns.
  Poly minor(const std::vector<int>& rows, const std::vector<int>& cols) const;

  std::vector<std::string> entry_strings() const;

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

/// Group element of GL3 x GLn x GL(n-1) acting on a matrix of linear forms:
/// variable substitution x_i -> sum_j coord_change[i][j] x_j, then
/// row_op * M * col_op.
struct ConjugationAction {
  QMat coord_change;
  QMat row_op;
  QMat col_op;

  static ConjugationAction identity(const RingPtr& ring, int rows, int cols);
  static ConjugationAction random(const RingPtr& ring, int rows, int cols,
                                  unsigned long seed);
  ConjugationAction inverse() const;
};

/// Ideal of all t x t minors.
IdealHandle minors_ideal(const LinearMatrix& M, int t);

/// Signed maximal minors f_i = (-1)^(i+1) * (minor deleting row i) of an
/// n x (n-1) matrix; satisfies sum_i f_i * M[i][j] = 0 for every column j.
std::vector<Poly> hilbert_burch_generators(const LinearMatrix& M);

LinearMatrix conjugate(const LinearMatrix& M, const ConjugationAction& g);

/// Scalar rank of M with entries evaluated at a point (nonzero).
int rank_at_point(const LinearMatrix& M, const std::vector<mpq_class>& point);

struct OneGenericResult {
  bool one_generic = false;
  /// gcd of the maximal minors of the symbolic coefficient matrix; 1 when
  /// 1-generic, a nonunit binary form otherwise (zero if rank is forced low).
  Poly minor_gcd;
  /// A rational generalized-zero row (a1 : a2), when one exists.
  std::optional<std::pair<mpq_class, mpq_class>> witness;
};

/// Exact 1-genericity test for a 2-row matrix of linear forms.
OneGenericResult one_generic_test(const LinearMatrix& M);

/// [[v0 .. v(k-3)], [v2 .. v(k-1)]] on the given variable indices (k >= 3).
LinearMatrix catalecticant_2step(const RingPtr& ring,
                                 const std::vector<int>& tvars);
/// [[v0 .. v(k-2)], [v1 .. v(k-1)]] on the given variable indices (k >= 2).
LinearMatrix hankel_matrix(const RingPtr& ring, const std::vector<int>& tvars);
/// Hankel block with the column (top, bottom) prepended.
LinearMatrix scroll_matrix(const Poly& top, const Poly& bottom,
                           const std::vector<int>& tvars);

struct CanonicalForm {
  LinearMatrix phi_c;
  ConjugationAction action;
  int u = 0;
};

/// Conjugates phi so that the prime p = (l1, l2) becomes (y, z) and the
/// scalar part at the corresponding point is [[Id_u, 0], [0, 0]]: the first u
/// diagonal entries get x-coefficient 1 and every other entry lies in (y, z).
/// Requires rank_at_point(phi, V(p)) == u.
CanonicalForm canonicalize_chaos_form(const LinearMatrix& phi,
                                      const std::vector<Poly>& prime_forms,
                                      int u);

}  // namespace burch
