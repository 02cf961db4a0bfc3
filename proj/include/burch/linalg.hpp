#pragma once

#include <gmpxx.h>

#include <vector>

#include "burch/poly.hpp"

namespace burch {

/// Dense exact matrix over a coefficient field.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols, FieldSpec field = {})
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, mpq_class(0)) {}

  static QMat identity(int n, FieldSpec field = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  mpq_class& at(int r, int c) { return a_[r * cols_ + c]; }
  const mpq_class& at(int r, int c) const { return a_[r * cols_ + c]; }

  QMat operator*(const QMat& o) const;
  bool operator==(const QMat& o) const = default;

  int rank() const;
  /// Basis of the right nullspace, one column vector per element.
  std::vector<std::vector<mpq_class>> nullspace() const;
  /// Inverse of a square matrix; throws if singular.
  QMat inverse() const;
  mpq_class det() const;
  QMat transpose() const;

 private:
  int rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<mpq_class> a_;
};

/// Rows = forms, columns = ring variables, entries = coefficients.
/// Throws on non-linear input (degree > 1 terms).
QMat linear_coeff_matrix(const std::vector<Poly>& forms);

/// Deterministic pseudo-random linear forms; rational mode draws integer
/// coefficients in [-1000, 1000], prime mode in [0, p).
std::vector<Poly> random_linear_forms(const RingPtr& ring, int count,
                                      unsigned long seed);

}  // namespace burch
