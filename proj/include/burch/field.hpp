#pragma once

#include <gmpxx.h>

#include <string>

namespace burch {

/// Coefficient field of a polynomial ring: the exact rationals, or a prime
/// field Z/p.  Scalars are carried as mpq_class everywhere; for a prime field
/// the canonical representative is the residue in [0, p).
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  unsigned long characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(unsigned long p);

  bool is_rational() const { return kind == Kind::rational; }
  bool operator==(const FieldSpec&) const = default;

  /// Canonical representative of a scalar in this field.
  mpq_class canon(const mpq_class& v) const;

  /// Multiplicative inverse; throws on zero (or non-invertible residue).
  mpq_class inv(const mpq_class& v) const;

  std::string describe() const;
};

}  // namespace burch
