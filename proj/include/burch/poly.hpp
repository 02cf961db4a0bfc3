#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "burch/ring.hpp"

namespace burch {

struct Term {
  Exp exp;
  mpq_class coeff;
};

/// Exact sparse multivariate polynomial.  Terms are kept strictly descending
/// in the ring's monomial order with nonzero canonical coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const mpq_class& c);
  static Poly variable(RingPtr ring, int index);
  static Poly monomial(RingPtr ring, Exp e, const mpq_class& c = 1);
  /// Builds from arbitrary (exp, coeff) pairs: collects, sorts, normalizes.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  /// Homogeneous of degree exactly 1 (or zero): the LinearForm predicate.
  bool is_linear_form() const;

  const Term& leading_term() const;
  mpq_class coeff_of(const Exp& e) const;
  /// Coefficient of a single variable in a linear form (degree <= 1 input).
  mpq_class linear_coeff(int var) const;
  mpq_class constant_coeff() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const mpq_class& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;

  /// Substitution homomorphism: one image per ring variable, all images in a
  /// common target ring.
  Poly map(const RingPtr& target, const std::vector<Poly>& images) const;

  /// Scalar evaluation at a point (one value per variable).
  mpq_class eval(const std::vector<mpq_class>& point) const;

  /// Rewrites this polynomial in a ring whose variable set contains this
  /// ring's variables (matched by name).
  Poly lift_to(const RingPtr& target) const;
  /// Inverse of lift_to: requires every used variable to exist in target.
  Poly project_to(const RingPtr& target) const;

  /// Content (gcd of coefficients as a positive rational c with c*primitive
  /// integral) -- rational fields only; for prime fields returns the leading
  /// coefficient.
  mpq_class content() const;
  /// Content-free form with positive (rationals) or unit (prime field)
  /// leading coefficient; canonical generator scaling.
  Poly canonical_scaled() const;
  /// Leading coefficient 1.
  Poly monic() const;

  std::string str() const;

  /// True when every exponent of a variable outside `allowed` is zero.
  bool supported_on(const std::vector<int>& allowed) const;

 private:
  void normalize();  // sort, merge, drop zeros, canon coefficients

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial text grammar:
///   expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
///   factor := base ('^' exp)?; base := coeff | var | '(' expr ')' | '-' factor
/// Coefficients are integers or rationals "a/b".
Poly parse_poly(const RingPtr& ring, const std::string& text);

void require_same_ring(const Poly& a, const Poly& b);

}  // namespace burch
