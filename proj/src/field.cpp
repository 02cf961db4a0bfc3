#include "burch/field.hpp"

#include <stdexcept>

namespace burch {

FieldSpec FieldSpec::prime_field(unsigned long p) {
  mpz_class z(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  FieldSpec f;
  f.kind = Kind::prime;
  f.characteristic = p;
  return f;
}

mpq_class FieldSpec::canon(const mpq_class& v) const {
  if (is_rational()) {
    mpq_class r = v;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<long>(characteristic));
  mpz_class den = v.get_den();
  mpz_class num = v.get_num();
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod p");
  mpz_class r = (num * deninv) % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class FieldSpec::inv(const mpq_class& v) const {
  if (is_rational()) {
    if (v == 0) throw std::domain_error("division by zero");
    return mpq_class(1) / v;
  }
  mpq_class c = canon(v);
  if (c == 0) throw std::domain_error("division by zero");
  mpz_class p(static_cast<long>(characteristic));
  mpz_class num = c.get_num();
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("residue not invertible mod p");
  return mpq_class(r);
}

std::string FieldSpec::describe() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

}  // namespace burch
