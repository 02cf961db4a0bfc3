#pragma once

#include <gmpxx.h>

#include <vector>

#include "burch/ideal.hpp"

namespace burch {

/// Hilbert series data of a homogeneous quotient R/I.
struct HilbertData {
  /// Numerator h(T) of the series over (1-T)^numvars, by ascending power.
  std::vector<mpz_class> numerator;
  int dim = 0;
  /// Numerator after dividing by (1-T)^(numvars - dim).
  std::vector<mpz_class> h_polynomial;
  /// h(1) of the reduced numerator.
  mpz_class multiplicity;
  /// t -> dim_k (R/I)_t for t = 0..max(6, 2*numvars).
  std::vector<mpz_class> function_values;

  int h_degree() const;
  /// Hilbert polynomial value at t, from the h-polynomial and dim.
  mpz_class hilbert_polynomial(long t) const;
};

HilbertData hilbert_series(const IdealHandle& I);

/// dim_k of the degree-d piece of I (of_quotient=false) or of R/I (true).
mpz_class graded_piece_dimension(const IdealHandle& I, int d,
                                 bool of_quotient = false);

struct CmEvidence {
  bool cm = false;
  std::vector<Poly> sop;       // the linear system of parameters used
  mpz_class length;            // Artinian reduction length
  mpz_class multiplicity;      // e from the Hilbert series
  int retries = 0;
};

/// Cohen-Macaulay test for a homogeneous quotient of positive dimension:
/// quotient by a random linear s.o.p. and compare length with multiplicity.
CmEvidence artinian_cm_test(const IdealHandle& I, unsigned long seed);

}  // namespace burch
