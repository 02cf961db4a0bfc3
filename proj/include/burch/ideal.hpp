#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "burch/poly.hpp"

namespace burch {

/// Generator list with a lazily computed, cached reduced Groebner basis.
/// Handles are fill-then-freeze: the cache is written once per order and the
/// value is otherwise immutable.
class IdealHandle {
 public:
  IdealHandle() = default;
  IdealHandle(RingPtr ring, std::vector<Poly> gens);

  static IdealHandle zero(RingPtr ring) { return IdealHandle(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  /// Reduced Groebner basis in the given order (cached).  Basis elements are
  /// returned as polynomials of this ideal's ring.
  const std::vector<Poly>& groebner(const MonomialOrder& order) const;
  const std::vector<Poly>& groebner() const { return groebner(ring_->order()); }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::vector<std::pair<MonomialOrder, std::vector<Poly>>> cache_;
};

/// Reduced Groebner basis of a generator list (unique for a fixed order).
std::vector<Poly> groebner_basis(const RingPtr& ring, std::vector<Poly> gens,
                                 const MonomialOrder& order);

/// Remainder of full division of f by the reduced basis of I; zero iff f in I.
Poly normal_form(const Poly& f, const IdealHandle& I);

bool ideal_contains(const IdealHandle& I, const Poly& f);
bool ideal_equal(const IdealHandle& I, const IdealHandle& J);
bool is_subideal(const IdealHandle& inner, const IdealHandle& outer);

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_power(const IdealHandle& I, int k);

/// Generators of I intersected with the subring on the remaining variables.
/// Internally moves drop_vars to the front block of an elimination order.
IdealHandle eliminate(const IdealHandle& I,
                      const std::vector<std::string>& drop_vars);

/// Colon ideal I : f.
IdealHandle ideal_quotient(const IdealHandle& I, const Poly& f);

/// I : f^inf by iterated stable quotient (GB-equality stabilization).
IdealHandle saturate(const IdealHandle& I, const Poly& f);

/// I : f^inf by the extra-variable trick; cross-check oracle for saturate.
IdealHandle saturate_w_trick(const IdealHandle& I, const Poly& f);

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J);

struct DimHeight {
  int dim;     // Krull dimension of R/I; -1 sentinel for the unit ideal
  int height;  // numvars - dim; numvars for the unit ideal by convention
};
DimHeight dimension_and_height(const IdealHandle& I);

/// Discards generators contained in the ideal of the others; for homogeneous
/// input this yields a minimal homogeneous generating set.
std::vector<Poly> minimalize_generators(const RingPtr& ring,
                                        std::vector<Poly> gens);

}  // namespace burch
