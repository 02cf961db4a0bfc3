#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "burch/poly.hpp"

namespace burch {

/// Monic gcd of homogeneous forms in two variables of their ring.  gcd = 1
/// exactly when the forms have no common root over the algebraic closure.
Poly binary_form_gcd(const std::vector<Poly>& forms);

/// A projective root (a : b) of a homogeneous binary form over the base
/// field, when one exists.  Searches (1:0), (0:1), then rational roots of the
/// dehomogenization by the rational root theorem.
std::optional<std::pair<mpq_class, mpq_class>> binary_form_rational_root(
    const Poly& form);

}  // namespace burch
