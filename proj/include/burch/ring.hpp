#pragma once

#include <memory>
#include <string>
#include <vector>

#include "burch/field.hpp"

namespace burch {

using Exp = std::vector<int>;  // exponent vector, one entry per ring variable

inline int total_degree(const Exp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Global monomial order.  Block orders compare the first block (variables
/// [0, block_split)) by degrevlex, then the rest by degrevlex; they are the
/// elimination orders used throughout.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };

  Kind kind = Kind::degrevlex;
  int block_split = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(int split) { return {Kind::block, split}; }

  bool operator==(const MonomialOrder&) const = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Immutable polynomial ring: ordered variable names, monomial order,
/// coefficient field.  Ring identity is structural; every Poly carries its
/// ring and cross-ring operations throw.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  PolyRing(std::vector<std::string> vars, MonomialOrder order = {},
           FieldSpec field = {});

  static RingPtr make(std::vector<std::string> vars, MonomialOrder order = {},
                      FieldSpec field = {});

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  int var_index(const std::string& name) const;  // -1 when absent
  const MonomialOrder& order() const { return order_; }
  const FieldSpec& field() const { return field_; }

  bool same_ring(const PolyRing& o) const;

  /// Compare monomials in this ring's order: 1 if a > b, -1 if a < b, 0 equal.
  int cmp(const Exp& a, const Exp& b) const;

  /// Same variables and field, different order.
  RingPtr with_order(MonomialOrder order) const;

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
  FieldSpec field_;
};

}  // namespace burch
