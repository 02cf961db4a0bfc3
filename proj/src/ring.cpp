#include "burch/ring.hpp"

#include <set>
#include <stdexcept>

namespace burch {

namespace {

int cmp_degrevlex(const Exp& a, const Exp& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_lex(const Exp& a, const Exp& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order,
                   FieldSpec field)
    : vars_(std::move(vars)), order_(order), field_(field) {
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size())
    throw std::invalid_argument("duplicate variable name");
  if (vars_.empty()) throw std::invalid_argument("empty variable list");
  if (order_.kind == MonomialOrder::Kind::block &&
      (order_.block_split <= 0 || order_.block_split >= nvars()))
    throw std::invalid_argument("block split out of range");
}

RingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder order,
                       FieldSpec field) {
  return std::make_shared<const PolyRing>(std::move(vars), order, field);
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

bool PolyRing::same_ring(const PolyRing& o) const {
  return vars_ == o.vars_ && order_ == o.order_ && field_ == o.field_;
}

int PolyRing::cmp(const Exp& a, const Exp& b) const {
  switch (order_.kind) {
    case MonomialOrder::Kind::degrevlex:
      return cmp_degrevlex(a, b, 0, nvars());
    case MonomialOrder::Kind::lex:
      return cmp_lex(a, b, 0, nvars());
    case MonomialOrder::Kind::block: {
      int c = cmp_degrevlex(a, b, 0, order_.block_split);
      if (c != 0) return c;
      return cmp_degrevlex(a, b, order_.block_split, nvars());
    }
  }
  return 0;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return PolyRing::make(vars_, order, field_);
}

}  // namespace burch
