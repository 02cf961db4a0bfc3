#include <algorithm>
#include <set>
#include <stdexcept>

#include "burch/ideal.hpp"

namespace burch {

namespace {

bool exp_divides(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exp exp_sum(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

struct GBElem {
  Poly p;
  Exp lt;
  int sugar;
};

// h -= (coeff * X^shift) * g
Poly submul(const Poly& h, const mpq_class& coeff, const Exp& shift,
            const Poly& g) {
  std::vector<Term> ts;
  ts.reserve(g.terms().size());
  for (const auto& t : g.terms())
    ts.push_back({exp_sum(t.exp, shift), -coeff * t.coeff});
  return h + Poly::from_terms(h.ring(), std::move(ts));
}

// Full normal form of f against G.  When `rescale` the remainder is kept
// content-free along the way (membership-safe, exact value not preserved).
Poly reduce_full(Poly f, const std::vector<GBElem>& G, bool rescale,
                 int* sugar = nullptr) {
  const RingPtr ring = f.ring();
  Poly rem = Poly::zero(ring);
  Poly h = std::move(f);
  int steps = 0;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const GBElem* red = nullptr;
    for (const auto& g : G) {
      if (exp_divides(g.lt, lt.exp)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      rem = rem + Poly::monomial(ring, lt.exp, lt.coeff);
      h = h - Poly::monomial(ring, lt.exp, lt.coeff);
      continue;
    }
    Exp shift = exp_sub(lt.exp, red->lt);
    mpq_class c = ring->field().canon(lt.coeff *
                                      ring->field().inv(red->p.leading_term().coeff));
    h = submul(h, c, shift, red->p);
    if (sugar != nullptr)
      *sugar = std::max(*sugar, red->sugar + total_degree(shift));
    if (rescale && (++steps % 8) == 0 && !h.is_zero()) {
      // rem must be scaled along with h or the remainder drifts out of the
      // coset of f
      Poly hs = h.canonical_scaled();
      mpq_class factor = hs.leading_term().coeff *
                         ring->field().inv(h.leading_term().coeff);
      rem = rem * factor;
      h = std::move(hs);
    }
  }
  return rescale ? rem.canonical_scaled() : rem;
}

struct Pair {
  int i, j;
  Exp lcm;
  int sugar;
  int deg;
};

std::vector<Poly> buchberger(const RingPtr& ring, std::vector<Poly> gens) {
  std::vector<GBElem> G;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Poly p = g.canonical_scaled();
    G.push_back({p, p.leading_term().exp, p.degree()});
  }

  std::vector<Pair> queue;
  std::set<std::pair<int, int>> treated;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Exp l = exp_lcm(G[i].lt, G[j].lt);
      // coprime leading terms: S-poly reduces to zero
      if (l == exp_sum(G[i].lt, G[j].lt)) {
        treated.insert({i, j});
        continue;
      }
      int sugar = std::max(G[i].sugar + total_degree(exp_sub(l, G[i].lt)),
                           G[j].sugar + total_degree(exp_sub(l, G[j].lt)));
      queue.push_back({i, j, l, sugar, total_degree(l)});
    }
  };
  for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < queue.size(); ++k) {
      const Pair &a = queue[k], &b = queue[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
      } else if (a.deg != b.deg) {
        if (a.deg < b.deg) best = k;
      } else if (ring->cmp(a.lcm, b.lcm) < 0) {
        best = k;
      }
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + best);
    treated.insert({pr.i, pr.j});

    // chain criterion
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!exp_divides(G[k].lt, pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (treated.count({key1.first, key1.second}) &&
          treated.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    const GBElem& fi = G[pr.i];
    const GBElem& fj = G[pr.j];
    Poly s = submul(Poly::zero(ring), -ring->field().inv(fi.p.leading_term().coeff),
                    exp_sub(pr.lcm, fi.lt), fi.p);
    s = submul(s, ring->field().inv(fj.p.leading_term().coeff),
               exp_sub(pr.lcm, fj.lt), fj.p);
    int sugar = pr.sugar;
    Poly r = reduce_full(std::move(s), G, /*rescale=*/true, &sugar);
    if (r.is_zero()) continue;
    G.push_back({r, r.leading_term().exp, sugar});
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<GBElem> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (exp_divides(G[j].lt, G[i].lt) &&
          (G[j].lt != G[i].lt || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // tail-reduce each against the others
  std::vector<Poly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GBElem> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(reduce_full(minimal[i].p, others, /*rescale=*/true));
  }
  for (auto& p : out) p = p.canonical_scaled();
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return ring->cmp(a.leading_term().exp, b.leading_term().exp) > 0;
  });
  return out;
}

std::vector<GBElem> as_elems(const std::vector<Poly>& basis) {
  std::vector<GBElem> G;
  for (const auto& p : basis)
    G.push_back({p, p.leading_term().exp, p.degree()});
  return G;
}

}  // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (!g.ring()->same_ring(*ring_))
      throw std::invalid_argument("generator in wrong ring");
}

const std::vector<Poly>& IdealHandle::groebner(const MonomialOrder& order) const {
  for (const auto& [o, gb] : cache_)
    if (o == order) return gb;
  cache_.emplace_back(order, groebner_basis(ring_, gens_, order));
  return cache_.back().second;
}

std::vector<Poly> groebner_basis(const RingPtr& ring, std::vector<Poly> gens,
                                 const MonomialOrder& order) {
  if (order == ring->order()) return buchberger(ring, std::move(gens));
  RingPtr r2 = ring->with_order(order);
  std::vector<Poly> lifted;
  for (auto& g : gens) lifted.push_back(g.lift_to(r2));
  std::vector<Poly> gb = buchberger(r2, std::move(lifted));
  std::vector<Poly> out;
  for (auto& g : gb) out.push_back(g.lift_to(ring));
  return out;
}

Poly normal_form(const Poly& f, const IdealHandle& I) {
  if (!f.ring()->same_ring(*I.ring()))
    throw std::invalid_argument("polynomial and ideal in different rings");
  const auto& gb = I.groebner();
  Poly g = f.lift_to(I.ring());  // re-sorts under the handle ring's order
  return reduce_full(std::move(g), as_elems(gb), /*rescale=*/false);
}

bool ideal_contains(const IdealHandle& I, const Poly& f) {
  return normal_form(f, I).is_zero();
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_ring(*J.ring()))
    throw std::invalid_argument("ideals in different rings");
  const auto& a = I.groebner();
  const auto& b = J.groebner();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool is_subideal(const IdealHandle& inner, const IdealHandle& outer) {
  for (const auto& g : inner.gens())
    if (!ideal_contains(outer, g)) return false;
  return true;
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
  std::vector<Poly> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J) {
  std::vector<Poly> gens;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) gens.push_back(a * b);
  return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& I, int k) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  IdealHandle r = I;
  for (int i = 1; i < k; ++i) r = ideal_product(r, I);
  return r;
}

IdealHandle eliminate(const IdealHandle& I,
                      const std::vector<std::string>& drop_vars) {
  const RingPtr& R = I.ring();
  std::vector<char> dropped(R->nvars(), 0);
  for (const auto& name : drop_vars) {
    int idx = R->var_index(name);
    if (idx < 0) throw std::invalid_argument("unknown variable " + name);
    dropped[idx] = 1;
  }
  std::vector<std::string> front, back;
  for (int v = 0; v < R->nvars(); ++v)
    (dropped[v] ? front : back).push_back(R->var_name(v));
  if (front.empty()) return I;
  if (back.empty()) throw std::invalid_argument("cannot eliminate all variables");

  std::vector<std::string> order_vars = front;
  order_vars.insert(order_vars.end(), back.begin(), back.end());
  RingPtr elim_ring = PolyRing::make(
      order_vars, MonomialOrder::block(static_cast<int>(front.size())),
      R->field());
  std::vector<Poly> lifted;
  for (const auto& g : I.gens()) lifted.push_back(g.lift_to(elim_ring));
  std::vector<Poly> gb = groebner_basis(elim_ring, std::move(lifted),
                                        elim_ring->order());

  RingPtr small = PolyRing::make(back, MonomialOrder::degrevlex(), R->field());
  std::vector<int> keep;
  for (const auto& name : back) keep.push_back(elim_ring->var_index(name));
  std::vector<Poly> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (int v = 0; v < static_cast<int>(front.size()) && pure; ++v)
        if (t.exp[v] > 0) pure = false;
    if (pure) out.push_back(g.project_to(small));
  }
  return IdealHandle(small, std::move(out));
}

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_ring(*J.ring()))
    throw std::invalid_argument("ideals in different rings");
  const RingPtr& R = I.ring();
  std::string wname = "w_";
  while (R->var_index(wname) >= 0) wname += "_";
  std::vector<std::string> vars{wname};
  vars.insert(vars.end(), R->vars().begin(), R->vars().end());
  RingPtr ext = PolyRing::make(vars, MonomialOrder::block(1), R->field());
  Poly w = Poly::variable(ext, 0);
  Poly one = Poly::constant(ext, 1);
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(w * g.lift_to(ext));
  for (const auto& g : J.gens()) gens.push_back((one - w) * g.lift_to(ext));
  IdealHandle big(ext, std::move(gens));
  IdealHandle small = eliminate(big, {wname});
  std::vector<Poly> out;
  for (const auto& g : small.gens()) out.push_back(g.lift_to(R));
  return IdealHandle(R, std::move(out));
}

namespace {

// Exact division g / f; throws when not divisible.
Poly exact_divide(const Poly& g, const Poly& f) {
  const RingPtr& ring = g.ring();
  std::vector<GBElem> F = {{f, f.leading_term().exp, f.degree()}};
  Poly h = g;
  Poly q = Poly::zero(ring);
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    if (!exp_divides(F[0].lt, lt.exp))
      throw std::domain_error("exact division failed");
    Exp shift = exp_sub(lt.exp, F[0].lt);
    mpq_class c =
        ring->field().canon(lt.coeff * ring->field().inv(f.leading_term().coeff));
    q = q + Poly::monomial(ring, shift, c);
    h = submul(h, c, shift, f);
  }
  return q;
}

}  // namespace

IdealHandle ideal_quotient(const IdealHandle& I, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("quotient by zero");
  const RingPtr& R = I.ring();
  IdealHandle fI(R, {f.lift_to(R)});
  IdealHandle meet = intersect(I, fI);
  std::vector<Poly> out;
  for (const auto& g : meet.gens())
    out.push_back(exact_divide(g, f.lift_to(R)).canonical_scaled());
  return IdealHandle(R, std::move(out));
}

IdealHandle saturate(const IdealHandle& I, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  IdealHandle cur = I;
  for (int iter = 0; iter < 64; ++iter) {
    IdealHandle next = ideal_quotient(cur, f);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
  throw std::runtime_error("saturation did not stabilize");
}

IdealHandle saturate_w_trick(const IdealHandle& I, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  const RingPtr& R = I.ring();
  std::string wname = "w_";
  while (R->var_index(wname) >= 0) wname += "_";
  std::vector<std::string> vars{wname};
  vars.insert(vars.end(), R->vars().begin(), R->vars().end());
  RingPtr ext = PolyRing::make(vars, MonomialOrder::block(1), R->field());
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.lift_to(ext));
  gens.push_back(Poly::constant(ext, 1) -
                 Poly::variable(ext, 0) * f.lift_to(ext));
  IdealHandle big(ext, std::move(gens));
  IdealHandle small = eliminate(big, {wname});
  std::vector<Poly> out;
  for (const auto& g : small.gens()) out.push_back(g.lift_to(R));
  return IdealHandle(R, std::move(out));
}

DimHeight dimension_and_height(const IdealHandle& I) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  const auto& gb = I.groebner();
  if (gb.empty()) return {n, 0};
  for (const auto& g : gb)
    if (g.is_constant()) return {-1, n};  // unit ideal sentinel

  std::vector<std::vector<int>> supports;
  for (const auto& g : gb) {
    std::vector<int> s;
    const Exp& e = g.leading_term().exp;
    for (int v = 0; v < n; ++v)
      if (e[v] > 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& s : supports) {
      bool contained = true;
      for (int v : s)
        if (!(mask & (1u << v))) {
          contained = false;
          break;
        }
      if (contained) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return {best, n - best};
}

std::vector<Poly> minimalize_generators(const RingPtr& ring,
                                        std::vector<Poly> gens) {
  std::vector<Poly> live;
  for (auto& g : gens)
    if (!g.is_zero()) live.push_back(g.canonical_scaled());
  std::stable_sort(live.begin(), live.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  std::vector<Poly> kept;
  for (size_t i = 0; i < live.size(); ++i) {
    std::vector<Poly> others = kept;
    for (size_t j = i + 1; j < live.size(); ++j) others.push_back(live[j]);
    if (others.empty()) {
      kept.push_back(live[i]);
      continue;
    }
    IdealHandle rest(ring, others);
    if (!ideal_contains(rest, live[i])) kept.push_back(live[i]);
  }
  return kept;
}

}  // namespace burch
