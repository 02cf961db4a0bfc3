#include "burch/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace burch {

namespace {

Poly tvar(const RingPtr& R, int i) {
  return Poly::variable(R, R->var_index("t" + std::to_string(i + 1)));
}

// ---- univariate helpers (coefficient vectors ascending) ----

std::vector<mpq_class> uni_coeffs(const Poly& f, int var) {
  int d = std::max(f.degree_in(var), 0);
  std::vector<mpq_class> c(d + 1, mpq_class(0));
  for (const auto& t : f.terms()) {
    for (size_t v = 0; v < t.exp.size(); ++v)
      if (static_cast<int>(v) != var && t.exp[v] != 0)
        throw std::invalid_argument("polynomial is not univariate");
    c[t.exp[var]] = t.coeff;
  }
  return c;
}

void uni_trim(std::vector<mpq_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<mpq_class> uni_gcd(std::vector<mpq_class> a,
                               std::vector<mpq_class> b, const FieldSpec& F) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    mpq_class inv = F.inv(b.back());
    while (a.size() >= b.size()) {
      mpq_class q = F.canon(a.back() * inv);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[off + i] = F.canon(a[off + i] - q * b[i]);
      uni_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

mpq_class uni_eval(const std::vector<mpq_class>& c, const mpq_class& t,
                   const FieldSpec& F) {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.canon(acc * t + *it);
  return acc;
}

std::vector<mpz_class> divisors_of(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> ds;
  for (mpz_class i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      ds.push_back(i);
      ds.push_back(n / i);
    }
  return ds;
}

struct UniRoots {
  std::vector<mpq_class> roots;  // distinct
  bool complete = false;         // deflated to a constant
};

// All rational roots with multiplicity-aware deflation; complete when the
// remaining cofactor is constant, i.e. every root over the closure is listed.
UniRoots uni_rational_roots(std::vector<mpq_class> c, const FieldSpec& F) {
  UniRoots out;
  uni_trim(c);
  if (c.empty()) return out;  // zero polynomial: not a finite root set
  auto deflate_at = [&](const mpq_class& r) {
    // synthetic division by (t - r)
    std::vector<mpq_class> q(c.size() - 1);
    mpq_class carry = c.back();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
      q[i] = carry;
      carry = F.canon(c[i] + carry * r);
    }
    c = std::move(q);
  };
  while (c.size() > 1 && c.front() == 0) {
    if (out.roots.empty() || out.roots.back() != 0) out.roots.push_back(0);
    c.erase(c.begin());
  }
  while (c.size() > 1) {
    bool found = false;
    if (!F.is_rational()) {
      for (unsigned long t = 0; t < F.characteristic && !found; ++t) {
        mpq_class r(t);
        if (uni_eval(c, r, F) == 0) {
          if (std::find(out.roots.begin(), out.roots.end(), r) ==
              out.roots.end())
            out.roots.push_back(r);
          deflate_at(r);
          found = true;
        }
      }
    } else {
      mpz_class den = 1;
      for (const auto& q : c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
      std::vector<mpz_class> ic(c.size());
      for (size_t k = 0; k < c.size(); ++k) ic[k] = mpq_class(c[k] * den).get_num();
      for (const auto& p : divisors_of(ic.front())) {
        for (const auto& q : divisors_of(ic.back())) {
          for (int sign : {1, -1}) {
            mpq_class r(p * sign, q);
            r.canonicalize();
            if (uni_eval(c, r, F) == 0) {
              if (std::find(out.roots.begin(), out.roots.end(), r) ==
                  out.roots.end())
                out.roots.push_back(r);
              deflate_at(r);
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
    }
    if (!found) break;
  }
  out.complete = (c.size() <= 1);
  return out;
}

// roots of the gcd of a list of univariate polynomials in var
UniRoots common_roots(const std::vector<Poly>& polys, int var,
                      const FieldSpec& F) {
  std::vector<mpq_class> g;
  bool first = true;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    auto c = uni_coeffs(p, var);
    g = first ? c : uni_gcd(g, c, F);
    first = false;
  }
  if (first) return {};  // all zero
  return uni_rational_roots(g, F);
}

}  // namespace

PointSearch rational_points_codim2(const IdealHandle& I) {
  const RingPtr& R = I.ring();
  if (R->nvars() != 3)
    throw std::invalid_argument("point search needs a three-variable ring");
  const FieldSpec& F = R->field();
  PointSearch out;
  out.complete = true;

  // chart x = 1
  {
    RingPtr C = PolyRing::make({"y", "z"}, MonomialOrder::degrevlex(), F);
    std::vector<Poly> imgs = {Poly::constant(C, 1), Poly::variable(C, 0),
                              Poly::variable(C, 1)};
    std::vector<Poly> gens;
    for (const auto& g : I.gens())
      if (!g.is_zero()) gens.push_back(g.map(C, imgs));
    IdealHandle J(C, gens);
    IdealHandle E = eliminate(J, {"y"});
    if (E.groebner().empty()) {
      out.complete = false;  // positive-dimensional chart, out of scope
    } else {
      Poly elim = E.groebner().front().lift_to(C);
      UniRoots zr = uni_rational_roots(uni_coeffs(elim, 1), F);
      if (!zr.complete) out.complete = false;
      for (const auto& z0 : zr.roots) {
        RingPtr U = PolyRing::make({"y"}, MonomialOrder::degrevlex(), F);
        std::vector<Poly> sub = {Poly::variable(U, 0), Poly::constant(U, z0)};
        std::vector<Poly> uni;
        for (const auto& g : gens) uni.push_back(g.map(U, sub));
        UniRoots yr = common_roots(uni, 0, F);
        if (!yr.complete) out.complete = false;
        for (const auto& y0 : yr.roots) {
          bool ok = true;
          for (const auto& g : I.gens())
            if (F.canon(g.eval({1, y0, z0})) != 0) ok = false;
          if (ok) out.points.push_back({1, y0, z0});
        }
      }
    }
  }

  // chart x = 0, y = 1
  {
    RingPtr U = PolyRing::make({"z"}, MonomialOrder::degrevlex(), F);
    std::vector<Poly> imgs = {Poly::zero(U), Poly::constant(U, 1),
                              Poly::variable(U, 0)};
    std::vector<Poly> uni;
    for (const auto& g : I.gens())
      if (!g.is_zero()) uni.push_back(g.map(U, imgs));
    bool allzero = true;
    for (const auto& g : uni)
      if (!g.is_zero()) allzero = false;
    if (allzero) {
      out.complete = false;  // the whole line x = 0 sits in V(I)
    } else {
      UniRoots zr = common_roots(uni, 0, F);
      if (!zr.complete) out.complete = false;
      for (const auto& z0 : zr.roots) out.points.push_back({0, 1, z0});
    }
  }

  // the point (0 : 0 : 1)
  {
    bool ok = true;
    for (const auto& g : I.gens())
      if (F.canon(g.eval({0, 0, 1})) != 0) ok = false;
    if (ok) out.points.push_back({0, 0, 1});
  }
  return out;
}

// two independent linear forms vanishing at a projective point
std::vector<Poly> linear_prime_at(const RingPtr& R,
                                  const std::vector<mpq_class>& pt) {
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1),
       z = Poly::variable(R, 2);
  if (pt[0] != 0)
    return {y * pt[0] - x * pt[1], z * pt[0] - x * pt[2]};
  if (pt[1] != 0) return {x, z * pt[1] - y * pt[2]};
  return {x, y};
}

ChaosProfile chaos_invariant(const LinearMatrix& phi) {
  const RingPtr& R = phi.ring();
  int n = phi.rows();
  if (phi.cols() != n - 1)
    throw std::invalid_argument("expected an n x (n-1) matrix");
  ChaosProfile out;
  for (int t = 1; t <= n - 1; ++t)
    out.heights[t] = dimension_and_height(minors_ideal(phi, t)).height;
  if (out.heights[1] != 3)
    throw std::domain_error("hypothesis violation: ht I_1(phi) = " +
                            std::to_string(out.heights[1]) + ", expected 3");
  if (out.heights[n - 1] != 2)
    throw std::domain_error("hypothesis violation: ht I_" +
                            std::to_string(n - 1) + "(phi) = " +
                            std::to_string(out.heights[n - 1]) +
                            ", expected 2");
  out.u = 0;
  for (const auto& [t, h] : out.heights)
    if (h == 3) out.u = std::max(out.u, t);
  for (const auto& [t, h] : out.heights)
    if (h != (t <= out.u ? 3 : 2))
      throw std::domain_error("height profile is not of the 3..3,2..2 shape");

  PointSearch ps = rational_points_codim2(minors_ideal(phi, out.u + 1));
  out.local_complete = ps.complete;
  for (const auto& pt : ps.points)
    out.local.push_back(local_profile(phi, linear_prime_at(R, pt)));

  int lo = out.u + 1, hi = n - out.u - 1;
  if (hi >= lo) {
    bool single = true;
    std::optional<std::vector<mpq_class>> shared;
    for (int t = lo; t <= hi && single; ++t) {
      PointSearch pt = rational_points_codim2(minors_ideal(phi, t));
      if (!pt.complete || pt.points.size() != 1)
        single = false;
      else if (!shared)
        shared = pt.points.front();
      else if (*shared != pt.points.front())
        single = false;
    }
    if (single && shared) {
      out.universal_point = shared;
      out.single_minimal_prime_verified = true;
    }
  }
  return out;
}

JacobianDual jacobian_dual(const LinearMatrix& phi, int canonical_u) {
  const RingPtr& R = phi.ring();
  int n = phi.rows();
  std::vector<std::string> tnames;
  for (int i = 0; i < n; ++i) tnames.push_back("t" + std::to_string(i + 1));
  RingPtr T = PolyRing::make(tnames, MonomialOrder::degrevlex(), R->field());

  JacobianDual jd;
  jd.t_ring = T;
  jd.B = LinearMatrix(T, R->nvars(), n - 1);
  for (int v = 0; v < R->nvars(); ++v)
    for (int j = 0; j < n - 1; ++j) {
      Poly e = Poly::zero(T);
      for (int i = 0; i < n; ++i) {
        if (phi.at(i, j).is_zero()) continue;
        mpq_class c = phi.at(i, j).linear_coeff(v);
        if (c != 0) e = e + Poly::variable(T, i) * c;
      }
      jd.B.set(v, j, std::move(e));
    }

  // re-verify (t) * phi = (x y z) * B in the joint ring
  RingPtr big = rees_ambient_ring(phi);
  for (int j = 0; j < n - 1; ++j) {
    Poly lhs = Poly::zero(big);
    for (int i = 0; i < n; ++i)
      lhs = lhs + tvar(big, i) * phi.at(i, j).lift_to(big);
    Poly rhs = Poly::zero(big);
    for (int v = 0; v < R->nvars(); ++v)
      rhs = rhs + Poly::variable(big, v) * jd.B.at(v, j).lift_to(big);
    if (lhs != rhs) throw std::logic_error("jacobian dual identity failed");
  }

  jd.canonical_u = canonical_u;
  if (canonical_u >= 0) {
    std::vector<int> rows = {1, 2}, cols;
    for (int j = canonical_u; j < n - 1; ++j) cols.push_back(j);
    if (cols.empty())
      throw std::invalid_argument("no columns left for the B' block");
    jd.b_prime = jd.B.submatrix(rows, cols);
  }
  return jd;
}

RingPtr rees_ambient_ring(const LinearMatrix& phi) {
  const RingPtr& R = phi.ring();
  std::vector<std::string> names = R->vars();
  for (int i = 0; i < phi.rows(); ++i)
    names.push_back("t" + std::to_string(i + 1));
  return PolyRing::make(names, MonomialOrder::degrevlex(), R->field());
}

RingPtr fiber_ring(const LinearMatrix& phi) {
  std::vector<std::string> names;
  for (int i = 0; i < phi.rows(); ++i)
    names.push_back("t" + std::to_string(i + 1));
  return PolyRing::make(names, MonomialOrder::degrevlex(),
                        phi.ring()->field());
}

IdealHandle symmetric_ideal(const LinearMatrix& phi) {
  RingPtr big = rees_ambient_ring(phi);
  std::vector<Poly> gens;
  for (int j = 0; j < phi.cols(); ++j) {
    Poly g = Poly::zero(big);
    for (int i = 0; i < phi.rows(); ++i)
      g = g + tvar(big, i) * phi.at(i, j).lift_to(big);
    gens.push_back(std::move(g));
  }
  return IdealHandle(big, std::move(gens));
}

IdealHandle rees_ideal(const LinearMatrix& phi) {
  IdealHandle sym = symmetric_ideal(phi);
  const RingPtr& big = sym.ring();
  std::vector<Poly> f = hilbert_burch_generators(phi);
  std::vector<Poly> nonzero;
  for (const auto& d : f)
    if (!d.is_zero()) nonzero.push_back(d.lift_to(big));
  if (nonzero.empty())
    throw std::invalid_argument("all maximal minors vanish");
  IdealHandle J = saturate(sym, nonzero.front());
  if (nonzero.size() > 1) {
    IdealHandle J2 = saturate(sym, nonzero[1]);
    if (!ideal_equal(J, J2))
      throw std::logic_error("saturations at two minors disagree");
  }
  if (dimension_and_height(J).dim != 4)
    throw std::logic_error("Rees quotient dimension is not 4");
  return J;
}

IdealHandle fiber_ideal(const LinearMatrix& phi) {
  RingPtr big = rees_ambient_ring(phi);
  std::vector<Poly> f = hilbert_burch_generators(phi);
  std::vector<Poly> gens;
  for (int i = 0; i < phi.rows(); ++i)
    gens.push_back(tvar(big, i) - f[i].lift_to(big));
  std::vector<std::string> drop = phi.ring()->vars();
  return eliminate(IdealHandle(big, std::move(gens)), drop);
}

FiberTypeResult fiber_type_check(const IdealHandle& sym,
                                 const IdealHandle& fiber,
                                 const IdealHandle& rees) {
  const RingPtr& big = sym.ring();
  std::vector<Poly> cand = sym.gens();
  for (const auto& g : fiber.gens()) cand.push_back(g.lift_to(big));
  IdealHandle candidate(big, std::move(cand));
  FiberTypeResult out;
  out.fiber_type = true;
  for (const auto& g : rees.groebner()) {
    Poly r = normal_form(g, candidate);
    if (!r.is_zero()) out.fiber_type = false;
    out.residues.push_back(std::move(r));
  }
  return out;
}

BirationalityData birationality_and_inverse(const JacobianDual& jd,
                                            const IdealHandle& fiber,
                                            const std::vector<Poly>& gens) {
  const LinearMatrix& B = jd.B;
  BirationalityData out;
  for (int r = std::min(B.rows(), B.cols()); r >= 1 && out.rank_mod_fiber == 0;
       --r) {
    // any r x r minor with nonzero normal form against the fiber ideal
    std::vector<int> rows(r), cols(r);
    auto rec = [&](auto&& self, int pos, int lo, bool rowphase) -> bool {
      if (rowphase && pos == r) return self(self, 0, 0, false);
      if (!rowphase && pos == r)
        return !normal_form(B.minor(rows, cols), fiber).is_zero();
      int limit = rowphase ? B.rows() : B.cols();
      auto& sel = rowphase ? rows : cols;
      for (int i = lo; i <= limit - (r - pos); ++i) {
        sel[pos] = i;
        if (self(self, pos + 1, i + 1, rowphase)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0, true)) out.rank_mod_fiber = r;
  }
  if (out.rank_mod_fiber != 2) return out;

  const RingPtr& R = gens.front().ring();
  for (int i = 0; i < B.cols(); ++i) {
    for (int j = i + 1; j < B.cols(); ++j) {
      // cross product of columns i and j of B
      Poly g1 = B.at(1, i) * B.at(2, j) - B.at(2, i) * B.at(1, j);
      Poly g2 = B.at(2, i) * B.at(0, j) - B.at(0, i) * B.at(2, j);
      Poly g3 = B.at(0, i) * B.at(1, j) - B.at(1, i) * B.at(0, j);
      if (normal_form(g1, fiber).is_zero() &&
          normal_form(g2, fiber).is_zero() &&
          normal_form(g3, fiber).is_zero())
        continue;
      Poly h1 = g1.map(R, gens), h2 = g2.map(R, gens), h3 = g3.map(R, gens);
      if (h1.is_zero() && h2.is_zero() && h3.is_zero()) continue;
      Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1),
           z = Poly::variable(R, 2);
      if (h1 * y != h2 * x || h2 * z != h3 * y || h1 * z != h3 * x) continue;
      out.inverse_quadrics = std::vector<Poly>{g1, g2, g3};
      // common factor: divide h_k by the k-th coordinate termwise
      const Poly& h = !h1.is_zero() ? h1 : (!h2.is_zero() ? h2 : h3);
      int v = !h1.is_zero() ? 0 : (!h2.is_zero() ? 1 : 2);
      std::vector<Term> quot;
      for (const auto& t : h.terms()) {
        if (t.exp[v] < 1)
          throw std::logic_error("inverse identity division failed");
        Exp e = t.exp;
        --e[v];
        quot.push_back({std::move(e), t.coeff});
      }
      out.common_factor = Poly::from_terms(R, std::move(quot));
      return out;
    }
  }
  throw std::domain_error(
      "no rank-2 column pair of B yields the inverse quadrics");
}

DepthZeroResult depth_zero_square_check(const IdealHandle& I) {
  const RingPtr& R = I.ring();
  IdealHandle I2 = ideal_power(I, 2);
  IdealHandle sat = saturate(I2, Poly::variable(R, 0));
  for (int v = 1; v < R->nvars(); ++v)
    sat = intersect(sat, saturate(I2, Poly::variable(R, v)));
  DepthZeroResult out;
  for (const auto& g : sat.groebner()) {
    if (!normal_form(g, I2).is_zero()) {
      out.depth_zero = true;
      out.witness = g;
      break;
    }
  }
  return out;
}

ReductionReport reduction_number_report(const IdealHandle& fiber,
                                        unsigned long seed) {
  ReductionReport out;
  HilbertData hs = hilbert_series(fiber);
  out.analytic_spread = hs.dim;
  out.fiber_cm = artinian_cm_test(fiber, seed);
  out.h_degree = hs.h_degree();
  if (out.fiber_cm.cm) out.reduction_number = out.h_degree;
  out.multiplicity = hs.multiplicity;
  for (long t = 1; t <= 5; ++t)
    out.function_matches_polynomial.push_back(
        hs.function_values[t] == hs.hilbert_polynomial(t));
  return out;
}

LocalProfile local_profile(const LinearMatrix& phi,
                           const std::vector<Poly>& prime_forms) {
  const RingPtr& R = phi.ring();
  int n = phi.rows();
  QMat L = linear_coeff_matrix(prime_forms);
  if (prime_forms.size() != 2 || L.rank() != 2)
    throw std::invalid_argument("prime must be two independent linear forms");
  std::vector<mpq_class> point = L.nullspace().front();

  IdealHandle p(R, prime_forms);
  std::vector<Poly> f = hilbert_burch_generators(phi);
  for (const auto& g : f)
    if (!normal_form(g, p).is_zero())
      throw std::invalid_argument("prime does not contain the ideal");

  int u_p = 0;
  for (int t = 1; t <= n - 1; ++t) {
    bool contained = true;
    IdealHandle It = minors_ideal(phi, t);
    for (const auto& m : It.gens())
      if (!normal_form(m, p).is_zero()) contained = false;
    if (contained) break;
    u_p = t;
  }
  int rk = rank_at_point(phi, point);
  if (rk != u_p)
    throw std::logic_error("rank at point disagrees with minor membership");

  LocalProfile out;
  out.prime = prime_forms;
  out.point = point;
  out.u_p = u_p;
  out.mu = n - rk;
  out.complete_intersection = (out.mu == 2);
  return out;
}

SyzygyResult linear_syzygy_matrix(const std::vector<Poly>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const RingPtr& R = gens.front().ring();
  int n = static_cast<int>(gens.size());
  int nv = R->nvars();
  int d = gens.front().degree();
  for (const auto& g : gens) {
    require_same_ring(gens.front(), g);
    if (!g.is_homogeneous() || g.degree() != d)
      throw std::invalid_argument("generators are not equigenerated");
  }

  // monomials of degree d+1 index the rows
  std::vector<Exp> mons;
  Exp cur(nv, 0);
  auto enumerate = [&](auto&& self, int v, int rem) -> void {
    if (v == nv - 1) {
      cur[v] = rem;
      mons.push_back(cur);
      cur[v] = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[v] = e;
      self(self, v + 1, rem - e);
    }
    cur[v] = 0;
  };
  enumerate(enumerate, 0, d + 1);
  std::map<Exp, int> row_of;
  for (size_t i = 0; i < mons.size(); ++i) row_of[mons[i]] = static_cast<int>(i);

  QMat M(static_cast<int>(mons.size()), n * nv, R->field());
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < nv; ++v) {
      Poly prod = gens[i] * Poly::variable(R, v);
      for (const auto& t : prod.terms())
        M.at(row_of.at(t.exp), i * nv + v) = t.coeff;
    }

  auto ns = M.nullspace();
  SyzygyResult out;
  out.nullity = static_cast<int>(ns.size());
  if (out.nullity != n - 1) return out;

  LinearMatrix phi(R, n, n - 1);
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < n; ++i) {
      Poly e = Poly::zero(R);
      for (int v = 0; v < nv; ++v)
        if (ns[j][i * nv + v] != 0)
          e = e + Poly::variable(R, v) * ns[j][i * nv + v];
      phi.set(i, j, std::move(e));
    }
  if (!ideal_equal(IdealHandle(R, hilbert_burch_generators(phi)),
                   IdealHandle(R, gens))) {
    out.nullity = n - 1;
    return out;  // syzygies exist but do not present the ideal
  }
  out.phi = std::move(phi);
  return out;
}

}  // namespace burch
