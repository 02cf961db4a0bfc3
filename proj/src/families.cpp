#include "burch/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace burch {

namespace {

void require_xyz(const RingPtr& R) {
  if (R->nvars() != 3 || R->var_index("x") != 0 || R->var_index("y") != 1 ||
      R->var_index("z") != 2)
    throw std::invalid_argument("families: expected a ring on x, y, z");
}

std::vector<mpq_class> coeff_vector(const Poly& form) {
  std::vector<mpq_class> c(3);
  for (int v = 0; v < 3; ++v) c[v] = form.linear_coeff(v);
  return c;
}

std::vector<mpq_class> cross(const std::vector<mpq_class>& a,
                             const std::vector<mpq_class>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// scale so the first nonzero coordinate is 1; the zero vector stays zero
std::vector<mpq_class> projective_normalize(std::vector<mpq_class> v) {
  for (const auto& c : v)
    if (c != 0) {
      mpq_class pivot = c;
      for (auto& d : v) d /= pivot;
      break;
    }
  return v;
}

std::vector<mpq_class> point_of_prime(const std::vector<Poly>& prime) {
  if (prime.size() != 2 || !prime[0].is_linear_form() ||
      !prime[1].is_linear_form())
    throw std::invalid_argument("fat point prime: expected two linear forms");
  QMat m = linear_coeff_matrix(prime);
  auto ns = m.nullspace();
  if (ns.size() != 1)
    throw std::invalid_argument("fat point prime: forms are proportional");
  return projective_normalize(ns[0]);
}

}  // namespace

MonomialFamily monomial_family(const RingPtr& ring, const std::string& letters) {
  require_xyz(ring);
  int n = static_cast<int>(letters.size()) + 1;
  if (n < 3) throw std::invalid_argument("entry sequence too short");
  bool has_x = false, has_y = false;
  for (char c : letters) {
    if (c == 'x') has_x = true;
    else if (c == 'y') has_y = true;
    else throw std::invalid_argument("entry sequence alphabet is {x, y}");
  }
  if (!has_x || !has_y)
    throw std::invalid_argument("entry sequence needs both letters");

  Poly z = Poly::variable(ring, 2);
  LinearMatrix phi(ring, n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    phi.set(j, j, z);
    phi.set(j + 1, j, -Poly::variable(ring, letters[j] == 'x' ? 0 : 1));
  }
  MonomialFamily out{letters, phi, hilbert_burch_generators(phi)};
  for (const auto& g : out.generators)
    if (g.terms().size() != 1)
      throw std::logic_error("monomial family minors are not monomial");

  PointSearch ps = rational_points_codim2(IdealHandle(ring, out.generators));
  std::vector<std::vector<mpq_class>> want = {{1, 0, 0}, {0, 1, 0}};
  if (!ps.complete || ps.points.size() != 2 ||
      std::find(ps.points.begin(), ps.points.end(), want[0]) == ps.points.end() ||
      std::find(ps.points.begin(), ps.points.end(), want[1]) == ps.points.end())
    throw std::logic_error("monomial family: minimal primes are not the two coordinate points");
  return out;
}

std::vector<Poly> mixed_monomial_family(const RingPtr& ring, int n, int r) {
  require_xyz(ring);
  if (n < 3) throw std::invalid_argument("mixed_monomial_family: n >= 3");
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("mixed_monomial_family: 1 <= r <= n-1");
  Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1),
       z = Poly::variable(ring, 2);
  std::vector<Poly> gens;
  for (int i = 0; i < r; ++i)
    gens.push_back(x * y.pow(n - 2 - i) * z.pow(i));
  for (int i = r; i <= n - 2; ++i)
    gens.push_back(y.pow(n - 1 - i) * z.pow(i));
  gens.push_back(z.pow(n - 1));
  return gens;
}

ArrangementFamily arrangement_family(const std::vector<Poly>& forms) {
  if (forms.empty()) throw std::invalid_argument("empty arrangement");
  const RingPtr& R = forms.front().ring();
  require_xyz(R);
  int n = static_cast<int>(forms.size());
  if (n < 3) throw std::invalid_argument("arrangement needs >= 3 forms");
  std::vector<std::vector<mpq_class>> coeffs;
  for (const auto& f : forms) {
    require_same_ring(f, forms.front());
    if (!f.is_linear_form())
      throw std::invalid_argument("arrangement entries must be linear forms");
    coeffs.push_back(coeff_vector(f));
  }
  if (linear_coeff_matrix(forms).rank() != 3)
    throw std::invalid_argument("arrangement does not span the linear forms");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto c = cross(coeffs[i], coeffs[j]);
      if (c[0] == 0 && c[1] == 0 && c[2] == 0)
        throw std::invalid_argument("arrangement has proportional forms");
    }

  ArrangementFamily out;
  out.forms = forms;
  out.phi = LinearMatrix(R, n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    out.phi.set(j, j, forms[j]);
    out.phi.set(j + 1, j, -forms[j + 1]);
  }
  for (int i = 0; i < n; ++i) {
    Poly p = Poly::constant(R, 1);
    for (int j = 0; j < n; ++j)
      if (j != i) p = p * forms[j];
    out.generators.push_back(p);
  }
  // the signed minors are (-1)^(n+1) times the products
  auto f = hilbert_burch_generators(out.phi);
  mpq_class sign = (n % 2 == 1) ? 1 : -1;
  for (int i = 0; i < n; ++i)
    if (f[i] != out.generators[i] * sign)
      throw std::logic_error("arrangement minors do not match the products");

  // pairwise intersection points, deduplicated projectively
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto pt = projective_normalize(cross(coeffs[i], coeffs[j]));
      bool seen = false;
      for (const auto& q : out.points) seen = seen || q.point == pt;
      if (seen) continue;
      ArrangementPoint ap;
      ap.point = pt;
      ap.prime = linear_prime_at(R, pt);
      for (const auto& form : forms)
        if (form.eval(pt) == 0) ++ap.lines;
      ap.multiplicity = ap.lines - 1;
      out.points.push_back(std::move(ap));
    }

  IdealHandle I(R, out.generators);
  IdealHandle fat;
  for (const auto& p : out.points) {
    IdealHandle pk = ideal_power(IdealHandle(R, p.prime), p.multiplicity);
    fat = fat.ring() ? intersect(fat, pk) : pk;
  }
  if (!ideal_equal(I, fat))
    throw std::logic_error("arrangement is not the expected fat point ideal");
  return out;
}

FatPointResult fat_point_ideal(const RingPtr& ring, std::vector<FatPoint> spec) {
  require_xyz(ring);
  if (spec.empty()) throw std::invalid_argument("empty fat point spec");
  std::vector<std::vector<mpq_class>> pts;
  for (auto& fp : spec) {
    if (fp.multiplicity < 1)
      throw std::invalid_argument("fat point multiplicity >= 1");
    for (const auto& g : fp.prime) require_same_ring(g, Poly::variable(ring, 0));
    pts.push_back(point_of_prime(fp.prime));
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw std::invalid_argument("fat point spec repeats a point");
  std::stable_sort(spec.begin(), spec.end(),
                   [](const FatPoint& a, const FatPoint& b) {
                     return a.multiplicity > b.multiplicity;
                   });

  FatPointResult out;
  for (const auto& fp : spec) {
    IdealHandle pk =
        ideal_power(IdealHandle(ring, fp.prime), fp.multiplicity);
    out.ideal = out.ideal.ring() ? intersect(out.ideal, pk) : pk;
  }
  out.minimal_generators = minimalize_generators(ring, out.ideal.gens());
  out.equigenerated = true;
  for (const auto& g : out.minimal_generators)
    out.equigenerated = out.equigenerated && g.is_homogeneous() &&
                        g.degree() == out.minimal_generators.front().degree();
  if (!out.equigenerated || out.minimal_generators.size() < 2) return out;

  out.syzygies = linear_syzygy_matrix(out.minimal_generators);
  if (!out.syzygies.phi) return out;
  out.expected_u =
      static_cast<int>(out.minimal_generators.size()) - spec.front().multiplicity - 1;
  try {
    out.chaos = chaos_invariant(*out.syzygies.phi);
    out.hypotheses_hold = true;
    out.u_matches = out.chaos->u == *out.expected_u;
  } catch (const std::domain_error&) {
    out.hypotheses_hold = false;
  }
  return out;
}

std::optional<int> subhomaloidal_degree(const std::vector<int>& mults) {
  long s1 = 0, s2 = 0;
  for (int m : mults) {
    if (m < 0) throw std::invalid_argument("multiplicities are nonnegative");
    s1 += m;
    s2 += static_cast<long>(m) * m;
  }
  if (s1 % 3 != 0) return std::nullopt;
  long s = s1 / 3 + 1;
  if (s2 != s * (s - 1)) return std::nullopt;
  if (s % 2 == 0)
    throw std::logic_error("even subhomaloidal degree contradicts parity");
  return static_cast<int>(s);
}

DegenerateReport degenerate_arrangement_check(const std::vector<Poly>& forms) {
  ArrangementFamily af = arrangement_family(forms);
  const RingPtr& R = forms.front().ring();
  int n = static_cast<int>(forms.size());

  DegenerateReport rep;
  for (const auto& p : af.points)
    rep.concurrent = rep.concurrent || p.lines >= n - 1;
  rep.u = chaos_invariant(af.phi).u;
  ReductionReport rr = reduction_number_report(fiber_ideal(af.phi), 1);
  rep.reduction_number = rr.reduction_number;
  rep.r_at_most_one = rr.reduction_number && *rr.reduction_number <= 1;
  rep.consistent =
      rep.concurrent == (rep.u == 1) && (rep.u == 1) == rep.r_at_most_one;

  for (const auto& p : af.points) rep.multiplicities.push_back(p.multiplicity);
  std::sort(rep.multiplicities.rbegin(), rep.multiplicities.rend());

  if (rep.concurrent && rep.u == 1 && rep.r_at_most_one) {
    rep.identities_checked = true;
    long s1 = std::accumulate(rep.multiplicities.begin(),
                              rep.multiplicities.end(), 0L);
    long s2 = 0;
    for (int m : rep.multiplicities) s2 += static_cast<long>(m) * m;
    rep.sum_identity = s1 == 2L * n - 3;
    rep.square_identity = s2 == static_cast<long>(n) * n - 3L * n + 3;
    IdealHandle I2 = ideal_power(IdealHandle(R, af.generators), 2);
    rep.mu_square_identity =
        static_cast<int>(minimalize_generators(R, I2.gens()).size()) ==
        3 * (n - 1);
  }
  return rep;
}

}  // namespace burch
