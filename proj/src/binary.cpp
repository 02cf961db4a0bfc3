#include "burch/binary.hpp"

#include <algorithm>
#include <stdexcept>

namespace burch {

namespace {

// The two variable indices a binary-form computation lives in.
std::pair<int, int> binary_vars(const std::vector<Poly>& forms) {
  const RingPtr& R = forms.front().ring();
  std::vector<char> used(R->nvars(), 0);
  for (const auto& f : forms)
    for (const auto& t : f.terms())
      for (int v = 0; v < R->nvars(); ++v)
        if (t.exp[v] > 0) used[v] = 1;
  std::vector<int> vars;
  for (int v = 0; v < R->nvars(); ++v)
    if (used[v]) vars.push_back(v);
  if (vars.size() > 2)
    throw std::invalid_argument("more than two variables present");
  while (vars.size() < 2) {
    for (int v = 0; v < R->nvars(); ++v)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        vars.push_back(v);
        break;
      }
    if (R->nvars() < 2)
      throw std::invalid_argument("ring has fewer than two variables");
  }
  std::sort(vars.begin(), vars.end());
  return {vars[0], vars[1]};
}

// Coefficient vector c[k] = coeff of u^(d-k) v^k for a homogeneous form.
std::vector<mpq_class> coeff_vector(const Poly& f, int u, int v) {
  if (!f.is_homogeneous())
    throw std::invalid_argument("non-homogeneous binary form");
  int d = f.degree();
  std::vector<mpq_class> c(d + 1, mpq_class(0));
  for (const auto& t : f.terms()) c[t.exp[v]] = t.coeff;
  return c;
}

void trim(std::vector<mpq_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Euclidean gcd of univariate polynomials over the coefficient field,
// ascending coefficients.
std::vector<mpq_class> uni_gcd(std::vector<mpq_class> a,
                               std::vector<mpq_class> b, const FieldSpec& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    mpq_class lead_inv = F.inv(b.back());
    while (a.size() >= b.size()) {
      mpq_class q = F.canon(a.back() * lead_inv);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[off + i] = F.canon(a[off + i] - q * b[i]);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    mpq_class inv = F.inv(a.back());
    for (auto& c : a) c = F.canon(c * inv);
  }
  return a;
}

}  // namespace

Poly binary_form_gcd(const std::vector<Poly>& forms) {
  if (forms.empty()) throw std::invalid_argument("empty form list");
  const RingPtr& R = forms.front().ring();
  for (const auto& f : forms) require_same_ring(forms.front(), f);
  std::vector<Poly> nz;
  for (const auto& f : forms)
    if (!f.is_zero()) nz.push_back(f);
  if (nz.empty()) throw std::invalid_argument("all forms are zero");
  auto [u, v] = binary_vars(nz);
  const FieldSpec& F = R->field();

  // Split each form as u^a v^b * core with core(1,0), core(0,1) nonzero;
  // the gcd is u^min(a) v^min(b) times the gcd of the cores, and the cores
  // lose no roots under dehomogenization t = v/u.
  int upow = -1, vpow = -1;
  std::vector<mpq_class> g;
  for (const auto& f : nz) {
    std::vector<mpq_class> c = coeff_vector(f, u, v);
    int lo = 0;
    while (c[lo] == 0) ++lo;
    int hi = static_cast<int>(c.size()) - 1;
    while (c[hi] == 0) --hi;
    int d = static_cast<int>(c.size()) - 1;
    vpow = (vpow < 0) ? lo : std::min(vpow, lo);
    upow = (upow < 0) ? d - hi : std::min(upow, d - hi);
    std::vector<mpq_class> p(c.begin() + lo, c.begin() + hi + 1);
    g = g.empty() && &f == &nz.front() ? p : uni_gcd(g, p, F);
  }

  // reassemble: u^upow v^vpow times the homogenization of g
  int gd = static_cast<int>(g.size()) - 1;
  std::vector<Term> terms;
  for (int k = 0; k <= gd; ++k) {
    if (g[k] == 0) continue;
    Exp e(R->nvars(), 0);
    e[u] = upow + gd - k;
    e[v] = vpow + k;
    terms.push_back({std::move(e), g[k]});
  }
  return Poly::from_terms(R, std::move(terms)).monic();
}

std::optional<std::pair<mpq_class, mpq_class>> binary_form_rational_root(
    const Poly& form) {
  if (form.is_zero()) return std::make_pair(mpq_class(1), mpq_class(0));
  const RingPtr& R = form.ring();
  auto [u, v] = binary_vars({form});
  std::vector<mpq_class> c = coeff_vector(form, u, v);
  int d = static_cast<int>(c.size()) - 1;
  if (d == 0) return std::nullopt;
  if (c[0] == 0) return std::make_pair(mpq_class(1), mpq_class(0));
  if (c[d] == 0) return std::make_pair(mpq_class(0), mpq_class(1));

  const FieldSpec& F = R->field();
  auto value_at = [&](const mpq_class& t) {
    mpq_class acc = 0;
    for (int k = d; k >= 0; --k) acc = F.canon(acc * t + c[k]);
    return acc;
  };

  if (!F.is_rational()) {
    for (unsigned long t = 0; t < F.characteristic; ++t)
      if (value_at(mpq_class(t)) == 0)
        return std::make_pair(mpq_class(1), mpq_class(t));
    return std::nullopt;
  }

  // primitive integer coefficients, then the rational root theorem
  mpz_class den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                  q.get_den().get_mpz_t());
  std::vector<mpz_class> ic(d + 1);
  for (int k = 0; k <= d; ++k) {
    mpq_class s = c[k] * den;
    ic[k] = s.get_num();
  }
  auto divisors = [](const mpz_class& n0) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> ds;
    for (mpz_class i = 1; i * i <= n; ++i) {
      if (n % i == 0) {
        ds.push_back(i);
        ds.push_back(n / i);
      }
    }
    return ds;
  };
  for (const auto& p : divisors(ic[0]))
    for (const auto& q : divisors(ic[d]))
      for (int sign : {1, -1}) {
        mpq_class t(p * sign, q);
        t.canonicalize();
        if (value_at(t) == 0) return std::make_pair(mpq_class(1), t);
      }
  return std::nullopt;
}

}  // namespace burch
