#include "burch/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "burch/linalg.hpp"

namespace burch {

namespace {

using UPoly = std::vector<mpz_class>;  // ascending powers of T

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

UPoly upoly_shift(const UPoly& a, int k) {
  UPoly r(a.size() + k, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

void upoly_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool exp_divides(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exp> minimalize_monomials(std::vector<Exp> gens) {
  std::vector<Exp> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (exp_divides(gens[j], gens[i]) && (gens[j] != gens[i] || j < i))
        redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// Numerator of the Hilbert series of R/I for a monomial ideal, over the
// full denominator (1-T)^numvars.  Pivot recursion on a shared variable.
UPoly numerator(std::vector<Exp> gens, int nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {mpz_class(1)};
  for (const auto& g : gens)
    if (total_degree(g) == 0) return {};  // unit ideal: series 0

  // pairwise coprime base case
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      for (int v = 0; v < nvars; ++v)
        if (gens[i][v] > 0 && gens[j][v] > 0) {
          coprime = false;
          break;
        }
  if (coprime) {
    UPoly r{mpz_class(1)};
    for (const auto& g : gens) {
      UPoly f(total_degree(g) + 1, mpz_class(0));
      f[0] = 1;
      f[total_degree(g)] = -1;
      r = upoly_mul(r, f);
    }
    return r;
  }

  int pivot = 0, best = -1;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++count;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }

  std::vector<Exp> plus;  // I + (x)
  Exp xe(nvars, 0);
  xe[pivot] = 1;
  plus.push_back(xe);
  for (const auto& g : gens)
    if (g[pivot] == 0) plus.push_back(g);

  std::vector<Exp> colon;  // I : x
  for (const auto& g : gens) {
    Exp e = g;
    if (e[pivot] > 0) --e[pivot];
    colon.push_back(std::move(e));
  }

  return upoly_add(numerator(std::move(plus), nvars),
                   upoly_shift(numerator(std::move(colon), nvars), 1));
}

// Exact division by (1-T); throws if not divisible.
UPoly divide_by_one_minus_t(const UPoly& a) {
  if (a.empty()) return {};
  UPoly b(a.size() - 1, mpz_class(0));
  mpz_class carry = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    carry += a[i];
    b[i] = carry;
  }
  if (carry + a.back() != 0)
    throw std::logic_error("numerator not divisible by (1-T)");
  upoly_trim(b);
  return b;
}

mpz_class binom(long n, long k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

std::vector<Exp> lt_monomials(const IdealHandle& I) {
  std::vector<Exp> lts;
  for (const auto& g : I.groebner()) lts.push_back(g.leading_term().exp);
  return lts;
}

mpz_class count_standard(const std::vector<Exp>& lts, int nvars, int degree) {
  mpz_class count = 0;
  Exp cur(nvars, 0);
  // enumerate exponent vectors of total degree `degree`
  auto rec = [&](auto&& self, int v, int rem) -> void {
    if (v == nvars - 1) {
      cur[v] = rem;
      for (const auto& l : lts)
        if (exp_divides(l, cur)) {
          cur[v] = 0;
          return;
        }
      ++count;
      cur[v] = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[v] = e;
      self(self, v + 1, rem - e);
    }
    cur[v] = 0;
  };
  rec(rec, 0, degree);
  return count;
}

}  // namespace

int HilbertData::h_degree() const {
  for (int i = static_cast<int>(h_polynomial.size()) - 1; i >= 0; --i)
    if (h_polynomial[i] != 0) return i;
  return -1;
}

mpz_class HilbertData::hilbert_polynomial(long t) const {
  if (dim <= 0) return 0;
  mpz_class v = 0;
  for (size_t i = 0; i < h_polynomial.size(); ++i)
    v += h_polynomial[i] * binom(t - static_cast<long>(i) + dim - 1, dim - 1);
  return v;
}

HilbertData hilbert_series(const IdealHandle& I) {
  for (const auto& g : I.gens())
    if (!g.is_homogeneous())
      throw std::invalid_argument("hilbert_series requires homogeneous input");
  const int n = I.ring()->nvars();
  HilbertData out;
  out.numerator = numerator(lt_monomials(I), n);
  DimHeight dh = dimension_and_height(I);
  out.dim = dh.dim;
  out.h_polynomial = out.numerator;
  int d = std::max(out.dim, 0);
  for (int i = 0; i < n - d; ++i)
    out.h_polynomial = divide_by_one_minus_t(out.h_polynomial);
  out.multiplicity = 0;
  for (const auto& c : out.h_polynomial) out.multiplicity += c;

  int tmax = std::max(6, 2 * n);
  out.function_values.assign(tmax + 1, mpz_class(0));
  for (int t = 0; t <= tmax; ++t) {
    mpz_class v = 0;
    for (size_t i = 0; i < out.numerator.size() && static_cast<int>(i) <= t; ++i)
      v += out.numerator[i] * binom(t - static_cast<long>(i) + n - 1, n - 1);
    out.function_values[t] = v;
  }
  return out;
}

mpz_class graded_piece_dimension(const IdealHandle& I, int d, bool of_quotient) {
  if (d < 0) return 0;
  const int n = I.ring()->nvars();
  mpz_class standard = count_standard(lt_monomials(I), n, d);
  if (of_quotient) return standard;
  return binom(d + n - 1, n - 1) - standard;
}

CmEvidence artinian_cm_test(const IdealHandle& I, unsigned long seed) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  DimHeight dh = dimension_and_height(I);
  if (dh.dim < 0)
    throw std::invalid_argument("cm test on the unit ideal");
  HilbertData hs = hilbert_series(I);

  CmEvidence ev;
  ev.multiplicity = hs.multiplicity;
  if (dh.dim == 0) {
    ev.cm = true;
    ev.length = hs.multiplicity;
    return ev;
  }
  if (dh.dim == n) {
    // only the zero ideal has full dimension; a maximal s.o.p. cuts down to k
    ev.cm = true;
    ev.length = 1;
    return ev;
  }

  for (int attempt = 0; attempt < 5; ++attempt) {
    ev.retries = attempt;
    std::vector<Poly> sop = random_linear_forms(R, dh.dim, seed + attempt);
    QMat coeffs = linear_coeff_matrix(sop);
    // choose pivot variables and solve the s.o.p. for them
    std::vector<mpq_class> a(static_cast<size_t>(dh.dim) * n);
    for (int i = 0; i < dh.dim; ++i)
      for (int j = 0; j < n; ++j) a[i * n + j] = coeffs.at(i, j);
    // echelonize via QMat::nullspace machinery is awkward; do it inline
    std::vector<int> pivots;
    {
      int r = 0;
      for (int c = 0; c < n && r < dh.dim; ++c) {
        int pr = -1;
        for (int i = r; i < dh.dim; ++i)
          if (a[i * n + c] != 0) {
            pr = i;
            break;
          }
        if (pr < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a[pr * n + j], a[r * n + j]);
        mpq_class inv = R->field().inv(a[r * n + c]);
        for (int j = 0; j < n; ++j)
          a[r * n + j] = R->field().canon(a[r * n + j] * inv);
        for (int i = 0; i < dh.dim; ++i) {
          if (i == r || a[i * n + c] == 0) continue;
          mpq_class f = a[i * n + c];
          for (int j = 0; j < n; ++j)
            a[i * n + j] = R->field().canon(a[i * n + j] - f * a[r * n + j]);
        }
        pivots.push_back(c);
        ++r;
      }
    }
    if (static_cast<int>(pivots.size()) != dh.dim) continue;

    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::string> rest;
    for (int v = 0; v < n; ++v)
      if (!is_pivot[v]) rest.push_back(R->var_name(v));
    RingPtr small = PolyRing::make(rest, MonomialOrder::degrevlex(), R->field());

    std::vector<Poly> images(n, Poly::zero(small));
    for (int v = 0; v < n; ++v)
      if (!is_pivot[v])
        images[v] = Poly::variable(small, small->var_index(R->var_name(v)));
    for (int r = 0; r < dh.dim; ++r) {
      Poly expr = Poly::zero(small);
      for (int v = 0; v < n; ++v)
        if (!is_pivot[v] && a[r * n + v] != 0)
          expr = expr - images[v] * a[r * n + v];
      images[pivots[r]] = expr;
    }

    std::vector<Poly> mapped;
    for (const auto& g : I.gens()) mapped.push_back(g.map(small, images));
    IdealHandle J(small, std::move(mapped));
    if (dimension_and_height(J).dim != 0) continue;  // not an s.o.p.

    // Artinian length: total count of standard monomials
    std::vector<Exp> lts;
    for (const auto& g : J.groebner()) lts.push_back(g.leading_term().exp);
    int maxdeg = 0;
    for (const auto& l : lts) maxdeg += total_degree(l);
    mpz_class length = 0;
    for (int t = 0;; ++t) {
      mpz_class c = count_standard(lts, small->nvars(), t);
      length += c;
      if (c == 0) break;
      if (t > maxdeg) break;
    }
    ev.sop = sop;
    ev.length = length;
    ev.cm = (length == hs.multiplicity);
    return ev;
  }
  throw std::runtime_error("no system of parameters found after retries");
}

}  // namespace burch
