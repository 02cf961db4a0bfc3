#include "burch/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace burch {

namespace {

RingPtr xyz() { return PolyRing::make({"x", "y", "z"}); }

Poly P(const RingPtr& R, const std::string& s) { return parse_poly(R, s); }

IdealHandle lift_ideal(const IdealHandle& I, const RingPtr& T) {
  std::vector<Poly> gs;
  for (const auto& g : I.gens()) gs.push_back(g.lift_to(T));
  return IdealHandle(T, std::move(gs));
}

/// Sequences with exactly one x, n generators.
std::vector<std::string> single_x_sequences(int n) {
  std::vector<std::string> out;
  for (int pos = 0; pos < n - 1; ++pos) {
    std::string s(n - 1, 'y');
    s[pos] = 'x';
    out.push_back(s);
  }
  return out;
}

std::string alternating_sequence(int n) {
  std::string s;
  for (int i = 0; i < n - 1; ++i) s += (i % 2 == 0) ? 'x' : 'y';
  return s;
}

std::string separating_sequence(int r, int s) {
  return std::string(r, 'x') + std::string(s, 'y');
}

std::vector<std::vector<std::string>> named_arrangements() {
  return {{"x", "y", "x + y", "z"},
          {"x", "y", "y + z", "y - z", "y + 2*z"},
          {"x", "y", "z", "x + y + z", "x - y + 2*z"}};
}

/// >= 20 small arrangements with coefficients in [-2, 2]: a mix of
/// concurrent (degenerate) and generic configurations.
std::vector<std::vector<std::string>> small_arrangements() {
  return {
      {"x", "y", "z"},
      {"x", "y", "x + y", "z"},
      {"x", "y", "x - y", "z"},
      {"x", "y", "x + 2*y", "z"},
      {"x", "y", "2*x - y", "z"},
      {"x", "z", "x + z", "y"},
      {"y", "z", "y - 2*z", "x"},
      {"x", "y", "y + z", "y - z"},
      {"x", "y", "x + y", "x - y", "z"},
      {"x", "y", "x + y", "2*x + y", "z"},
      {"x", "y", "y + z", "y - z", "y + 2*z"},
      {"x", "y", "y + z", "y - z", "y - 2*z"},
      {"z", "x", "x + y", "x - y", "x + 2*y"},
      {"x", "y", "z", "x + y + z"},
      {"x", "y", "z", "x - y + z"},
      {"x", "y", "z", "x + y - z"},
      {"x", "y", "z", "x + 2*y + z"},
      {"x", "y", "z", "2*x + y + z"},
      {"x", "y", "z", "x + y + 2*z"},
      {"x", "y", "z", "x - y + 2*z"},
      {"x", "y", "z", "x + y + z", "x - y + 2*z"},
      {"x", "y", "z", "x + 2*y - z"},
  };
}

std::vector<Poly> parse_forms(const RingPtr& R,
                              const std::vector<std::string>& fs) {
  std::vector<Poly> out;
  for (const auto& s : fs) out.push_back(P(R, s));
  return out;
}

struct Tally {
  int checked = 0;
  int failed = 0;
  std::ostringstream why;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      why << " [" << what << "]";
    }
  }
  CriterionResult done(int number, const std::string& name) const {
    CriterionResult r;
    r.number = number;
    r.name = name;
    r.passed = failed == 0 && checked > 0;
    r.detail = std::to_string(checked - failed) + "/" +
               std::to_string(checked) + " checks" + why.str();
    return r;
  }
};

CriterionResult skipped(int number, const std::string& name) {
  CriterionResult r;
  r.number = number;
  r.name = name;
  r.passed = true;
  r.skipped = true;
  r.detail = "skipped at fast level";
  return r;
}

std::optional<CanonicalForm> canonicalize_any(const LinearMatrix& phi,
                                              const ChaosProfile& chaos) {
  const RingPtr& R = phi.ring();
  std::vector<std::vector<mpq_class>> candidates;
  if (chaos.universal_point) candidates.push_back(*chaos.universal_point);
  for (const auto& lp : chaos.local)
    if (lp.u_p == chaos.u) candidates.push_back(lp.point);
  for (const auto& pt : candidates) {
    try {
      return canonicalize_chaos_form(phi, linear_prime_at(R, pt), chaos.u);
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

CriterionResult criterion_single_x_fiber(VerifyLevel level) {
  Tally t;
  auto R = xyz();
  int maxn = level == VerifyLevel::fast ? 5 : 6;
  for (int n = 4; n <= maxn; ++n)
    for (const auto& seq : single_x_sequences(n)) {
      LinearMatrix phi = monomial_family(R, seq).phi;
      ChaosProfile chaos = chaos_invariant(phi);
      t.expect(chaos.u == 1, seq + ": u != 1");
      auto cf = canonicalize_any(phi, chaos);
      if (!cf) {
        t.expect(false, seq + ": not canonicalizable");
        continue;
      }
      JacobianDual jd = jacobian_dual(cf->phi_c, 1);
      IdealHandle fiber = fiber_ideal(cf->phi_c);
      IdealHandle scroll =
          lift_ideal(minors_ideal(*jd.b_prime, 2), fiber.ring());
      t.expect(ideal_equal(fiber, scroll), seq + ": fiber != I_2(B')");
      IdealHandle rees = rees_ideal(cf->phi_c);
      IdealHandle sym = symmetric_ideal(cf->phi_c);
      IdealHandle expected = ideal_sum(
          sym, lift_ideal(minors_ideal(*jd.b_prime, 2), sym.ring()));
      t.expect(ideal_equal(rees, expected), seq + ": rees != (sym, I_2(B'))");
      t.expect(fiber_type_check(sym, fiber, rees).fiber_type,
               seq + ": not fiber type");
    }
  return t.done(1, "single-x family: fiber and Rees from the subdual");
}

CriterionResult criterion_dual_codim(VerifyLevel level) {
  Tally t;
  auto R = xyz();
  int maxn = level == VerifyLevel::fast ? 5 : 6;
  for (int n = 4; n <= maxn; ++n)
    for (const auto& seq : single_x_sequences(n)) {
      LinearMatrix phi = monomial_family(R, seq).phi;
      JacobianDual jd = jacobian_dual(phi);
      int h = dimension_and_height(minors_ideal(jd.B, 2)).height;
      t.expect(h == n - 1, seq + ": codim I_2(B) = " + std::to_string(h));
    }
  return t.done(2, "codim I_2(B) = n - 1 on the single-x family");
}

CriterionResult criterion_scroll(VerifyLevel level) {
  Tally t;
  auto R = xyz();
  int maxn = level == VerifyLevel::fast ? 5 : 7;
  int canonicalizable = 0, skipped_count = 0;
  auto run = [&](const LinearMatrix& phi, const std::string& label) {
    ChaosProfile chaos = chaos_invariant(phi);
    auto cf = canonicalize_any(phi, chaos);
    if (!cf) {
      ++skipped_count;
      return;
    }
    ++canonicalizable;
    JacobianDual jd = jacobian_dual(cf->phi_c, chaos.u);
    t.expect(bool(jd.b_prime), label + ": no B'");
    if (!jd.b_prime) return;
    t.expect(one_generic_test(*jd.b_prime).one_generic,
             label + ": B' not 1-generic");
    int dim = dimension_and_height(minors_ideal(*jd.b_prime, 2)).dim;
    t.expect(dim == chaos.u + 2,
             label + ": dim k[t]/I_2(B') = " + std::to_string(dim));
  };
  for (int n = 4; n <= maxn; ++n)
    for (const auto& seq : all_sequences(n))
      run(monomial_family(R, seq).phi, seq);
  for (const auto& fs : named_arrangements())
    run(arrangement_family(parse_forms(R, fs)).phi, fs.front() + "...");
  CriterionResult r = t.done(3, "subdual 1-generic with scroll dimension u + 2");
  r.detail += ", " + std::to_string(canonicalizable) + " canonicalizable, " +
              std::to_string(skipped_count) + " skipped";
  return r;
}

CriterionResult criterion_birational_depth(VerifyLevel level) {
  Tally t;
  auto R = xyz();
  int maxn = level == VerifyLevel::fast ? 5 : 6;
  std::vector<std::pair<LinearMatrix, std::string>> fixtures;
  for (int n = 4; n <= maxn; ++n)
    for (const auto& seq : single_x_sequences(n))
      fixtures.emplace_back(monomial_family(R, seq).phi, seq);
  for (int n = 5; n <= maxn; ++n)
    fixtures.emplace_back(monomial_family(R, alternating_sequence(n)).phi,
                          "alt" + std::to_string(n));
  fixtures.emplace_back(monomial_family(R, separating_sequence(2, 2)).phi,
                        "sep22");
  if (maxn >= 6)
    fixtures.emplace_back(monomial_family(R, separating_sequence(3, 2)).phi,
                          "sep32");
  for (const auto& fs : named_arrangements()) {
    if (static_cast<int>(fs.size()) > maxn) continue;
    fixtures.emplace_back(arrangement_family(parse_forms(R, fs)).phi,
                          fs.front() + "...");
  }
  for (const auto& [phi, label] : fixtures) {
    JacobianDual jd = jacobian_dual(phi);
    IdealHandle fiber = fiber_ideal(phi);
    auto gens = hilbert_burch_generators(phi);
    BirationalityData bd = birationality_and_inverse(jd, fiber, gens);
    t.expect(bd.rank_mod_fiber == 2, label + ": rank != 2");
    t.expect(bool(bd.inverse_quadrics), label + ": no inverse quadrics");
    DepthZeroResult dz =
        depth_zero_square_check(IdealHandle(phi.ring(), gens));
    t.expect(dz.depth_zero, label + ": depth R/I^2 not zero");
  }
  return t.done(4, "birational rank 2, inverse quadrics, depth(R/I^2) = 0");
}

CriterionResult criterion_alternating(VerifyLevel level) {
  Tally t;
  auto R = xyz();
  int maxn = level == VerifyLevel::fast ? 5 : 7;
  for (int n = 5; n <= maxn; ++n) {
    std::string seq = alternating_sequence(n);
    LinearMatrix phi = monomial_family(R, seq).phi;
    IdealHandle fiber = fiber_ideal(phi);
    const RingPtr& T = fiber.ring();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    IdealHandle cat = minors_ideal(catalecticant_2step(T, idx), 2);
    t.expect(ideal_equal(fiber, cat),
             seq + ": fiber != I_2(catalecticant)");
    JacobianDual jd = jacobian_dual(phi);
    IdealHandle I2B = minors_ideal(jd.B, 2);
    const RingPtr& TB = jd.t_ring;
    Poly t1 = Poly::variable(TB, 0), tn = Poly::variable(TB, n - 1);
    t.expect(ideal_contains(I2B, t1 * tn), seq + ": t1*tn not in I_2(B)");
    for (int i = 1; i <= n - 2; ++i) {
      Poly ti = Poly::variable(TB, i);
      t.expect(ideal_contains(I2B, ti * ti),
               seq + ": t" + std::to_string(i + 1) + "^2 not in I_2(B)");
    }
  }
  return t.done(5, "alternating sequences: catalecticant fiber");
}

CriterionResult criterion_separating(VerifyLevel level) {
  Tally t;
  auto R = xyz();
  std::vector<std::pair<int, int>> shapes = {{2, 2}};
  if (level == VerifyLevel::full) {
    shapes.push_back({3, 2});
    shapes.push_back({3, 3});
  }
  for (auto [r, s] : shapes) {
    int n = r + s + 1;
    std::string seq = separating_sequence(r, s);
    LinearMatrix phi = monomial_family(R, seq).phi;

    IdealHandle fiber = fiber_ideal(phi);
    const RingPtr& T = fiber.ring();
    std::vector<int> left, right;
    for (int i = 0; i <= r; ++i) left.push_back(i);
    for (int i = r; i <= n - 1; ++i) right.push_back(i);
    IdealHandle hank = ideal_sum(minors_ideal(hankel_matrix(T, left), 2),
                                 minors_ideal(hankel_matrix(T, right), 2));
    t.expect(ideal_equal(fiber, hank), seq + ": fiber != (I_2 H1, I_2 H2)");

    IdealHandle rees = rees_ideal(phi);
    const RingPtr& A = rees.ring();
    std::vector<int> aleft, aright;
    for (int i : left) aleft.push_back(i + 3);
    for (int i : right) aright.push_back(i + 3);
    Poly x = Poly::variable(A, 0), y = Poly::variable(A, 1),
         z = Poly::variable(A, 2);
    IdealHandle scrolls =
        ideal_sum(minors_ideal(scroll_matrix(x, z, aleft), 2),
                  minors_ideal(scroll_matrix(y, z, aright), 2));
    t.expect(ideal_equal(rees, scrolls), seq + ": rees != (I_2 S1, I_2 S2)");

    IdealHandle sym = symmetric_ideal(phi);
    t.expect(fiber_type_check(sym, fiber, rees).fiber_type,
             seq + ": not fiber type");
    t.expect(artinian_cm_test(fiber, 1).cm, seq + ": fiber not CM");
  }
  return t.done(6, "separating sequences: Hankel fiber and scroll Rees");
}

CriterionResult criterion_non_cm(VerifyLevel level) {
  if (level == VerifyLevel::fast)
    return skipped(7, "x y x x y y: fiber not Cohen-Macaulay");
  Tally t;
  auto R = xyz();
  LinearMatrix phi = monomial_family(R, "xyxxyy").phi;
  IdealHandle fiber = fiber_ideal(phi);
  for (unsigned long seed : {1UL, 2UL}) {
    CmEvidence ev = artinian_cm_test(fiber, seed);
    t.expect(!ev.cm, "fiber reported CM with seed " + std::to_string(seed));
  }
  PointSearch ps = rational_points_codim2(minors_ideal(phi, 4));
  t.expect(ps.points.size() >= 2,
           "I_4(phi) has " + std::to_string(ps.points.size()) +
               " rational minimal primes");
  return t.done(7, "x y x x y y: fiber not Cohen-Macaulay");
}

CriterionResult criterion_fat_points(VerifyLevel) {
  Tally t;
  auto R = xyz();
  for (const auto& fs : named_arrangements()) {
    ArrangementFamily af = arrangement_family(parse_forms(R, fs));
    std::vector<FatPoint> spec;
    for (const auto& p : af.points) spec.push_back({p.prime, p.multiplicity});
    FatPointResult fr = fat_point_ideal(R, spec);
    std::string label = fs.front() + "... (" + std::to_string(fs.size()) + ")";
    t.expect(fr.equigenerated, label + ": not equigenerated");
    t.expect(bool(fr.syzygies.phi), label + ": not linearly presented");
    t.expect(fr.hypotheses_hold, label + ": height hypotheses fail");
    t.expect(fr.u_matches, label + ": u != n - m1 - 1");
  }
  return t.done(8, "arrangements present linearly with u = n - m1 - 1");
}

CriterionResult criterion_degenerate(VerifyLevel) {
  Tally t;
  auto R = xyz();
  int degenerate = 0, generic = 0;
  for (const auto& fs : small_arrangements()) {
    DegenerateReport rep = degenerate_arrangement_check(parse_forms(R, fs));
    std::string label = "{" + fs.front() + ",...," + fs.back() + "}";
    t.expect(rep.consistent, label + ": conditions disagree");
    if (rep.concurrent) {
      ++degenerate;
      t.expect(rep.identities_checked && rep.sum_identity,
               label + ": sum m != 2n - 3");
      t.expect(rep.square_identity, label + ": sum m^2 != n^2 - 3n + 3");
      t.expect(rep.mu_square_identity, label + ": mu(I^2) != 3(n - 1)");
    } else {
      ++generic;
    }
  }
  CriterionResult r =
      t.done(9, "degenerate arrangement equivalences and identities");
  r.detail += ", " + std::to_string(degenerate) + " degenerate / " +
              std::to_string(generic) + " generic";
  return r;
}

/// Minimal monomial generators after inverting the coordinate that is a unit
/// at the point: the staircase count in the two remaining variables.
int local_mu_oracle(const std::vector<Poly>& gens, int v1, int v2) {
  std::vector<std::pair<int, int>> exps;
  for (const auto& g : gens) {
    const Exp& e = g.leading_term().exp;  // monomial generators
    exps.emplace_back(e[v1], e[v2]);
  }
  int count = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < exps.size() && minimal; ++j) {
      if (i == j) continue;
      bool divides = exps[j].first <= exps[i].first &&
                     exps[j].second <= exps[i].second;
      bool equal = exps[j] == exps[i];
      if (divides && (!equal || j < i)) minimal = false;
    }
    if (minimal) ++count;
  }
  return count;
}

CriterionResult criterion_local_mu(VerifyLevel level) {
  Tally t;
  auto R = xyz();
  int maxn = level == VerifyLevel::fast ? 5 : 6;
  for (int n = 4; n <= maxn; ++n)
    for (const auto& seq : all_sequences(n)) {
      MonomialFamily mf = monomial_family(R, seq);
      // p = (y, z) is the point (1:0:0); q = (x, z) is (0:1:0)
      int mu_p = local_mu_oracle(mf.generators, 1, 2);
      int mu_q = local_mu_oracle(mf.generators, 0, 2);
      t.expect(mu_p == n - rank_at_point(mf.phi, {1, 0, 0}),
               seq + ": mu at (y,z) mismatch");
      t.expect(mu_q == n - rank_at_point(mf.phi, {0, 1, 0}),
               seq + ": mu at (x,z) mismatch");
    }
  return t.done(10, "local generator counts vs matrix rank at the point");
}

CriterionResult criterion_graded_pieces(VerifyLevel) {
  Tally t;
  auto R = xyz();
  std::vector<std::pair<std::vector<Poly>, std::string>> fixtures;
  for (int n = 4; n <= 5; ++n)
    for (const auto& seq : all_sequences(n))
      fixtures.emplace_back(monomial_family(R, seq).generators, seq);
  fixtures.emplace_back(
      arrangement_family(parse_forms(R, {"x", "y", "x + y", "z"})).generators,
      "arr4");
  for (const auto& [gens, label] : fixtures) {
    int n = static_cast<int>(gens.size());
    IdealHandle I(R, gens);
    SyzygyResult syz = linear_syzygy_matrix(gens);
    if (!syz.phi) {
      t.expect(false, label + ": not linearly presented");
      continue;
    }
    HilbertData h = hilbert_series(fiber_ideal(*syz.phi));
    for (int tt = 1; tt <= 3; ++tt) {
      mpz_class lhs =
          graded_piece_dimension(ideal_power(I, tt), tt * (n - 1));
      t.expect(lhs == h.function_values[tt],
               label + ": t = " + std::to_string(tt));
    }
  }
  return t.done(11, "graded pieces of I^t vs fiber Hilbert function");
}

CriterionResult criterion_selfcheck(VerifyLevel) {
  Tally t;
  int failures = engine_selfcheck(200, 42);
  t.expect(failures == 0, std::to_string(failures) + " of 200 cases failed");
  CriterionResult r = t.done(12, "randomized engine self-checks");
  r.detail = failures == 0 ? "200/200 cases" : r.detail;
  return r;
}

}  // namespace

std::vector<std::string> all_sequences(int n) {
  std::vector<std::string> out;
  int len = n - 1;
  for (int mask = 1; mask < (1 << len) - 1; ++mask) {
    std::string s;
    for (int i = 0; i < len; ++i) s += (mask >> i & 1) ? 'x' : 'y';
    out.push_back(s);
  }
  return out;
}

std::vector<CriterionResult> run_verification(VerifyLevel level) {
  return {criterion_single_x_fiber(level),    criterion_dual_codim(level),
          criterion_scroll(level),       criterion_birational_depth(level),
          criterion_alternating(level),  criterion_separating(level),
          criterion_non_cm(level),       criterion_fat_points(level),
          criterion_degenerate(level),   criterion_local_mu(level),
          criterion_graded_pieces(level), criterion_selfcheck(level)};
}

namespace {

Poly random_poly(const RingPtr& R, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> nterms(2, 3);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Exp e(3, 0);
    int d = deg(rng);
    std::uniform_int_distribution<int> var(0, 2);
    for (int i = 0; i < d; ++i) ++e[var(rng)];
    int c = coeff(rng);
    if (c == 0) c = 1;
    terms.push_back({e, mpq_class(c)});
  }
  return Poly::from_terms(R, std::move(terms));
}

Poly spair(const RingPtr& R, const Poly& f, const Poly& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Exp lcm(3, 0);
  for (int i = 0; i < 3; ++i) lcm[i] = std::max(lf.exp[i], lg.exp[i]);
  Exp ef = lcm, eg = lcm;
  for (int i = 0; i < 3; ++i) {
    ef[i] -= lf.exp[i];
    eg[i] -= lg.exp[i];
  }
  return f * Poly::monomial(R, ef, mpq_class(1) / lf.coeff) -
         g * Poly::monomial(R, eg, mpq_class(1) / lg.coeff);
}

}  // namespace

int engine_selfcheck(int cases, unsigned long seed) {
  std::mt19937_64 rng(seed);
  auto R = xyz();
  int failures = 0;
  for (int c = 0; c < cases; ++c) {
    std::uniform_int_distribution<int> ngens(2, 3);
    std::vector<Poly> gens;
    int k = ngens(rng);
    for (int i = 0; i < k; ++i) {
      Poly p = random_poly(R, rng, 2);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    IdealHandle I(R, gens);
    bool ok = true;

    // every S-pair of the reduced basis reduces to zero
    const std::vector<Poly>& gb = I.groebner();
    for (size_t i = 0; i < gb.size() && ok; ++i)
      for (size_t j = i + 1; j < gb.size() && ok; ++j)
        ok = normal_form(spair(R, gb[i], gb[j]), I).is_zero();

    // saturation is idempotent
    std::uniform_int_distribution<int> var(0, 2);
    Poly f = Poly::variable(R, var(rng));
    IdealHandle sat = saturate(I, f);
    ok = ok && ideal_equal(sat, saturate(sat, f));

    // intersection bounds: I*J <= I cap J <= I, J
    Poly q = random_poly(R, rng, 2);
    if (!q.is_zero()) {
      IdealHandle J(R, {q});
      IdealHandle meet = intersect(I, J);
      ok = ok && is_subideal(meet, I) && is_subideal(meet, J) &&
           is_subideal(ideal_product(I, J), meet);
    }

    // the reduced basis is invariant under generator recombination
    if (gens.size() >= 2) {
      std::uniform_int_distribution<int> scalar(-2, 2);
      std::vector<Poly> mixed = gens;
      mixed[0] = mixed[0] + mixed[1] * mpq_class(scalar(rng));
      ok = ok && IdealHandle(R, mixed).groebner() == gb;
    }

    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace burch
