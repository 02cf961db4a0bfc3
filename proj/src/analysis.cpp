#include "burch/analysis.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burch {

using json = nlohmann::ordered_json;

namespace {

FieldSpec parse_field(const json& ring) {
  if (!ring.contains("field")) return FieldSpec::rationals();
  const json& f = ring["field"];
  if (f.is_string() && f.get<std::string>() == "rational")
    return FieldSpec::rationals();
  if (f.is_object() && f.contains("prime") && f["prime"].is_number_unsigned())
    return FieldSpec::prime_field(f["prime"].get<unsigned long>());
  throw std::invalid_argument("ring.field: expected \"rational\" or {\"prime\": p}");
}

std::vector<std::string> string_list(const json& a, const char* key) {
  if (!a.is_array())
    throw std::invalid_argument(std::string(key) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : a) {
    if (!e.is_string())
      throw std::invalid_argument(std::string(key) + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

RingPtr instance_ring(const InstanceSpec& spec) {
  return PolyRing::make({"x", "y", "z"}, MonomialOrder::degrevlex(), spec.field);
}

std::vector<std::string> point_strings(const std::vector<mpq_class>& pt) {
  std::vector<std::string> out;
  for (const auto& c : pt) out.push_back(c.get_str());
  return out;
}

std::vector<std::vector<std::string>> matrix_strings(const LinearMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < m.rows(); ++i) {
    out.emplace_back();
    for (int j = 0; j < m.cols(); ++j) out.back().push_back(m.at(i, j).str());
  }
  return out;
}

std::vector<std::string> poly_strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

AnalysisReport::HilbertJson hilbert_json(const HilbertData& h) {
  AnalysisReport::HilbertJson out;
  for (const auto& c : h.numerator) out.numerator.push_back(c.get_str());
  out.dim = h.dim;
  for (const auto& c : h.h_polynomial) out.h_polynomial.push_back(c.get_str());
  out.multiplicity = h.multiplicity.get_str();
  for (const auto& c : h.function_values)
    out.function_values.push_back(c.get_str());
  return out;
}

/// Canonicalization at the universal point when present, else at any local
/// point of rank u.
std::optional<CanonicalForm> try_canonicalize(const LinearMatrix& phi,
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
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace

InstanceSpec parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("instance: expected an object");

  InstanceSpec spec;
  if (j.contains("ring")) spec.field = parse_field(j["ring"]);
  if (!j.contains("input") || !j["input"].is_object() ||
      !j["input"].contains("kind") || !j["input"]["kind"].is_string())
    throw std::invalid_argument("input.kind: missing or not a string");
  const json& in = j["input"];
  std::string kind = in["kind"].get<std::string>();
  if (kind == "matrix") {
    if (!in.contains("rows") || !in["rows"].is_array())
      throw std::invalid_argument("input.rows: expected an array of arrays");
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : in["rows"]) rows.push_back(string_list(r, "input.rows"));
    spec.matrix_rows = std::move(rows);
  } else if (kind == "sequence") {
    if (!in.contains("letters") || !in["letters"].is_string())
      throw std::invalid_argument("input.letters: expected a string");
    spec.sequence = in["letters"].get<std::string>();
  } else if (kind == "arrangement") {
    if (!in.contains("forms"))
      throw std::invalid_argument("input.forms: missing");
    spec.arrangement = string_list(in["forms"], "input.forms");
  } else if (kind == "fat_points") {
    if (!in.contains("points") || !in["points"].is_array())
      throw std::invalid_argument("input.points: expected an array");
    std::vector<InstanceSpec::FatPointInput> pts;
    for (const auto& p : in["points"]) {
      if (!p.is_object() || !p.contains("prime"))
        throw std::invalid_argument("input.points: entries need a prime");
      InstanceSpec::FatPointInput fp;
      fp.prime = string_list(p["prime"], "input.points.prime");
      if (p.contains("mult")) {
        if (!p["mult"].is_number_integer())
          throw std::invalid_argument("input.points.mult: expected an integer");
        fp.multiplicity = p["mult"].get<int>();
      }
      pts.push_back(std::move(fp));
    }
    spec.fat_points = std::move(pts);
  } else if (kind == "generators") {
    if (!in.contains("polys"))
      throw std::invalid_argument("input.polys: missing");
    spec.generators = string_list(in["polys"], "input.polys");
  } else {
    throw std::invalid_argument("input.kind: unknown kind \"" + kind + "\"");
  }
  if (j.contains("tasks")) spec.tasks = string_list(j["tasks"], "tasks");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw std::invalid_argument("seed: expected a nonnegative integer");
    spec.seed = j["seed"].get<unsigned long>();
  }
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string instance_to_json(const InstanceSpec& spec) {
  json j;
  if (spec.field.is_rational())
    j["ring"] = {{"field", "rational"}};
  else
    j["ring"] = {{"field", {{"prime", spec.field.characteristic}}}};
  json in;
  if (spec.matrix_rows) {
    in["kind"] = "matrix";
    in["rows"] = *spec.matrix_rows;
  } else if (spec.sequence) {
    in["kind"] = "sequence";
    in["letters"] = *spec.sequence;
  } else if (spec.arrangement) {
    in["kind"] = "arrangement";
    in["forms"] = *spec.arrangement;
  } else if (spec.fat_points) {
    in["kind"] = "fat_points";
    json pts = json::array();
    for (const auto& fp : *spec.fat_points)
      pts.push_back({{"prime", fp.prime}, {"mult", fp.multiplicity}});
    in["points"] = pts;
  } else if (spec.generators) {
    in["kind"] = "generators";
    in["polys"] = *spec.generators;
  } else {
    throw std::invalid_argument("instance has no input variant");
  }
  j["input"] = in;
  j["tasks"] = spec.tasks;
  j["seed"] = spec.seed;
  return j.dump(2);
}

LinearMatrix instance_matrix(const InstanceSpec& spec) {
  RingPtr R = instance_ring(spec);
  int variants = int(bool(spec.matrix_rows)) + int(bool(spec.sequence)) +
                 int(bool(spec.arrangement)) + int(bool(spec.fat_points)) +
                 int(bool(spec.generators));
  if (variants != 1)
    throw std::invalid_argument("instance needs exactly one input variant");

  if (spec.matrix_rows) {
    std::vector<std::vector<Poly>> rows;
    for (const auto& r : *spec.matrix_rows) {
      rows.emplace_back();
      for (const auto& e : r) rows.back().push_back(parse_poly(R, e));
    }
    return LinearMatrix::from_entries(R, std::move(rows));
  }
  if (spec.sequence) return monomial_family(R, *spec.sequence).phi;
  if (spec.arrangement) {
    std::vector<Poly> forms;
    for (const auto& f : *spec.arrangement) forms.push_back(parse_poly(R, f));
    return arrangement_family(forms).phi;
  }
  if (spec.fat_points) {
    std::vector<FatPoint> fps;
    for (const auto& fp : *spec.fat_points) {
      FatPoint p;
      for (const auto& g : fp.prime) p.prime.push_back(parse_poly(R, g));
      p.multiplicity = fp.multiplicity;
      fps.push_back(std::move(p));
    }
    FatPointResult fr = fat_point_ideal(R, std::move(fps));
    if (!fr.equigenerated)
      throw std::domain_error("hypothesis violation: fat point ideal is not equigenerated");
    if (!fr.syzygies.phi)
      throw std::domain_error("hypothesis violation: fat point ideal is not linearly presented");
    return *fr.syzygies.phi;
  }
  std::vector<Poly> gens;
  for (const auto& g : *spec.generators) gens.push_back(parse_poly(R, g));
  SyzygyResult syz = linear_syzygy_matrix(gens);
  if (!syz.phi)
    throw std::domain_error("hypothesis violation: generators are not linearly presented");
  return *syz.phi;
}

bool AnalysisReport::all_checks_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

AnalysisReport analyze_instance(const InstanceSpec& spec) {
  std::set<std::string> wanted(spec.tasks.begin(), spec.tasks.end());
  auto want = [&](const char* t) {
    return wanted.empty() || wanted.count("all") || wanted.count(t);
  };

  AnalysisReport rep;
  rep.input = spec;
  LinearMatrix phi = instance_matrix(spec);
  rep.n = phi.rows();

  ChaosProfile chaos = chaos_invariant(phi);
  rep.u = chaos.u;
  for (const auto& [t, h] : chaos.heights) rep.heights.emplace_back(t, h);
  for (const auto& lp : chaos.local)
    rep.local.push_back({point_strings(lp.point), lp.u_p, lp.mu,
                         lp.complete_intersection});
  if (chaos.universal_point)
    rep.universal_point = point_strings(*chaos.universal_point);
  rep.checks.push_back({"heights_pattern", "pass",
                        "ht I_t descends 3..3,2..2 with threshold u = " +
                            std::to_string(chaos.u)});

  JacobianDual jd = jacobian_dual(phi);
  rep.dual = matrix_strings(jd.B);
  rep.checks.push_back({"dual_identity", "pass", "(t)*phi = (x y z)*B re-verified"});

  if (want("canonical")) {
    std::optional<CanonicalForm> cf = try_canonicalize(phi, chaos);
    if (cf) {
      JacobianDual jdc = jacobian_dual(cf->phi_c, chaos.u);
      if (jdc.b_prime) {
        rep.dual_sub = matrix_strings(*jdc.b_prime);
        OneGenericResult og = one_generic_test(*jdc.b_prime);
        rep.one_generic = og.one_generic;
        rep.checks.push_back({"subdual_one_generic",
                              og.one_generic ? "pass" : "fail",
                              og.one_generic ? "no generalized zero"
                                             : "generalized zero witness " +
                                                   og.minor_gcd.str()});
        IdealHandle scroll = minors_ideal(*jdc.b_prime, 2);
        int dim = dimension_and_height(scroll).dim;
        bool ok = dim == chaos.u + 2;
        rep.checks.push_back({"subdual_scroll_dimension", ok ? "pass" : "fail",
                              "dim k[t]/I_2(B') = " + std::to_string(dim) +
                                  ", expected " + std::to_string(chaos.u + 2)});
      }
    } else {
      rep.checks.push_back({"subdual_one_generic", "skip",
                            "no rational point of rank u to canonicalize at"});
    }
  }

  std::optional<IdealHandle> fiber;
  bool need_fiber = want("fiber") || want("fiber_type") ||
                    want("birationality") || want("reduction");
  if (need_fiber) {
    fiber = fiber_ideal(phi);
    rep.fiber_generators = poly_strings(fiber->gens());
    HilbertData h = hilbert_series(*fiber);
    rep.fiber_hilbert = hilbert_json(h);
    rep.checks.push_back({"fiber_dimension", h.dim == 3 ? "pass" : "fail",
                          "analytic spread " + std::to_string(h.dim) +
                              ", expected 3"});
  }

  std::optional<IdealHandle> rees;
  if (want("rees") || want("fiber_type")) {
    rees = rees_ideal(phi);
    rep.rees_generators = poly_strings(rees->gens());
    rep.rees_dimension = dimension_and_height(*rees).dim;
    rep.checks.push_back({"rees_dimension",
                          *rep.rees_dimension == 4 ? "pass" : "fail",
                          "dim = " + std::to_string(*rep.rees_dimension)});
  }

  if (want("fiber_type")) {
    FiberTypeResult ft = fiber_type_check(symmetric_ideal(phi), *fiber, *rees);
    rep.fiber_type = ft.fiber_type;
  }

  if (want("birationality")) {
    BirationalityData bd =
        birationality_and_inverse(jd, *fiber, hilbert_burch_generators(phi));
    rep.rank_mod_fiber = bd.rank_mod_fiber;
    rep.checks.push_back({"birational_rank",
                          bd.rank_mod_fiber == 2 ? "pass" : "fail",
                          "rank of B mod fiber ideal = " +
                              std::to_string(bd.rank_mod_fiber)});
    if (bd.inverse_quadrics) {
      rep.inverse_quadrics = poly_strings(*bd.inverse_quadrics);
      rep.inverse_common_factor = bd.common_factor->str();
      rep.checks.push_back({"inverse_quadrics", "pass",
                            "g_k(f) = common * coordinate_k verified"});
    } else {
      rep.checks.push_back({"inverse_quadrics", "skip", "rank below 2"});
    }
  }

  if (want("depth")) {
    DepthZeroResult dz = depth_zero_square_check(
        IdealHandle(phi.ring(), hilbert_burch_generators(phi)));
    rep.depth_zero_square = dz.depth_zero;
    if (dz.witness) rep.depth_witness = dz.witness->str();
    rep.checks.push_back({"depth_square_zero", dz.depth_zero ? "pass" : "fail",
                          dz.depth_zero
                              ? "witness " + *rep.depth_witness
                              : "I^2 saturated in the irrelevant maximal ideal"});
  }

  if (want("reduction")) {
    ReductionReport rr = reduction_number_report(*fiber, spec.seed);
    AnalysisReport::ReductionJson rj;
    rj.analytic_spread = rr.analytic_spread;
    rj.fiber_cm = rr.fiber_cm.cm;
    rj.reduction_number = rr.reduction_number;
    rj.multiplicity = rr.multiplicity.get_str();
    rep.reduction = rj;
    bool match = true;
    for (bool m : rr.function_matches_polynomial) match = match && m;
    rep.checks.push_back({"hilbert_function_polynomial",
                          match ? "pass" : "fail",
                          "fiber Hilbert function vs polynomial at t = 1..5"});
  }

  return rep;
}

namespace {

json checks_json(const std::vector<CheckResult>& checks) {
  json a = json::array();
  for (const auto& c : checks)
    a.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  return a;
}

json opt_str(const std::optional<std::string>& s) {
  return s ? json(*s) : json(nullptr);
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep) {
  json j;
  j["input"] = json::parse(instance_to_json(rep.input));
  j["n"] = rep.n;
  json hs = json::object();
  for (const auto& [t, h] : rep.heights) hs[std::to_string(t)] = h;
  j["heights"] = hs;
  j["u"] = rep.u;
  json loc = json::array();
  for (const auto& lp : rep.local)
    loc.push_back({{"point", lp.point},
                   {"u_p", lp.u_p},
                   {"mu", lp.mu},
                   {"complete_intersection", lp.complete_intersection}});
  j["local"] = loc;
  j["universal_point"] =
      rep.universal_point ? json(*rep.universal_point) : json(nullptr);
  j["B"] = rep.dual;
  j["B_prime"] = rep.dual_sub ? json(*rep.dual_sub) : json(nullptr);
  j["one_generic"] = rep.one_generic ? json(*rep.one_generic) : json(nullptr);
  if (rep.fiber_generators) {
    json f;
    f["generators"] = *rep.fiber_generators;
    const auto& h = *rep.fiber_hilbert;
    f["hilbert"] = {{"numerator", h.numerator},
                    {"dim", h.dim},
                    {"h_polynomial", h.h_polynomial},
                    {"multiplicity", h.multiplicity},
                    {"function_values", h.function_values}};
    j["fiber"] = f;
  } else {
    j["fiber"] = nullptr;
  }
  if (rep.rees_generators)
    j["rees"] = {{"generators", *rep.rees_generators},
                 {"dimension", *rep.rees_dimension}};
  else
    j["rees"] = nullptr;
  j["fiber_type"] = rep.fiber_type ? json(*rep.fiber_type) : json(nullptr);
  if (rep.rank_mod_fiber) {
    json b;
    b["rank_mod_fiber"] = *rep.rank_mod_fiber;
    b["inverse_quadrics"] =
        rep.inverse_quadrics ? json(*rep.inverse_quadrics) : json(nullptr);
    b["common_factor"] = opt_str(rep.inverse_common_factor);
    j["birationality"] = b;
  } else {
    j["birationality"] = nullptr;
  }
  if (rep.depth_zero_square)
    j["depth_zero_square"] = {{"depth_zero", *rep.depth_zero_square},
                              {"witness", opt_str(rep.depth_witness)}};
  else
    j["depth_zero_square"] = nullptr;
  if (rep.reduction) {
    const auto& r = *rep.reduction;
    j["reduction"] = {{"analytic_spread", r.analytic_spread},
                      {"fiber_cm", r.fiber_cm},
                      {"reduction_number", r.reduction_number
                                               ? json(*r.reduction_number)
                                               : json(nullptr)},
                      {"multiplicity", r.multiplicity}};
  } else {
    j["reduction"] = nullptr;
  }
  j["checks"] = checks_json(rep.checks);
  return j.dump(2);
}

AnalysisReport parse_report(const std::string& json_text) {
  json j = json::parse(json_text);
  AnalysisReport rep;
  rep.input = parse_instance(j["input"].dump());
  rep.n = j["n"].get<int>();
  for (const auto& [k, v] : j["heights"].items())
    rep.heights.emplace_back(std::stoi(k), v.get<int>());
  rep.u = j["u"].get<int>();
  for (const auto& l : j["local"]) {
    AnalysisReport::Local lp;
    lp.point = l["point"].get<std::vector<std::string>>();
    lp.u_p = l["u_p"].get<int>();
    lp.mu = l["mu"].get<int>();
    lp.complete_intersection = l["complete_intersection"].get<bool>();
    rep.local.push_back(std::move(lp));
  }
  if (!j["universal_point"].is_null())
    rep.universal_point = j["universal_point"].get<std::vector<std::string>>();
  rep.dual = j["B"].get<std::vector<std::vector<std::string>>>();
  if (!j["B_prime"].is_null())
    rep.dual_sub = j["B_prime"].get<std::vector<std::vector<std::string>>>();
  if (!j["one_generic"].is_null()) rep.one_generic = j["one_generic"].get<bool>();
  if (!j["fiber"].is_null()) {
    rep.fiber_generators =
        j["fiber"]["generators"].get<std::vector<std::string>>();
    const json& h = j["fiber"]["hilbert"];
    AnalysisReport::HilbertJson hj;
    hj.numerator = h["numerator"].get<std::vector<std::string>>();
    hj.dim = h["dim"].get<int>();
    hj.h_polynomial = h["h_polynomial"].get<std::vector<std::string>>();
    hj.multiplicity = h["multiplicity"].get<std::string>();
    hj.function_values = h["function_values"].get<std::vector<std::string>>();
    rep.fiber_hilbert = hj;
  }
  if (!j["rees"].is_null()) {
    rep.rees_generators = j["rees"]["generators"].get<std::vector<std::string>>();
    rep.rees_dimension = j["rees"]["dimension"].get<int>();
  }
  if (!j["fiber_type"].is_null()) rep.fiber_type = j["fiber_type"].get<bool>();
  if (!j["birationality"].is_null()) {
    const json& b = j["birationality"];
    rep.rank_mod_fiber = b["rank_mod_fiber"].get<int>();
    if (!b["inverse_quadrics"].is_null())
      rep.inverse_quadrics =
          b["inverse_quadrics"].get<std::vector<std::string>>();
    if (!b["common_factor"].is_null())
      rep.inverse_common_factor = b["common_factor"].get<std::string>();
  }
  if (!j["depth_zero_square"].is_null()) {
    rep.depth_zero_square = j["depth_zero_square"]["depth_zero"].get<bool>();
    if (!j["depth_zero_square"]["witness"].is_null())
      rep.depth_witness = j["depth_zero_square"]["witness"].get<std::string>();
  }
  if (!j["reduction"].is_null()) {
    const json& r = j["reduction"];
    AnalysisReport::ReductionJson rj;
    rj.analytic_spread = r["analytic_spread"].get<int>();
    rj.fiber_cm = r["fiber_cm"].get<bool>();
    if (!r["reduction_number"].is_null())
      rj.reduction_number = r["reduction_number"].get<int>();
    rj.multiplicity = r["multiplicity"].get<std::string>();
    rep.reduction = rj;
  }
  for (const auto& c : j["checks"])
    rep.checks.push_back({c["name"].get<std::string>(),
                          c["status"].get<std::string>(),
                          c["detail"].get<std::string>()});
  return rep;
}

std::string report_summary(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "n = " << rep.n << ", u = " << rep.u << "\n";
  os << "heights:";
  for (const auto& [t, h] : rep.heights) os << " I_" << t << "=" << h;
  os << "\n";
  if (rep.universal_point) {
    os << "universal point (";
    for (size_t i = 0; i < rep.universal_point->size(); ++i)
      os << (i ? " : " : "") << (*rep.universal_point)[i];
    os << ")\n";
  }
  if (rep.one_generic)
    os << "B' 1-generic: " << (*rep.one_generic ? "yes" : "no") << "\n";
  if (rep.fiber_generators)
    os << "fiber: " << rep.fiber_generators->size()
       << " generators, multiplicity " << rep.fiber_hilbert->multiplicity
       << "\n";
  if (rep.rees_generators)
    os << "rees: " << rep.rees_generators->size() << " generators, dim "
       << *rep.rees_dimension << "\n";
  if (rep.fiber_type)
    os << "fiber type: " << (*rep.fiber_type ? "yes" : "no") << "\n";
  if (rep.reduction) {
    os << "fiber CM: " << (rep.reduction->fiber_cm ? "yes" : "no");
    if (rep.reduction->reduction_number)
      os << ", reduction number " << *rep.reduction->reduction_number;
    os << "\n";
  }
  int pass = 0, fail = 0, skip = 0;
  for (const auto& c : rep.checks) {
    if (c.status == "pass") ++pass;
    else if (c.status == "fail") ++fail;
    else ++skip;
  }
  os << "checks: " << pass << " pass, " << fail << " fail, " << skip
     << " skip\n";
  for (const auto& c : rep.checks)
    if (c.status != "pass") os << "  [" << c.status << "] " << c.name << ": "
                               << c.detail << "\n";
  return os.str();
}

}  // namespace burch
