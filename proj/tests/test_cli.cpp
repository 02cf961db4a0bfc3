#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "burch/analysis.hpp"

using namespace burch;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(bool(out));
  out << text;
}

InstanceSpec sequence_spec(const std::string& letters) {
  InstanceSpec spec;
  spec.sequence = letters;
  return spec;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(BURCH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("instance parsing") {
  InstanceSpec s = parse_instance(
      R"({"ring":{"field":"rational"},
          "input":{"kind":"sequence","letters":"xyy"},
          "tasks":["fiber"],"seed":7})");
  CHECK(s.field.is_rational());
  REQUIRE(s.sequence);
  CHECK(*s.sequence == "xyy");
  CHECK(s.tasks == std::vector<std::string>{"fiber"});
  CHECK(s.seed == 7);

  InstanceSpec p = parse_instance(
      R"({"ring":{"field":{"prime":7}},
          "input":{"kind":"matrix","rows":[["x","0"],["y","x"],["0","y"]]}})");
  CHECK(p.field.characteristic == 7);
  REQUIRE(p.matrix_rows);
  CHECK(p.matrix_rows->size() == 3);

  CHECK_THROWS_AS(parse_instance("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(R"({"tasks":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(R"({"input":{"kind":"nope"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(R"({"input":{"kind":"sequence"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_instance(R"({"ring":{"field":"real"},
                         "input":{"kind":"sequence","letters":"xy"}})"),
      std::invalid_argument);
}

TEST_CASE("instance serialization round-trips") {
  InstanceSpec s = sequence_spec("xyxy");
  s.tasks = {"fiber", "reduction"};
  s.seed = 3;
  std::string j = instance_to_json(s);
  InstanceSpec back = parse_instance(j);
  CHECK(instance_to_json(back) == j);
  CHECK(back.sequence == s.sequence);
  CHECK(back.tasks == s.tasks);
  CHECK(back.seed == s.seed);
}

TEST_CASE("analysis of the worked n = 4 example") {
  AnalysisReport rep = analyze_instance(sequence_spec("xyy"));
  CHECK(rep.n == 4);
  CHECK(rep.u == 1);
  CHECK(rep.heights ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}});
  REQUIRE(rep.fiber_generators);
  REQUIRE(rep.fiber_generators->size() == 1);
  CHECK((*rep.fiber_generators)[0] == "t3^2 - t2*t4");
  REQUIRE(rep.fiber_type);
  CHECK(*rep.fiber_type);
  REQUIRE(rep.rank_mod_fiber);
  CHECK(*rep.rank_mod_fiber == 2);
  REQUIRE(rep.reduction);
  CHECK(rep.reduction->fiber_cm);
  CHECK(rep.reduction->reduction_number == 1);
  CHECK(rep.all_checks_pass());
}

TEST_CASE("matrix input agrees with sequence input") {
  AnalysisReport from_seq = analyze_instance(sequence_spec("xy"));
  InstanceSpec m;
  m.matrix_rows = {{"z", "0"}, {"-x", "z"}, {"0", "-y"}};
  AnalysisReport from_mat = analyze_instance(m);
  CHECK(from_mat.n == from_seq.n);
  CHECK(from_mat.u == from_seq.u);
  CHECK(from_mat.heights == from_seq.heights);
  REQUIRE(from_mat.fiber_hilbert);
  REQUIRE(from_seq.fiber_hilbert);
  CHECK(from_mat.fiber_hilbert->multiplicity ==
        from_seq.fiber_hilbert->multiplicity);
  CHECK(from_mat.fiber_type == from_seq.fiber_type);
  CHECK(from_mat.rank_mod_fiber == from_seq.rank_mod_fiber);
}

TEST_CASE("conjugation leaves the invariant fields alone") {
  auto R = PolyRing::make({"x", "y", "z"});
  LinearMatrix phi = monomial_family(R, "xyy").phi;
  AnalysisReport base = analyze_instance(sequence_spec("xyy"));
  for (unsigned long seed : {5ul, 17ul}) {
    LinearMatrix phi_g =
        conjugate(phi, ConjugationAction::random(R, phi.rows(), phi.cols(), seed));
    InstanceSpec m;
    m.matrix_rows = std::vector<std::vector<std::string>>();
    for (int i = 0; i < phi_g.rows(); ++i) {
      m.matrix_rows->emplace_back();
      for (int j = 0; j < phi_g.cols(); ++j)
        m.matrix_rows->back().push_back(phi_g.at(i, j).str());
    }
    AnalysisReport rep = analyze_instance(m);
    CHECK(rep.n == base.n);
    CHECK(rep.u == base.u);
    CHECK(rep.heights == base.heights);
    CHECK(rep.one_generic == base.one_generic);
    REQUIRE(rep.fiber_hilbert);
    CHECK(rep.fiber_hilbert->numerator == base.fiber_hilbert->numerator);
    CHECK(rep.fiber_type == base.fiber_type);
    CHECK(rep.rank_mod_fiber == base.rank_mod_fiber);
    REQUIRE(rep.reduction);
    CHECK(rep.reduction->fiber_cm == base.reduction->fiber_cm);
    CHECK(rep.reduction->reduction_number == base.reduction->reduction_number);
    CHECK(rep.all_checks_pass());
  }
}

TEST_CASE("report serialization is a fixed point") {
  for (const char* letters : {"xyy", "xyxy"}) {
    AnalysisReport rep = analyze_instance(sequence_spec(letters));
    std::string j1 = report_to_json(rep);
    std::string j2 = report_to_json(parse_report(j1));
    CHECK(j1 == j2);
  }
}

TEST_CASE("task filtering limits the report") {
  InstanceSpec s = sequence_spec("xyy");
  s.tasks = {"chaos"};
  AnalysisReport rep = analyze_instance(s);
  CHECK(rep.u == 1);
  CHECK_FALSE(rep.fiber_generators);
  CHECK_FALSE(rep.rees_generators);
  CHECK_FALSE(rep.reduction);
}

TEST_CASE("cli exit codes") {
  const std::string dir = "/tmp/burch_cli_test";
  std::system(("mkdir -p " + dir).c_str());

  spit(dir + "/ok.json",
       R"({"input":{"kind":"sequence","letters":"xyy"}})");
  CHECK(run_cli("analyze " + dir + "/ok.json --out " + dir + "/ok_report.json") == 0);

  AnalysisReport rep = parse_report(slurp(dir + "/ok_report.json"));
  CHECK(rep.u == 1);
  CHECK(rep.all_checks_pass());

  spit(dir + "/bad.json", "{");
  CHECK(run_cli("analyze " + dir + "/bad.json") == 2);

  spit(dir + "/typo.json",
       R"({"input":{"kind":"generators","polys":["x+*y"]}})");
  CHECK(run_cli("analyze " + dir + "/typo.json") == 2);

  spit(dir + "/hyp.json",
       R"({"input":{"kind":"generators","polys":["x^2","y*z","z^2"]}})");
  CHECK(run_cli("analyze " + dir + "/hyp.json") == 3);

  CHECK(run_cli("analyze " + dir + "/missing.json") == 2);
}

TEST_CASE("cli family generation feeds back into analyze") {
  const std::string dir = "/tmp/burch_cli_test";
  std::system(("mkdir -p " + dir).c_str());
  CHECK(run_cli("family sequence xyy --out " + dir + "/fam.json") == 0);
  InstanceSpec s = parse_instance(slurp(dir + "/fam.json"));
  REQUIRE(s.sequence);
  CHECK(*s.sequence == "xyy");
  CHECK(run_cli("analyze " + dir + "/fam.json") == 0);

  CHECK(run_cli("family arrangement x y x+y z --out " + dir + "/arr.json") == 0);
  InstanceSpec a = parse_instance(slurp(dir + "/arr.json"));
  REQUIRE(a.arrangement);
  CHECK(a.arrangement->size() == 4);

  CHECK(run_cli("family sequence xz") == 2);
}

TEST_CASE("repeated analysis is byte identical") {
  const std::string dir = "/tmp/burch_cli_test";
  std::system(("mkdir -p " + dir).c_str());
  spit(dir + "/det.json",
       R"({"input":{"kind":"sequence","letters":"xyxy"},"seed":11})");
  CHECK(run_cli("analyze " + dir + "/det.json --out " + dir + "/r1.json") == 0);
  CHECK(run_cli("analyze " + dir + "/det.json --out " + dir + "/r2.json") == 0);
  CHECK(slurp(dir + "/r1.json") == slurp(dir + "/r2.json"));
}
