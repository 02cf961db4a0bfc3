// Batch front end: analyze instance files, generate family instances and
// run the verification corpus.  Exit codes: 0 ok, 1 a check failed,
// 2 malformed input, 3 hypothesis violation, 4 internal error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "burch/analysis.hpp"
#include "burch/verify.hpp"

namespace {

using namespace burch;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text << "\n";
}

int run_analyze(const std::string& file, const std::string& out_path,
                const std::string& tasks_csv, unsigned long seed,
                bool seed_set) {
  InstanceSpec spec = load_instance(file);
  if (!tasks_csv.empty()) spec.tasks = split_csv(tasks_csv);
  if (seed_set) spec.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport report = analyze_instance(spec);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  write_or_print(report_to_json(report), out_path);
  std::cerr << report_summary(report);
  std::cerr << "elapsed " << ms << " ms\n";
  return report.all_checks_pass() ? 0 : 1;
}

int run_verify(const std::string& level_name) {
  VerifyLevel level =
      level_name == "full" ? VerifyLevel::full : VerifyLevel::fast;
  auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  for (const auto& r : run_verification(level)) {
    const char* tag = r.skipped ? "skip" : (r.passed ? "pass" : "FAIL");
    std::cout << tag << "  " << r.number << ". " << r.name << " (" << r.detail
              << ")\n";
    all = all && r.passed;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed " << ms << " ms\n";
  return all ? 0 : 1;
}

InstanceSpec::FatPointInput parse_fat_point(const std::string& arg) {
  // "x,y:2" = point cut out by x and y, multiplicity 2
  InstanceSpec::FatPointInput fp;
  auto colon = arg.rfind(':');
  std::string forms = arg;
  fp.multiplicity = 1;
  if (colon != std::string::npos) {
    forms = arg.substr(0, colon);
    try {
      size_t used = 0;
      fp.multiplicity = std::stoi(arg.substr(colon + 1), &used);
      if (used != arg.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("fat point " + arg +
                                  ": multiplicity must be an integer");
    }
  }
  fp.prime = split_csv(forms);
  if (fp.prime.size() != 2)
    throw std::invalid_argument("fat point " + arg +
                                ": expected two comma-separated forms");
  return fp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of linearly presented height-2 ideals in k[x,y,z]"};
  app.require_subcommand(1);

  std::string file, out_path, tasks_csv, level = "fast";
  unsigned long seed = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze an instance file");
  analyze->add_option("file", file, "instance JSON file")->required();
  analyze->add_option("--out", out_path, "report JSON path (default stdout)");
  analyze->add_option("--tasks", tasks_csv, "comma-separated task list");
  CLI::Option* seed_opt =
      analyze->add_option("--seed", seed, "seed for randomized subroutines");

  CLI::App* verify =
      app.add_subcommand("verify-suite", "run the verification corpus");
  verify->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  CLI::App* family =
      app.add_subcommand("family", "generate an instance file for a family");
  family->require_subcommand(1);
  std::string letters;
  std::vector<std::string> forms, points;
  CLI::App* fseq = family->add_subcommand("sequence", "basic entry sequence");
  fseq->add_option("letters", letters, "word over {x, y}, e.g. xyy")
      ->required();
  fseq->add_option("--out", out_path, "instance path (default stdout)");
  CLI::App* farr = family->add_subcommand("arrangement", "line arrangement");
  farr->add_option("forms", forms, "linear forms, e.g. x y x+y z")->required();
  farr->add_option("--out", out_path, "instance path (default stdout)");
  CLI::App* ffat = family->add_subcommand("fatpoints", "fat point scheme");
  ffat->add_option("points", points, "points as form,form:mult, e.g. x,y:2")
      ->required();
  ffat->add_option("--out", out_path, "instance path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return run_analyze(file, out_path, tasks_csv, seed, seed_opt->count() > 0);
    if (verify->parsed()) return run_verify(level);
    InstanceSpec spec;
    if (fseq->parsed()) spec.sequence = letters;
    if (farr->parsed()) spec.arrangement = forms;
    if (ffat->parsed()) {
      std::vector<InstanceSpec::FatPointInput> fps;
      for (const auto& p : points) fps.push_back(parse_fat_point(p));
      spec.fat_points = std::move(fps);
    }
    // fail fast on inputs that do not define a valid instance
    instance_matrix(spec);
    write_or_print(instance_to_json(spec), out_path);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
