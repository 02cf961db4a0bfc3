#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burch/families.hpp"

namespace burch {

/// One problem instance: a field, exactly one input variant, a task list
/// (empty = run everything) and a seed for the randomized subroutines.
struct InstanceSpec {
  FieldSpec field;
  std::optional<std::vector<std::vector<std::string>>> matrix_rows;
  std::optional<std::string> sequence;
  std::optional<std::vector<std::string>> arrangement;
  struct FatPointInput {
    std::vector<std::string> prime;
    int multiplicity = 1;
  };
  std::optional<std::vector<FatPointInput>> fat_points;
  std::optional<std::vector<std::string>> generators;
  std::vector<std::string> tasks;
  unsigned long seed = 0;
};

/// Parses the instance JSON; throws std::invalid_argument on any schema
/// violation, with a message naming the offending key.
InstanceSpec parse_instance(const std::string& json_text);
InstanceSpec load_instance(const std::string& path);
std::string instance_to_json(const InstanceSpec& spec);

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail" or "skip"
  std::string detail;
};

/// Full analysis output.  String fields hold polynomials in the text
/// grammar of parse_poly; serialization to JSON is key-order stable and
/// round-trips through parse_report.
struct AnalysisReport {
  InstanceSpec input;
  int n = 0;
  std::vector<std::pair<int, int>> heights;  // t -> ht I_t(phi)
  int u = 0;
  struct Local {
    std::vector<std::string> point;
    int u_p = 0;
    int mu = 0;
    bool complete_intersection = false;
  };
  std::vector<Local> local;
  std::optional<std::vector<std::string>> universal_point;
  std::vector<std::vector<std::string>> dual;  // B, row major
  std::optional<std::vector<std::vector<std::string>>> dual_sub;  // B'
  std::optional<bool> one_generic;
  struct HilbertJson {
    std::vector<std::string> numerator;
    int dim = 0;
    std::vector<std::string> h_polynomial;
    std::string multiplicity;
    std::vector<std::string> function_values;
  };
  std::optional<std::vector<std::string>> fiber_generators;
  std::optional<HilbertJson> fiber_hilbert;
  std::optional<std::vector<std::string>> rees_generators;
  std::optional<int> rees_dimension;
  std::optional<bool> fiber_type;
  std::optional<int> rank_mod_fiber;
  std::optional<std::vector<std::string>> inverse_quadrics;
  std::optional<std::string> inverse_common_factor;
  std::optional<bool> depth_zero_square;
  std::optional<std::string> depth_witness;
  struct ReductionJson {
    int analytic_spread = 0;
    bool fiber_cm = false;
    std::optional<int> reduction_number;
    std::string multiplicity;
  };
  std::optional<ReductionJson> reduction;
  std::vector<CheckResult> checks;

  bool all_checks_pass() const;
};

/// Runs the requested tasks on the instance.  Throws std::invalid_argument
/// for malformed input, std::domain_error when the height hypotheses fail
/// and std::logic_error on internal cross-check failures.
AnalysisReport analyze_instance(const InstanceSpec& spec);

std::string report_to_json(const AnalysisReport& report);
AnalysisReport parse_report(const std::string& json_text);
/// Human-readable digest of the report.
std::string report_summary(const AnalysisReport& report);

/// The presentation matrix an instance describes, shared by analyze and the
/// fixture corpus.
LinearMatrix instance_matrix(const InstanceSpec& spec);

}  // namespace burch
