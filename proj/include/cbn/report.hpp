#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbn/cycle_formulas.hpp"
#include "cbn/cycle_poly.hpp"
#include "cbn/graph.hpp"
#include "cbn/network.hpp"
#include "cbn/oracle.hpp"

namespace cbn {

struct AnalyzeOptions {
  std::size_t antichain_cap = 20;
  std::size_t upper_bound_cap = 12;
};

// Topology-only analysis. Never enumerates states. When the decomposition
// contains a trivial component (or a cap is hit), the structural sections
// are still filled and the formula sections carry a diagnostic instead.
struct AnalysisReport {
  std::string source;
  std::size_t node_count = 0;
  OpKind op_kind = OpKind::Conjunctive;

  SccDecomposition scc;
  CondensationPoset poset;
  bool strongly_connected = false;

  std::vector<std::vector<int>> antichains;

  // Formula sections; `formulas_ok` false means `diagnostic` explains why
  // the per-component structures, bounds and fixed-point count are absent.
  bool formulas_ok = false;
  std::string diagnostic;
  std::vector<CyclePolynomial> structures;
  CyclePolynomial disjoint_structure;
  CyclePolynomial lower;
  bool upper_ok = false;
  CyclePolynomial upper;
  Int fixed_points = 0;

  Int height_bound_general = 0;
  std::optional<Int> height_bound_strongly_connected;
};

AnalysisReport analyze_network(const BooleanNetwork& net,
                               const std::string& source,
                               const AnalyzeOptions& options = {});

std::string report_text(const AnalysisReport& report);
std::string report_json(const AnalysisReport& report);

std::string summary_text(const PhaseSpaceSummary& summary);
std::string summary_json(const BooleanNetwork& net, const std::string& source,
                         const PhaseSpaceSummary& summary);

// One consistency check of the formula layer against the oracle.
struct CheckOutcome {
  std::string name;
  std::string verdict;  // "pass", "fail" or "skipped"
  std::string detail;
};

// Runs the full invariant suite: bound sandwich, exact fixed points, cycle
// lengths dividing the loop number, period dividing the loop number,
// matrix transient/period against oracle height/period, height bounds and
// (for disjunctive inputs) duality. `expected_structure`, when given, is
// also compared against the oracle's cycle structure.
std::vector<CheckOutcome> run_checks(
    const BooleanNetwork& net, const AnalysisReport& report,
    const PhaseSpaceSummary& summary,
    const std::optional<CyclePolynomial>& expected_structure = std::nullopt);

bool all_checks_pass(const std::vector<CheckOutcome>& outcomes);
std::string checks_text(const std::vector<CheckOutcome>& outcomes);
std::string checks_json(const std::vector<CheckOutcome>& outcomes);

}  // namespace cbn
