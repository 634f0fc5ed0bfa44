#include "cbn/report.hpp"

#include <set>
#include <sstream>

#include "cbn/bool_matrix.hpp"
#include "json.hpp"

namespace cbn {

using Json = nlohmann::ordered_json;

AnalysisReport analyze_network(const BooleanNetwork& net,
                               const std::string& source,
                               const AnalyzeOptions& options) {
  AnalysisReport r;
  r.source = source;
  r.node_count = net.node_count;
  r.op_kind = net.op_kind;

  const BoolMatrix a = dependency_graph(net);
  r.scc = scc_decompose(a);
  r.poset = condensation_poset(r.scc, a);
  r.strongly_connected = r.scc.size() == 1;

  r.height_bound_general =
      height_upper_bound(net.node_count, r.scc.graph_loop_number, false);
  if (r.strongly_connected && r.scc.graph_loop_number >= 1) {
    r.height_bound_strongly_connected =
        height_upper_bound(net.node_count, r.scc.graph_loop_number, true);
  }

  try {
    r.antichains = maximal_antichains(r.poset, options.antichain_cap);
    r.structures = component_structures(r.scc);
    r.disjoint_structure = disjoint_union_structure(r.structures);
    r.lower = lower_bound(r.poset, r.structures, options.antichain_cap);
    r.fixed_points = fixed_point_count(r.poset, options.antichain_cap);
    r.formulas_ok = true;
  } catch (const TrivialComponentError& e) {
    r.diagnostic = e.what();
  } catch (const CapError& e) {
    r.diagnostic = e.what();
  }

  if (r.formulas_ok) {
    try {
      r.upper = upper_bound(r.poset, r.structures, options.upper_bound_cap);
      r.upper_ok = true;
    } catch (const CapError& e) {
      r.diagnostic = e.what();
    }
  }
  return r;
}

namespace {

std::string vertices_string(const std::vector<int>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ", ";
    os << vs[i] + 1;
  }
  os << '}';
  return os.str();
}

Json poly_json(const CyclePolynomial& p) {
  Json j = Json::object();
  for (const auto& [len, count] : p.terms()) {
    j[len.str()] = count.str();
  }
  return j;
}

}  // namespace

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "network: " << r.source << '\n';
  os << "nodes: " << r.node_count << "  operator: " << op_kind_name(r.op_kind)
     << '\n';
  os << "strongly connected: " << (r.strongly_connected ? "yes" : "no")
     << '\n';
  os << "components (topological order):\n";
  for (std::size_t i = 0; i < r.scc.size(); ++i) {
    os << "  G" << i + 1 << ": vertices " << vertices_string(r.scc.components[i])
       << "  loop number " << r.scc.loop_numbers[i] << '\n';
  }
  os << "graph loop number: " << r.scc.graph_loop_number << '\n';
  os << "poset cover edges:";
  if (r.poset.covers.empty()) os << " (none)";
  for (const auto& [from, to] : r.poset.covers) {
    os << " G" << from + 1 << "->G" << to + 1;
  }
  os << '\n';
  if (r.formulas_ok) {
    os << "maximal antichains:";
    for (const auto& antichain : r.antichains) {
      os << " {";
      for (std::size_t i = 0; i < antichain.size(); ++i) {
        if (i) os << ",";
        os << "G" << antichain[i] + 1;
      }
      os << "}";
    }
    os << '\n';
    os << "component cycle structures:\n";
    for (std::size_t i = 0; i < r.structures.size(); ++i) {
      os << "  G" << i + 1 << ": " << r.structures[i].to_string() << '\n';
    }
    if (r.strongly_connected) {
      os << "exact cycle structure (strongly connected): "
         << r.structures[0].to_string() << '\n';
    }
    os << "disjoint-union structure: " << r.disjoint_structure.to_string()
       << '\n';
    os << "lower bound (sharp): " << r.lower.to_string() << '\n';
    if (r.upper_ok) {
      os << "upper bound: " << r.upper.to_string() << '\n';
    } else {
      os << "upper bound: skipped (" << r.diagnostic << ")\n";
    }
    os << "fixed points (exact): " << r.fixed_points << '\n';
  } else {
    os << "formula sections skipped: " << r.diagnostic << '\n';
  }
  os << "height bound (general): " << r.height_bound_general << '\n';
  if (r.height_bound_strongly_connected) {
    os << "height bound (strongly connected): "
       << *r.height_bound_strongly_connected << '\n';
  }
  return os.str();
}

std::string report_json(const AnalysisReport& r) {
  Json j;
  j["source"] = r.source;
  j["nodes"] = r.node_count;
  j["operator"] = op_kind_name(r.op_kind);
  j["strongly_connected"] = r.strongly_connected;
  Json comps = Json::array();
  for (std::size_t i = 0; i < r.scc.size(); ++i) {
    Json c;
    Json verts = Json::array();
    for (int v : r.scc.components[i]) verts.push_back(v + 1);
    c["vertices"] = verts;
    c["loop_number"] = r.scc.loop_numbers[i];
    comps.push_back(c);
  }
  j["components"] = comps;
  j["graph_loop_number"] = r.scc.graph_loop_number.str();
  Json covers = Json::array();
  for (const auto& [from, to] : r.poset.covers) {
    covers.push_back(Json::array({from + 1, to + 1}));
  }
  j["poset_cover_edges"] = covers;
  if (r.formulas_ok) {
    Json antichains = Json::array();
    for (const auto& antichain : r.antichains) {
      Json one = Json::array();
      for (int c : antichain) one.push_back(c + 1);
      antichains.push_back(one);
    }
    j["maximal_antichains"] = antichains;
    Json structures = Json::array();
    for (const auto& s : r.structures) structures.push_back(poly_json(s));
    j["component_structures"] = structures;
    j["disjoint_union_structure"] = poly_json(r.disjoint_structure);
    j["lower_bound"] = poly_json(r.lower);
    j["upper_bound"] = r.upper_ok ? poly_json(r.upper) : Json();
    j["fixed_point_count"] = r.fixed_points.str();
    j["diagnostic"] = r.upper_ok ? Json() : Json(r.diagnostic);
  } else {
    j["maximal_antichains"] = Json();
    j["component_structures"] = Json();
    j["disjoint_union_structure"] = Json();
    j["lower_bound"] = Json();
    j["upper_bound"] = Json();
    j["fixed_point_count"] = Json();
    j["diagnostic"] = r.diagnostic;
  }
  j["height_bound_general"] = r.height_bound_general.str();
  j["height_bound_strongly_connected"] =
      r.height_bound_strongly_connected
          ? Json(r.height_bound_strongly_connected->str())
          : Json();
  return j.dump(2) + "\n";
}

std::string summary_text(const PhaseSpaceSummary& s) {
  std::ostringstream os;
  os << "cycle structure: " << s.cycle_structure.to_string() << '\n';
  os << "limit cycles: " << s.component_count << '\n';
  os << "fixed points: " << s.fixed_point_count << '\n';
  os << "height: " << s.height << '\n';
  os << "period: " << s.period << '\n';
  return os.str();
}

std::string summary_json(const BooleanNetwork& net, const std::string& source,
                         const PhaseSpaceSummary& s) {
  Json j;
  j["source"] = source;
  j["nodes"] = net.node_count;
  j["operator"] = op_kind_name(net.op_kind);
  j["cycle_structure"] = poly_json(s.cycle_structure);
  j["limit_cycles"] = s.component_count.str();
  j["fixed_points"] = s.fixed_point_count.str();
  j["height"] = s.height;
  j["period"] = s.period.str();
  return j.dump(2) + "\n";
}

namespace {

void add(std::vector<CheckOutcome>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
  out.push_back({name, pass ? "pass" : "fail", detail});
}

void skip(std::vector<CheckOutcome>& out, const std::string& name,
          const std::string& why) {
  out.push_back({name, "skipped", why});
}

}  // namespace

std::vector<CheckOutcome> run_checks(
    const BooleanNetwork& net, const AnalysisReport& report,
    const PhaseSpaceSummary& summary,
    const std::optional<CyclePolynomial>& expected_structure) {
  std::vector<CheckOutcome> out;
  const Int& loop = report.scc.graph_loop_number;
  const CyclePolynomial& oracle = summary.cycle_structure;

  if (report.formulas_ok) {
    add(out, "lower_bound <= oracle", leq_componentwise(report.lower, oracle),
        report.lower.to_string() + " vs " + oracle.to_string());
    add(out, "fixed_points exact",
        report.fixed_points == summary.fixed_point_count,
        report.fixed_points.str() + " vs " + summary.fixed_point_count.str());
    add(out, "oracle <= disjoint_union",
        leq_componentwise(oracle, report.disjoint_structure),
        oracle.to_string() + " vs " + report.disjoint_structure.to_string());
  } else {
    skip(out, "lower_bound <= oracle", report.diagnostic);
    skip(out, "fixed_points exact", report.diagnostic);
    skip(out, "oracle <= disjoint_union", report.diagnostic);
  }
  if (report.upper_ok) {
    add(out, "oracle <= upper_bound", leq_componentwise(oracle, report.upper),
        oracle.to_string() + " vs " + report.upper.to_string());
  } else {
    skip(out, "oracle <= upper_bound",
         report.formulas_ok ? report.diagnostic : std::string("no formulas"));
  }

  bool lengths_divide = true;
  for (const auto& [len, count] : oracle.terms()) {
    if (loop == 0 || loop % len != 0) lengths_divide = false;
  }
  add(out, "cycle lengths divide loop number", lengths_divide,
      "loop number " + loop.str());
  add(out, "period divides loop number", loop != 0 && loop % summary.period == 0,
      summary.period.str() + " | " + loop.str());

  const PowerTrajectory traj = power_trajectory(dependency_graph(net));
  add(out, "matrix transient == height", traj.transient == summary.height,
      std::to_string(traj.transient) + " vs " + std::to_string(summary.height));
  add(out, "matrix period == period", Int(traj.period) == summary.period,
      std::to_string(traj.period) + " vs " + summary.period.str());

  add(out, "height <= general bound",
      Int(summary.height) <= report.height_bound_general,
      std::to_string(summary.height) + " <= " +
          report.height_bound_general.str());
  if (report.height_bound_strongly_connected) {
    add(out, "height <= strongly connected bound",
        Int(summary.height) <= *report.height_bound_strongly_connected,
        std::to_string(summary.height) + " <= " +
            report.height_bound_strongly_connected->str());
  } else {
    skip(out, "height <= strongly connected bound", "not strongly connected");
  }

  if (net.op_kind == OpKind::Disjunctive) {
    const BooleanNetwork conj = to_conjunctive(net);
    SimulationOptions opt;
    opt.cap = net.node_count;  // already enumerated once at this size
    opt.collect_cycles = true;
    const PhaseSpaceSummary conj_summary = enumerate_phase_space(conj, opt);
    bool same = conj_summary.cycle_structure == oracle &&
                conj_summary.height == summary.height &&
                conj_summary.period == summary.period;
    // State-level bijection: complementing every state of a limit cycle of
    // the disjunctive network must give a limit cycle of the conjunctive one.
    const PhaseSpaceSummary dis_summary = enumerate_phase_space(net, opt);
    std::set<std::vector<PackedState>> conj_cycles;
    for (const auto& cycle : conj_summary.cycles) {
      conj_cycles.insert(canonical_cycle(cycle));
    }
    const PackedState all = static_cast<PackedState>(
        (std::uint64_t(1) << net.node_count) - 1);
    for (const auto& cycle : dis_summary.cycles) {
      std::vector<PackedState> mapped;
      mapped.reserve(cycle.size());
      for (PackedState s : cycle) mapped.push_back(s ^ all);
      if (!conj_cycles.count(canonical_cycle(mapped))) same = false;
    }
    add(out, "duality with conjunctive image", same);
  } else {
    skip(out, "duality with conjunctive image", "input is conjunctive");
  }

  if (expected_structure) {
    add(out, "expected cycle structure", *expected_structure == oracle,
        expected_structure->to_string() + " vs " + oracle.to_string());
  }
  return out;
}

bool all_checks_pass(const std::vector<CheckOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (o.verdict == "fail") return false;
  }
  return true;
}

std::string checks_text(const std::vector<CheckOutcome>& outcomes) {
  std::size_t width = 0;
  for (const auto& o : outcomes) width = std::max(width, o.name.size());
  std::ostringstream os;
  for (const auto& o : outcomes) {
    os << "  " << o.name << std::string(width - o.name.size() + 2, ' ')
       << o.verdict;
    if (!o.detail.empty() && o.verdict != "pass") os << "  (" << o.detail << ")";
    os << '\n';
  }
  return os.str();
}

std::string checks_json(const std::vector<CheckOutcome>& outcomes) {
  Json arr = Json::array();
  for (const auto& o : outcomes) {
    Json j;
    j["name"] = o.name;
    j["verdict"] = o.verdict;
    j["detail"] = o.detail;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace cbn
