#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbn/cycle_formulas.hpp"
#include "cbn/network.hpp"
#include "cbn/oracle.hpp"
#include "cbn/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

cbn::BooleanNetwork load_network(const std::string& path) {
  std::vector<std::string> warnings;
  cbn::BooleanNetwork net = path == "-"
                                ? cbn::parse_network(std::cin, &warnings)
                                : cbn::parse_network_file(path, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return net;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write to " + out_path);
  out << text;
}

// "4*C1 + 1*C2" (the analyzer/simulator textual polynomial form).
cbn::CyclePolynomial parse_poly(const std::string& text) {
  cbn::CyclePolynomial poly;
  std::string stripped;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
  }
  if (stripped == "0" || stripped.empty()) return poly;
  std::size_t pos = 0;
  while (pos < stripped.size()) {
    std::size_t next = stripped.find('+', pos);
    if (next == std::string::npos) next = stripped.size();
    const std::string term = stripped.substr(pos, next - pos);
    const std::size_t star = term.find("*C");
    if (star == std::string::npos) {
      throw cbn::ParseError("bad cycle polynomial term: " + term);
    }
    try {
      cbn::Int count(term.substr(0, star));
      cbn::Int length(term.substr(star + 2));
      poly += cbn::CyclePolynomial::term(length, count);
    } catch (const std::exception&) {
      throw cbn::ParseError("bad cycle polynomial term: " + term);
    }
    pos = next + 1;
  }
  return poly;
}

void print_memory_estimate(std::size_t n) {
  if (n > 26) {
    const double gib =
        9.0 * static_cast<double>(std::uint64_t(1) << n) / (1 << 30);
    std::cerr << "note: enumerating 2^" << n << " states needs roughly " << gib
              << " GiB\n";
  }
}

struct CommonArgs {
  std::string path;
  std::string format = "text";
  std::size_t cap = 26;
};

int cmd_analyze(const CommonArgs& args) {
  const cbn::BooleanNetwork net = load_network(args.path);
  const cbn::AnalysisReport report = cbn::analyze_network(net, args.path);
  std::cout << (args.format == "json" ? cbn::report_json(report)
                                      : cbn::report_text(report));
  if (!report.formulas_ok) {
    std::cerr << "note: " << report.diagnostic << '\n';
  }
  return kExitPass;
}

int cmd_simulate(const CommonArgs& args, const std::string& dot,
                 const std::string& out_path) {
  const cbn::BooleanNetwork net = load_network(args.path);
  cbn::SimulationOptions opt;
  opt.cap = args.cap;
  if (dot == "dep") {
    write_output(cbn::dependency_dot(net), out_path);
    return kExitPass;
  }
  print_memory_estimate(net.node_count);
  if (dot == "phase") {
    write_output(cbn::phase_space_dot(net, opt), out_path);
    return kExitPass;
  }
  const cbn::PhaseSpaceSummary summary = cbn::enumerate_phase_space(net, opt);
  std::cout << (args.format == "json"
                    ? cbn::summary_json(net, args.path, summary)
                    : cbn::summary_text(summary));
  return kExitPass;
}

int cmd_check(const CommonArgs& args, const std::string& expect_cycles) {
  const cbn::BooleanNetwork net = load_network(args.path);
  const cbn::AnalysisReport report = cbn::analyze_network(net, args.path);
  cbn::SimulationOptions opt;
  opt.cap = args.cap;
  print_memory_estimate(net.node_count);
  const cbn::PhaseSpaceSummary summary = cbn::enumerate_phase_space(net, opt);
  std::optional<cbn::CyclePolynomial> expected;
  if (!expect_cycles.empty()) expected = parse_poly(expect_cycles);
  const auto outcomes = cbn::run_checks(net, report, summary, expected);
  if (args.format == "json") {
    std::cout << cbn::checks_json(outcomes);
  } else {
    std::cout << "oracle: " << summary.cycle_structure.to_string()
              << "  height " << summary.height << "  period " << summary.period
              << '\n';
    std::cout << cbn::checks_text(outcomes);
  }
  return cbn::all_checks_pass(outcomes) ? kExitPass : kExitCheckFailed;
}

int cmd_random(std::size_t nodes, const std::vector<std::size_t>& scc_sizes,
               double density, std::uint64_t seed, bool disjunctive,
               bool complete_bipartite) {
  cbn::RandomSpec spec;
  spec.nodes = nodes;
  spec.scc_sizes = scc_sizes;
  spec.density = density;
  spec.seed = seed;
  spec.op_kind =
      disjunctive ? cbn::OpKind::Disjunctive : cbn::OpKind::Conjunctive;
  spec.complete_bipartite = complete_bipartite;
  std::cout << cbn::serialize_network(cbn::random_network(spec));
  return kExitPass;
}

int cmd_sample_primitivity(std::size_t nodes, std::size_t samples,
                           double density, std::uint64_t seed) {
  std::size_t strongly_connected = 0;
  std::size_t primitive = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    cbn::RandomSpec spec;
    spec.nodes = nodes;
    spec.density = density;
    spec.seed = seed + i;
    const cbn::BooleanNetwork net = cbn::random_network(spec);
    const cbn::SccDecomposition d =
        cbn::scc_decompose(cbn::dependency_graph(net));
    if (d.size() == 1) {
      ++strongly_connected;
      if (d.loop_numbers[0] == 1) ++primitive;
    }
  }
  std::cout << "samples: " << samples << '\n'
            << "strongly connected: " << strongly_connected << " ("
            << (100.0 * strongly_connected / samples) << "%)\n"
            << "strongly connected and primitive: " << primitive << " ("
            << (100.0 * primitive / samples) << "%)\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Limit-cycle analysis of conjunctive (AND) and disjunctive (OR) "
      "Boolean networks from dependency-graph topology, with an exhaustive "
      "phase-space simulator as ground truth"};
  app.require_subcommand(1);

  CommonArgs analyze_args, simulate_args, check_args;
  std::string simulate_dot, simulate_out, expect_cycles;

  auto* analyze = app.add_subcommand(
      "analyze", "topology-only report: SCCs, loop numbers, poset, bounds");
  analyze->add_option("file", analyze_args.path, "network file ('-' = stdin)")
      ->required();
  analyze->add_option("--format", analyze_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* simulate = app.add_subcommand(
      "simulate", "exhaustive phase-space enumeration (2^n states)");
  simulate->add_option("file", simulate_args.path, "network file ('-' = stdin)")
      ->required();
  simulate->add_option("--format", simulate_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  simulate->add_option("--cap", simulate_args.cap,
                       "maximum node count to enumerate (default 26)");
  simulate->add_option("--dot", simulate_dot,
                       "write a DOT graph instead: dep or phase")
      ->check(CLI::IsMember({"dep", "phase"}));
  simulate->add_option("--out", simulate_out, "output file for --dot");

  auto* check = app.add_subcommand(
      "check", "run analyzer and simulator, assert every predicted relation");
  check->add_option("file", check_args.path, "network file ('-' = stdin)")
      ->required();
  check->add_option("--format", check_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--cap", check_args.cap, "simulation cap (default 26)");
  check->add_option("--expect-cycles", expect_cycles,
                    "also assert this exact cycle structure, e.g. "
                    "\"4*C1 + 1*C2\"");

  std::size_t random_nodes = 0, samples = 200;
  std::vector<std::size_t> random_scc;
  double density = 0.2;
  std::uint64_t seed = 0;
  bool disjunctive = false, complete_bipartite = false;

  auto* random = app.add_subcommand(
      "random", "generate a seeded random network on standard output");
  random->add_option("--nodes", random_nodes, "node count")->required();
  random->add_option("--scc", random_scc,
                     "comma-separated SCC sizes to plant, e.g. 3,2")
      ->delimiter(',');
  random->add_option("--density", density, "extra-edge probability");
  random->add_option("--seed", seed, "RNG seed");
  random->add_flag("--or", disjunctive, "emit a disjunctive (OR) network");
  random->add_flag("--complete-bipartite", complete_bipartite,
                   "connected SCC pairs get all edges");

  CommonArgs export_args;
  std::string export_dot = "dep", export_out;
  auto* exporter = app.add_subcommand("export-dot", "write a DOT graph");
  exporter->add_option("file", export_args.path, "network file ('-' = stdin)")
      ->required();
  exporter->add_option("--dot", export_dot, "dep or phase")
      ->check(CLI::IsMember({"dep", "phase"}));
  exporter->add_option("--cap", export_args.cap, "simulation cap for phase");
  exporter->add_option("--out", export_out, "output file (default stdout)");

  std::size_t sp_nodes = 8;
  double sp_density = 0.5;
  std::uint64_t sp_seed = 0;
  auto* sample = app.add_subcommand(
      "sample-primitivity",
      "empirical fraction of random networks that are strongly connected "
      "and primitive (no pass/fail semantics)");
  sample->add_option("--nodes", sp_nodes, "node count");
  sample->add_option("--samples", samples, "number of samples");
  sample->add_option("--density", sp_density, "edge probability");
  sample->add_option("--seed", sp_seed, "base RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(analyze_args);
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(simulate_args, simulate_dot, simulate_out);
    }
    if (app.got_subcommand(check)) return cmd_check(check_args, expect_cycles);
    if (app.got_subcommand(random)) {
      return cmd_random(random_nodes, random_scc, density, seed, disjunctive,
                        complete_bipartite);
    }
    if (app.got_subcommand(exporter)) {
      return cmd_simulate(export_args, export_dot, export_out);
    }
    if (app.got_subcommand(sample)) {
      return cmd_sample_primitivity(sp_nodes, samples, sp_density, sp_seed);
    }
  } catch (const cbn::CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const cbn::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
