#include "cbn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "cbn/graph.hpp"

namespace cbn {

namespace mp = boost::multiprecision;

State unpack_state(PackedState bits, std::size_t n) {
  State s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (bits >> i) & 1u;
  return s;
}

PackedState pack_state(const State& s) {
  PackedState bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) bits |= PackedState(1) << i;
  }
  return bits;
}

namespace {

constexpr std::size_t kAbsoluteCap = 30;

std::vector<PackedState> successor_table(const BooleanNetwork& net) {
  const std::size_t n = net.node_count;
  std::vector<PackedState> mask(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : net.inputs[i]) mask[i] |= PackedState(1) << j;
  }
  const std::uint64_t total = std::uint64_t(1) << n;
  std::vector<PackedState> succ(total);
  const bool conj = net.op_kind == OpKind::Conjunctive;
  for (std::uint64_t s = 0; s < total; ++s) {
    PackedState out = 0;
    const PackedState sp = static_cast<PackedState>(s);
    if (conj) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((sp & mask[i]) == mask[i]) out |= PackedState(1) << i;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if ((sp & mask[i]) != 0) out |= PackedState(1) << i;
      }
    }
    succ[s] = out;
  }
  return succ;
}

void require_within_cap(const BooleanNetwork& net, std::size_t cap) {
  std::size_t effective = std::min(cap, kAbsoluteCap);
  if (net.node_count > effective) {
    throw CapError("phase space of 2^" + std::to_string(net.node_count) +
                   " states exceeds the cap of 2^" + std::to_string(effective));
  }
}

}  // namespace

PhaseSpaceSummary enumerate_phase_space(const BooleanNetwork& net,
                                        const SimulationOptions& options) {
  require_within_cap(net, options.cap);
  const auto succ = successor_table(net);
  const std::uint64_t total = succ.size();

  // Three-color walk over the functional graph: unvisited / on the current
  // path / finished. Every state is pushed on a path exactly once.
  std::vector<std::uint8_t> color(total, 0);
  std::vector<std::uint32_t> transient(total, 0);
  std::vector<PackedState> path;

  std::map<std::uint64_t, std::uint64_t> count_by_length;
  std::uint64_t max_transient = 0;
  PhaseSpaceSummary summary;

  for (std::uint64_t start = 0; start < total; ++start) {
    if (color[start] != 0) continue;
    path.clear();
    PackedState u = static_cast<PackedState>(start);
    while (color[u] == 0) {
      color[u] = 1;
      path.push_back(u);
      u = succ[u];
    }
    std::size_t tail_begin;  // index after which transients restart from u
    std::uint32_t tail_transient;
    if (color[u] == 1) {
      // Closed a new cycle inside the current path.
      std::size_t pos = path.size() - 1;
      while (path[pos] != u) --pos;
      const std::uint64_t length = path.size() - pos;
      ++count_by_length[length];
      if (options.collect_cycles) {
        summary.cycles.emplace_back(path.begin() + pos, path.end());
      }
      for (std::size_t i = pos; i < path.size(); ++i) transient[path[i]] = 0;
      tail_begin = pos;
      tail_transient = 0;
    } else {
      // Ran into an already-finished state.
      tail_begin = path.size();
      tail_transient = transient[u];
    }
    std::uint32_t steps = tail_transient;
    for (std::size_t i = tail_begin; i-- > 0;) {
      transient[path[i]] = ++steps;
    }
    if (!path.empty()) {
      max_transient = std::max<std::uint64_t>(max_transient, transient[path[0]]);
    }
    for (PackedState v : path) color[v] = 2;
  }

  for (const auto& [length, count] : count_by_length) {
    summary.cycle_structure += CyclePolynomial::term(length, count);
  }
  summary.height = std::max<std::uint64_t>(1, max_transient);
  summary.period = summary.cycle_structure.period();
  summary.component_count = summary.cycle_structure.total_cycles();
  summary.fixed_point_count = summary.cycle_structure.coefficient(1);
  return summary;
}

std::vector<PackedState> canonical_cycle(const std::vector<PackedState>& orbit) {
  if (orbit.empty()) return {};
  auto min_it = std::min_element(orbit.begin(), orbit.end());
  std::vector<PackedState> out;
  out.reserve(orbit.size());
  out.insert(out.end(), min_it, orbit.end());
  out.insert(out.end(), orbit.begin(), min_it);
  return out;
}

std::vector<State> periodic_points_phi(const BooleanNetwork& net,
                                       std::uint64_t k) {
  const BoolMatrix a = dependency_graph(net);
  const SccDecomposition d = scc_decompose(a);
  if (d.size() != 1) {
    throw std::invalid_argument(
        "periodic_points_phi: dependency graph must be strongly connected");
  }
  const std::uint64_t c = d.loop_numbers[0];
  if (c == 0) {
    throw TrivialComponentError("periodic_points_phi: trivial component");
  }
  if (k == 0 || c % k != 0) {
    throw std::invalid_argument("periodic_points_phi: k = " +
                                std::to_string(k) +
                                " does not divide the loop number " +
                                std::to_string(c));
  }
  if (k > 26) {
    throw CapError("periodic_points_phi: 2^" + std::to_string(k) +
                   " states exceed desk scale");
  }
  const CyclicPartition part = cyclic_partition(a, d.components[0], k);
  std::vector<State> out;
  out.reserve(std::size_t(1) << k);
  for (std::uint64_t values = 0; values < (std::uint64_t(1) << k); ++values) {
    State s(net.node_count, false);
    for (std::uint64_t cls = 0; cls < k; ++cls) {
      const bool bit = (values >> cls) & 1u;
      for (int v : part.classes[cls]) s[v] = bit;
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

BooleanNetwork filter_inter_component_inputs(
    const BooleanNetwork& net, const SccDecomposition& d,
    const std::function<bool(int source, int target)>& keep_inter) {
  if (d.has_trivial_component()) {
    throw TrivialComponentError(
        "inter-component edge deletion requires every component to be "
        "non-trivial; a trivial component would lose all of its inputs");
  }
  BooleanNetwork out;
  out.node_count = net.node_count;
  out.op_kind = net.op_kind;
  out.inputs.resize(net.node_count);
  for (std::size_t v = 0; v < net.node_count; ++v) {
    for (int u : net.inputs[v]) {
      if (d.component_of[u] == d.component_of[static_cast<int>(v)] ||
          keep_inter(u, static_cast<int>(v))) {
        out.inputs[v].push_back(u);
      }
    }
  }
  return out;
}

}  // namespace

BooleanNetwork reduce_inter_component_edges(const BooleanNetwork& net) {
  const BoolMatrix a = dependency_graph(net);
  const SccDecomposition d = scc_decompose(a);
  // Lexicographically smallest (source, target) edge per component pair.
  std::map<std::pair<int, int>, std::pair<int, int>> kept;
  for (std::size_t u = 0; u < net.node_count; ++u) {
    for (std::size_t v = 0; v < net.node_count; ++v) {
      if (!a.get(v, u)) continue;  // edge u -> v
      int cu = d.component_of[u];
      int cv = d.component_of[v];
      if (cu == cv) continue;
      kept.try_emplace({cu, cv},
                       std::make_pair(static_cast<int>(u), static_cast<int>(v)));
    }
  }
  return filter_inter_component_inputs(net, d, [&](int source, int target) {
    auto it = kept.find({d.component_of[source], d.component_of[target]});
    return it != kept.end() && it->second == std::make_pair(source, target);
  });
}

BooleanNetwork drop_inter_component_edges(const BooleanNetwork& net) {
  const SccDecomposition d = scc_decompose(dependency_graph(net));
  return filter_inter_component_inputs(net, d,
                                       [](int, int) { return false; });
}

BooleanNetwork component_subnetwork(const BooleanNetwork& net,
                                    const std::vector<int>& component) {
  std::vector<int> rank(net.node_count, -1);
  for (std::size_t i = 0; i < component.size(); ++i) {
    rank[component[i]] = static_cast<int>(i);
  }
  BooleanNetwork out;
  out.node_count = component.size();
  out.op_kind = net.op_kind;
  out.inputs.resize(component.size());
  for (std::size_t i = 0; i < component.size(); ++i) {
    for (int j : net.inputs[component[i]]) {
      if (rank[j] >= 0) out.inputs[i].push_back(rank[j]);
    }
    if (out.inputs[i].empty()) {
      throw TrivialComponentError(
          "component_subnetwork: vertex " + std::to_string(component[i] + 1) +
          " has no inputs inside the component");
    }
    std::sort(out.inputs[i].begin(), out.inputs[i].end());
  }
  return out;
}

BooleanNetwork disjoint_union(const BooleanNetwork& a, const BooleanNetwork& b) {
  if (a.op_kind != b.op_kind) {
    throw std::invalid_argument(
        "disjoint_union: operator kinds must match");
  }
  BooleanNetwork out;
  out.node_count = a.node_count + b.node_count;
  out.op_kind = a.op_kind;
  out.inputs = a.inputs;
  const int shift = static_cast<int>(a.node_count);
  for (const auto& list : b.inputs) {
    std::vector<int> shifted;
    shifted.reserve(list.size());
    for (int j : list) shifted.push_back(j + shift);
    out.inputs.push_back(std::move(shifted));
  }
  return out;
}

namespace {

// Raw-engine randomness only: the distributions in <random> are not
// bit-reproducible across standard libraries, and identical output for a
// fixed seed is part of this module's contract.
std::uint64_t rand_u64(std::mt19937_64& rng) { return rng(); }

std::size_t rand_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rand_u64(rng) % bound);
}

bool rand_chance(std::mt19937_64& rng, double p) {
  const std::uint64_t draw = rand_u64(rng) >> 11;  // top 53 bits
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return draw < static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
}

template <typename T>
void shuffle_vector(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rand_below(rng, i)]);
  }
}

}  // namespace

BooleanNetwork random_network(const RandomSpec& spec) {
  if (spec.nodes == 0) {
    throw std::invalid_argument("random_network: need at least one node");
  }
  std::mt19937_64 rng(spec.seed);
  const std::size_t n = spec.nodes;
  std::vector<std::vector<int>> inputs_1based(n);
  auto add_edge = [&](int u, int v) {  // x_{u+1} becomes an input of node v+1
    inputs_1based[v].push_back(u + 1);
  };

  if (spec.scc_sizes.empty()) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (rand_chance(rng, spec.density)) {
          add_edge(static_cast<int>(u), static_cast<int>(v));
        }
      }
      if (inputs_1based[v].empty()) {
        add_edge(static_cast<int>(rand_below(rng, n)), static_cast<int>(v));
      }
    }
    return make_network(n, spec.op_kind, inputs_1based);
  }

  std::size_t sum = 0;
  for (std::size_t s : spec.scc_sizes) {
    if (s == 0) {
      throw std::invalid_argument("random_network: zero-size component");
    }
    sum += s;
  }
  if (sum != n) {
    throw std::invalid_argument(
        "random_network: component sizes sum to " + std::to_string(sum) +
        ", expected " + std::to_string(n));
  }

  std::vector<std::size_t> sizes = spec.scc_sizes;
  shuffle_vector(rng, sizes);  // random topological order of the blocks
  std::vector<int> vertices(n);
  for (std::size_t i = 0; i < n; ++i) vertices[i] = static_cast<int>(i);
  shuffle_vector(rng, vertices);

  std::vector<std::vector<int>> blocks;
  std::size_t offset = 0;
  for (std::size_t s : sizes) {
    blocks.emplace_back(vertices.begin() + offset, vertices.begin() + offset + s);
    offset += s;
  }

  for (const auto& block : blocks) {
    const std::size_t m = block.size();
    for (std::size_t i = 0; i < m; ++i) {
      add_edge(block[i], block[(i + 1) % m]);  // planted Hamiltonian cycle
    }
    for (int u : block) {
      for (int v : block) {
        if (rand_chance(rng, spec.density)) add_edge(u, v);
      }
    }
  }
  const double inter =
      spec.inter_density < 0 ? spec.density : spec.inter_density;
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    for (std::size_t q = p + 1; q < blocks.size(); ++q) {
      if (spec.complete_bipartite) {
        if (rand_chance(rng, inter)) {
          for (int u : blocks[p]) {
            for (int v : blocks[q]) add_edge(u, v);
          }
        }
      } else {
        for (int u : blocks[p]) {
          for (int v : blocks[q]) {
            if (rand_chance(rng, inter)) add_edge(u, v);
          }
        }
      }
    }
  }
  return make_network(n, spec.op_kind, inputs_1based);
}

bool cross_product_check(const BooleanNetwork& a, const BooleanNetwork& b,
                         std::size_t cap) {
  const BooleanNetwork joint = disjoint_union(a, b);
  SimulationOptions opt;
  opt.cap = cap;
  const PhaseSpaceSummary sa = enumerate_phase_space(a, opt);
  const PhaseSpaceSummary sb = enumerate_phase_space(b, opt);
  const PhaseSpaceSummary sj = enumerate_phase_space(joint, opt);
  return sj.cycle_structure == sa.cycle_structure * sb.cycle_structure &&
         sj.height == std::max(sa.height, sb.height) &&
         sj.period == mp::lcm(sa.period, sb.period);
}

std::string phase_space_dot(const BooleanNetwork& net,
                            const SimulationOptions& options) {
  SimulationOptions opt = options;
  opt.collect_cycles = true;
  const PhaseSpaceSummary summary = enumerate_phase_space(net, opt);
  std::vector<bool> periodic(std::size_t(1) << net.node_count, false);
  for (const auto& cycle : summary.cycles) {
    for (PackedState s : cycle) periodic[s] = true;
  }
  const auto succ = successor_table(net);
  std::ostringstream os;
  os << "digraph phase_space {\n";
  for (std::uint64_t s = 0; s < succ.size(); ++s) {
    os << "  \"" << state_to_string(unpack_state(static_cast<PackedState>(s),
                                                 net.node_count))
       << '"';
    if (periodic[s]) os << " [peripheries=2]";
    os << ";\n";
  }
  for (std::uint64_t s = 0; s < succ.size(); ++s) {
    os << "  \""
       << state_to_string(unpack_state(static_cast<PackedState>(s),
                                       net.node_count))
       << "\" -> \""
       << state_to_string(unpack_state(succ[s], net.node_count)) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cbn
