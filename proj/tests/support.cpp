#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cbn::test {

namespace mp = boost::multiprecision;

CyclePolynomial poly(
    std::initializer_list<std::pair<long long, long long>> length_count) {
  CyclePolynomial p;
  for (const auto& [len, count] : length_count) {
    p += CyclePolynomial::term(len, count);
  }
  return p;
}

BooleanNetwork example_net_6() {
  return make_network(6, OpKind::Conjunctive,
                      {{2, 3}, {1}, {2}, {3, 4}, {1, 6}, {3, 4, 5}});
}

BooleanNetwork example_net_5() {
  return make_network(5, OpKind::Conjunctive, {{2}, {1}, {2, 5}, {3}, {4}});
}

BooleanNetwork example_net_10() {
  return make_network(10, OpKind::Conjunctive,
                      {{4},
                       {1},
                       {2},
                       {3},
                       {1, 10},
                       {5},
                       {6},
                       {7},
                       {8},
                       {9}});
}

BooleanNetwork directed_cycle(std::size_t n, OpKind op) {
  std::vector<std::vector<int>> inputs(n);
  for (std::size_t i = 0; i < n; ++i) {
    inputs[i] = {static_cast<int>(i == 0 ? n : i)};
  }
  return make_network(n, op, inputs);
}

std::uint64_t simple_cycle_gcd(const BoolMatrix& a,
                               const std::vector<int>& component) {
  const auto succ = graph_successors(a);
  std::vector<bool> in_comp(a.size(), false);
  for (int v : component) in_comp[v] = true;

  std::uint64_t g = 0;
  std::vector<bool> on_path(a.size(), false);

  // Every simple cycle is found once from its smallest vertex `pivot`,
  // walking only through vertices > pivot.
  for (int pivot : component) {
    std::function<void(int, std::uint64_t)> walk = [&](int u,
                                                       std::uint64_t length) {
      for (int v : succ[u]) {
        if (!in_comp[v] || v < pivot) continue;
        if (v == pivot) {
          g = std::gcd(g, length + 1);
        } else if (!on_path[v]) {
          on_path[v] = true;
          walk(v, length + 1);
          on_path[v] = false;
        }
      }
    };
    on_path[pivot] = true;
    walk(pivot, 0);
    on_path[pivot] = false;
  }
  return g;
}

BoolMatrix symbolic_power_graph(const BooleanNetwork& net, std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("power must be >= 1");
  const std::size_t n = net.node_count;
  // sets[i] = variables of the i-th coordinate of f^k, as a sorted set.
  std::vector<std::vector<int>> sets = net.inputs;
  for (std::uint64_t step = 1; step < s; ++step) {
    std::vector<std::vector<int>> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> seen(n, false);
      for (int j : sets[i]) {
        for (int k : net.inputs[j]) seen[k] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (seen[k]) next[i].push_back(static_cast<int>(k));
      }
    }
    sets = std::move(next);
  }
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : sets[i]) m.set(i, j);
  }
  return m;
}

CyclePolynomial lower_bound_literal(const CondensationPoset& p,
                                    const std::vector<CyclePolynomial>& xs) {
  const auto omega = maximal_antichains(p);
  if (omega.size() > 20) {
    throw std::invalid_argument("literal lower bound: Omega too large");
  }
  CyclePolynomial total;
  const std::uint64_t families = std::uint64_t(1) << omega.size();
  for (std::uint64_t family = 1; family < families; ++family) {
    std::vector<int> intersection;
    bool first = true;
    for (std::size_t a = 0; a < omega.size(); ++a) {
      if (!((family >> a) & 1)) continue;
      if (first) {
        intersection = omega[a];
        first = false;
      } else {
        std::vector<int> merged;
        std::set_intersection(intersection.begin(), intersection.end(),
                              omega[a].begin(), omega[a].end(),
                              std::back_inserter(merged));
        intersection = std::move(merged);
      }
    }
    CyclePolynomial prod = CyclePolynomial::one();
    for (int j : intersection) prod *= xs[j];
    if (std::popcount(family) % 2 == 1) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

Int fixed_point_count_literal(const CondensationPoset& p) {
  const auto omega = maximal_antichains(p);
  if (omega.size() > 20) {
    throw std::invalid_argument("literal fixed point count: Omega too large");
  }
  Int total = 0;
  const std::uint64_t families = std::uint64_t(1) << omega.size();
  for (std::uint64_t family = 1; family < families; ++family) {
    std::vector<int> intersection;
    bool first = true;
    for (std::size_t a = 0; a < omega.size(); ++a) {
      if (!((family >> a) & 1)) continue;
      if (first) {
        intersection = omega[a];
        first = false;
      } else {
        std::vector<int> merged;
        std::set_intersection(intersection.begin(), intersection.end(),
                              omega[a].begin(), omega[a].end(),
                              std::back_inserter(merged));
        intersection = std::move(merged);
      }
    }
    Int term = Int(1) << intersection.size();
    if (std::popcount(family) % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

CyclePolynomial upper_bound_literal(const CondensationPoset& p,
                                    const std::vector<CyclePolynomial>& xs) {
  const std::size_t t = p.size;
  if (t > 5) {
    throw std::invalid_argument("literal upper bound: 9^t blows up past t=5");
  }
  std::vector<std::uint64_t> down(t, 0), up(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t k = 0; k < t; ++k) {
      if (p.leq[k][i]) down[i] |= std::uint64_t(1) << k;
      if (p.leq[i][k]) up[i] |= std::uint64_t(1) << k;
    }
  }
  auto closure = [&](std::uint64_t set,
                     const std::vector<std::uint64_t>& single) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if ((set >> i) & 1) out |= single[i];
    }
    return out;
  };

  const std::uint64_t full = (std::uint64_t(1) << t) - 1;
  CyclePolynomial total;
  for (std::uint64_t outer_n = 0; outer_n <= full; ++outer_n) {
    for (std::uint64_t inner_i = outer_n;; inner_i = (inner_i - 1) & outer_n) {
      for (std::uint64_t outer_m = 0; outer_m <= full; ++outer_m) {
        for (std::uint64_t inner_j = outer_m;;
             inner_j = (inner_j - 1) & outer_m) {
          const std::uint64_t k_mask = closure(inner_i, down) | outer_n;
          const std::uint64_t l_mask = closure(inner_j, up) | outer_m;
          if ((k_mask & l_mask) == 0) {
            const int sign_bits = std::popcount(outer_n) +
                                  std::popcount(outer_m) +
                                  std::popcount(inner_i) +
                                  std::popcount(inner_j);
            CyclePolynomial prod = CyclePolynomial::one();
            for (std::size_t c = 0; c < t; ++c) {
              if (!(((k_mask | l_mask) >> c) & 1)) prod *= xs[c];
            }
            if (sign_bits % 2 == 0) {
              total += prod;
            } else {
              total -= prod;
            }
          }
          if (inner_j == 0) break;
        }
      }
      if (inner_i == 0) break;
    }
  }
  return total;
}

namespace {

enum class Cat { Zero, One, NonTrivial };

struct CompCycle {
  std::uint64_t length;
  Cat cat;
};

// Oracle cycle inventory of every component subnetwork, classified as the
// all-zero fixed point, the all-one fixed point, or a non-trivial cycle.
std::vector<std::vector<CompCycle>> component_inventories(
    const BooleanNetwork& net, const SccDecomposition& d) {
  std::vector<std::vector<CompCycle>> inventories;
  for (const auto& comp : d.components) {
    const BooleanNetwork sub = component_subnetwork(net, comp);
    SimulationOptions opt;
    opt.collect_cycles = true;
    const PhaseSpaceSummary summary = enumerate_phase_space(sub, opt);
    std::vector<CompCycle> inv;
    const PackedState all =
        static_cast<PackedState>((std::uint64_t(1) << sub.node_count) - 1);
    for (const auto& orbit : summary.cycles) {
      Cat cat = Cat::NonTrivial;
      if (orbit.size() == 1) {
        if (orbit[0] == 0) cat = Cat::Zero;
        if (orbit[0] == all) cat = Cat::One;
      }
      inv.push_back({orbit.size(), cat});
    }
    inventories.push_back(std::move(inv));
  }
  return inventories;
}

// Sums gcd-weighted product cycles over every tuple of component cycles
// that the predicate accepts. The predicate sees the category vector.
CyclePolynomial tuple_structure(
    const std::vector<std::vector<CompCycle>>& inventories,
    const std::function<bool(const std::vector<Cat>&)>& accept) {
  const std::size_t t = inventories.size();
  std::vector<Cat> cats(t, Cat::Zero);
  std::vector<std::uint64_t> lengths(t, 1);
  CyclePolynomial total;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == t) {
      if (!accept(cats)) return;
      Int lcm_all = 1;
      Int product = 1;
      for (std::uint64_t len : lengths) {
        lcm_all = mp::lcm(lcm_all, Int(len));
        product *= len;
      }
      total += CyclePolynomial::term(lcm_all, product / lcm_all);
      return;
    }
    for (const CompCycle& cycle : inventories[i]) {
      cats[i] = cycle.cat;
      lengths[i] = cycle.length;
      walk(i + 1);
    }
  };
  walk(0);
  return total;
}

}  // namespace

CyclePolynomial admissible_structure_oracle(const BooleanNetwork& net) {
  const BoolMatrix a = dependency_graph(net);
  const SccDecomposition d = scc_decompose(a);
  const CondensationPoset p = condensation_poset(d, a);
  const auto inventories = component_inventories(net, d);
  const std::size_t t = d.size();

  return tuple_structure(inventories, [&](const std::vector<Cat>& cats) {
    // A zero component forces zeros on everything above it; a one
    // component forces ones on everything below it.
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t k = 0; k < t; ++k) {
        if (cats[j] == Cat::Zero && p.leq[j][k] && cats[k] != Cat::Zero) {
          return false;
        }
        if (cats[j] == Cat::One && p.leq[k][j] && cats[k] != Cat::One) {
          return false;
        }
      }
    }
    return true;
  });
}

CyclePolynomial regular_structure_oracle(const BooleanNetwork& net) {
  const BoolMatrix a = dependency_graph(net);
  const SccDecomposition d = scc_decompose(a);
  const CondensationPoset p = condensation_poset(d, a);
  const auto inventories = component_inventories(net, d);
  const auto omega = maximal_antichains(p);

  // For a maximal antichain J, everything outside J is either strictly
  // above (must be zero) or strictly below (must be one).
  std::vector<std::vector<int>> strictly_above, strictly_below;
  for (const auto& antichain : omega) {
    strictly_above.push_back(up_closure(p, antichain, true));
    strictly_below.push_back(down_closure(p, antichain, true));
  }

  return tuple_structure(inventories, [&](const std::vector<Cat>& cats) {
    for (std::size_t a_idx = 0; a_idx < omega.size(); ++a_idx) {
      bool ok = true;
      for (int k : strictly_above[a_idx]) {
        if (cats[k] != Cat::Zero) ok = false;
      }
      for (int k : strictly_below[a_idx]) {
        if (cats[k] != Cat::One) ok = false;
      }
      if (ok) return true;
    }
    return false;
  });
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return seed * 0x9E3779B97F4A7C15ull + salt;
}

}  // namespace

RandomSpec multi_component_spec(std::uint64_t seed, std::size_t max_nodes) {
  std::mt19937_64 rng(mix(seed, 0xA11C11A1));
  RandomSpec spec;
  const std::size_t t = 2 + rng() % 3;
  while (true) {
    spec.scc_sizes.clear();
    std::size_t sum = 0;
    for (std::size_t i = 0; i < t; ++i) {
      std::size_t s = 1 + rng() % 4;
      spec.scc_sizes.push_back(s);
      sum += s;
    }
    if (sum <= max_nodes) {
      spec.nodes = sum;
      break;
    }
  }
  spec.density = static_cast<double>(rng() % 30) / 100.0;
  spec.seed = seed;
  return spec;
}

RandomSpec strongly_connected_spec(std::uint64_t seed, std::size_t max_nodes) {
  std::mt19937_64 rng(mix(seed, 0x5C5C5C5C));
  RandomSpec spec;
  spec.nodes = 2 + rng() % (max_nodes - 1);
  spec.scc_sizes = {spec.nodes};
  spec.density = rng() % 2 == 0
                     ? static_cast<double>(rng() % 7) / 100.0
                     : static_cast<double>(rng() % 25) / 100.0;
  spec.seed = seed;
  return spec;
}

RandomSpec sharp_witness_spec(std::uint64_t seed, std::size_t max_nodes) {
  std::mt19937_64 rng(mix(seed, 0x0B1B2B3B));
  RandomSpec spec;
  const std::size_t t = 2 + rng() % 2;
  while (true) {
    spec.scc_sizes.clear();
    std::size_t sum = 0;
    for (std::size_t i = 0; i < t; ++i) {
      std::size_t s = 1 + rng() % 4;
      spec.scc_sizes.push_back(s);
      sum += s;
    }
    if (sum <= max_nodes) {
      spec.nodes = sum;
      break;
    }
  }
  spec.density = static_cast<double>(rng() % 8) / 100.0;
  spec.inter_density = 0.5 + static_cast<double>(rng() % 50) / 100.0;
  spec.seed = seed;
  spec.complete_bipartite = true;
  return spec;
}

}  // namespace cbn::test
