#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbn/cycle_poly.hpp"
#include "cbn/errors.hpp"
#include "cbn/network.hpp"

namespace cbn {

// Exhaustive enumeration works on packed states: bit i of the word is the
// value of x_{i+1}. This encoding is part of the phase-space DOT contract.
using PackedState = std::uint32_t;

State unpack_state(PackedState bits, std::size_t n);
PackedState pack_state(const State& s);

struct SimulationOptions {
  std::size_t cap = 26;         // refuse to enumerate beyond 2^cap states
  bool collect_cycles = false;  // also return every limit cycle's orbit
};

struct PhaseSpaceSummary {
  CyclePolynomial cycle_structure;
  std::uint64_t height = 1;  // least positive s with f^s(u) periodic for all u
  Int period = 1;            // lcm of all limit cycle lengths
  Int component_count = 0;   // weakly connected components = limit cycles
  Int fixed_point_count = 0;

  // Limit cycle orbits in discovery order; filled only when
  // SimulationOptions::collect_cycles is set.
  std::vector<std::vector<PackedState>> cycles;
};

// Computes the successor of all 2^n states and decomposes the functional
// graph into limit cycles plus transient trees.
PhaseSpaceSummary enumerate_phase_space(const BooleanNetwork& net,
                                        const SimulationOptions& options = {});

// Orbit rotated so its smallest state comes first; cycles are equal as
// state sets iff their canonical forms are equal.
std::vector<PackedState> canonical_cycle(const std::vector<PackedState>& orbit);

// The 2^k states fixed by f^k on a strongly connected non-trivial network,
// built by broadcasting each k-bit value vector across the cyclic
// partition classes. Requires k to divide the loop number.
std::vector<State> periodic_points_phi(const BooleanNetwork& net,
                                       std::uint64_t k);

// For each ordered pair of distinct SCCs, keeps only the lexicographically
// smallest (source, target) connecting edge. Every limit cycle of the
// input is a limit cycle of the result. Requires all components
// non-trivial (otherwise a node could lose every input).
BooleanNetwork reduce_inter_component_edges(const BooleanNetwork& net);

// Deletes all inter-component edges, leaving the disjoint union of the
// strongly connected subnetworks. Same non-triviality requirement.
BooleanNetwork drop_inter_component_edges(const BooleanNetwork& net);

// Side-by-side composition of two networks of the same operator kind; the
// second network's nodes are shifted past the first's.
BooleanNetwork disjoint_union(const BooleanNetwork& a, const BooleanNetwork& b);

// The network induced by one non-trivial SCC: keeps only intra-component
// inputs and relabels the vertices by their rank within the component.
BooleanNetwork component_subnetwork(const BooleanNetwork& net,
                                    const std::vector<int>& component);

struct RandomSpec {
  std::size_t nodes = 0;
  // Non-empty: plant one SCC per entry (sizes must sum to `nodes`) by
  // laying a directed Hamiltonian cycle inside each block, then sprinkle
  // extra edges; inter-block edges respect a random topological order, so
  // the planted blocks are exactly the SCCs. Empty: plain random digraph
  // with every in-degree forced >= 1.
  std::vector<std::size_t> scc_sizes;
  double density = 0.2;        // probability of each optional edge
  double inter_density = -1.0; // override for inter-block edges; < 0 = density
  std::uint64_t seed = 0;
  OpKind op_kind = OpKind::Conjunctive;
  // Connected block pairs get the full bipartite edge set instead of
  // individual edges (the configuration whose cycle count meets the lower
  // bound exactly).
  bool complete_bipartite = false;
};

// Deterministic for a fixed spec: same seed, same network, byte for byte.
BooleanNetwork random_network(const RandomSpec& spec);

// Verifies the product laws on the disjoint union of two networks: cycle
// structure multiplies, height is the max, period is the lcm.
bool cross_product_check(const BooleanNetwork& a, const BooleanNetwork& b,
                         std::size_t cap = 26);

// DOT rendering of the full phase space; limit-cycle states are drawn
// with a double border.
std::string phase_space_dot(const BooleanNetwork& net,
                            const SimulationOptions& options = {});

}  // namespace cbn
