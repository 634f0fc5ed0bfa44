#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cbn/cycle_formulas.hpp"
#include "cbn/cycle_poly.hpp"
#include "cbn/graph.hpp"
#include "cbn/network.hpp"
#include "cbn/oracle.hpp"

namespace cbn::test {

CyclePolynomial poly(
    std::initializer_list<std::pair<long long, long long>> length_count);

// f = (x2*x3, x1, x2, x3*x4, x1*x6, x3*x4*x5): three components
// {1,2,3}, {4}, {5,6} in a chain, loop numbers 1, 1, 2.
BooleanNetwork example_net_6();

// f = (x2, x1, x2*x5, x3, x4): a 2-cycle component feeding a 3-cycle
// component.
BooleanNetwork example_net_5();

// A directed 4-cycle component and a directed 6-cycle component joined by
// the single edge 1 -> 5.
BooleanNetwork example_net_10();

BooleanNetwork directed_cycle(std::size_t n,
                              OpKind op = OpKind::Conjunctive);

// gcd of the lengths of all simple directed cycles of one SCC, found by
// exhaustive path enumeration. Independent of the depth-gcd production
// algorithm. Intended for components of at most ~10 vertices.
std::uint64_t simple_cycle_gcd(const BoolMatrix& a,
                               const std::vector<int>& component);

// Variable matrix of the s-fold composition computed symbolically by
// substituting input sets into each other, never through the semiring.
BoolMatrix symbolic_power_graph(const BooleanNetwork& net, std::uint64_t s);

// Literal evaluations of the bound formulas, term by term, with no
// algebraic regrouping. Feasible only for small posets; they exist to
// cross-check the production implementations.
CyclePolynomial lower_bound_literal(const CondensationPoset& p,
                                    const std::vector<CyclePolynomial>& xs);
Int fixed_point_count_literal(const CondensationPoset& p);
CyclePolynomial upper_bound_literal(const CondensationPoset& p,
                                    const std::vector<CyclePolynomial>& xs);

// Cycle structures of the admissible / regular limit cycles of the
// disconnected system, enumerated tuple by tuple from the actual oracle
// cycles of every component subnetwork.
CyclePolynomial admissible_structure_oracle(const BooleanNetwork& net);
CyclePolynomial regular_structure_oracle(const BooleanNetwork& net);

// Seeded instance families for the acceptance suite.
RandomSpec multi_component_spec(std::uint64_t seed, std::size_t max_nodes = 14);
RandomSpec strongly_connected_spec(std::uint64_t seed,
                                   std::size_t max_nodes = 14);
RandomSpec sharp_witness_spec(std::uint64_t seed, std::size_t max_nodes = 14);

}  // namespace cbn::test
