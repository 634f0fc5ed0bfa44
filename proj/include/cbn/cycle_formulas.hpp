#pragma once

#include <cstdint>
#include <vector>

#include "cbn/cycle_poly.hpp"
#include "cbn/errors.hpp"
#include "cbn/graph.hpp"

namespace cbn {

// Number of periodic points whose exact period is m, for a conjunctive
// network on a strongly connected dependency graph whose loop number m
// divides.
struct PeriodicPointCount {
  Int m;
  Int count;
};

// |A(m)| alone: 2 for m = 1; otherwise the signed sum over subsets S of
// the distinct primes of m of (-1)^|S| * 2^(m / prod S).
Int count_periodic_states(const Int& m);

// Validated variant: requires m >= 1, c >= 1 and m | c.
PeriodicPointCount count_periodic(const Int& m, const Int& c);

// Exact cycle structure of a conjunctive network with strongly connected
// dependency graph of loop number c: sum over m | c of (|A(m)|/m) * C_m.
// c = 1 gives 2*C1. Throws TrivialComponentError for c = 0.
CyclePolynomial scc_cycle_structure(const Int& c);

// Per-component exact structures for a decomposition; throws
// TrivialComponentError if any component is trivial.
std::vector<CyclePolynomial> component_structures(const SccDecomposition& d);

// Cycle structure of the disconnected system: plain product in the cycle
// algebra.
CyclePolynomial disjoint_union_structure(
    const std::vector<CyclePolynomial>& structures);

// Sharp lower bound: the cycle structure of the regular limit cycles,
//   L = sum over non-empty families F of maximal antichains of
//       (-1)^(|F|+1) * prod over the intersection of F of C(h_j).
// Grouping the families by their intersection collapses the sum to
//   L = sum over all antichains T of prod_{j in T} (C(h_j) - C1),
// which is what this evaluates (the empty T contributes 1*C1). Components
// must all be non-trivial.
CyclePolynomial lower_bound(const CondensationPoset& p,
                            const std::vector<CyclePolynomial>& structures,
                            std::size_t cap = 20);

// Upper bound: the cycle structure of the admissible limit cycles,
//   U = sum over I <= N <= [t], J <= M <= [t] of
//       (-1)^(|N|+|M|+|I|+|J|) * phi(down(I) u N, up(J) u M)
// with phi(K, L) = 0 if K and L meet, else prod over the complement of
// K u L of C(h_k). The summand depends on (I, N) only through its mask, so
// signs are tallied per mask (3^t pairs) before the polynomial work.
CyclePolynomial upper_bound(const CondensationPoset& p,
                            const std::vector<CyclePolynomial>& structures,
                            std::size_t cap = 12);

// Exact number of fixed points: evaluating L at every structure = 2*C1
// turns each antichain term into 1, so this is the number of antichains of
// the condensation poset. Requires all components non-trivial.
Int fixed_point_count(const CondensationPoset& p, std::size_t cap = 20);

// Height (maximal transient) upper bound from the node count. For a
// strongly connected graph: (n-1)^2 + 1 when c = 1, otherwise
// floor(max(n-1, (n^2-1)/2 + n^2/c - 3n + 2c)). In general: 2n^2 - 3n + 2.
Int height_upper_bound(std::uint64_t n, const Int& c, bool strongly_connected);

}  // namespace cbn
