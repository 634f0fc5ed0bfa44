#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cbn/bool_matrix.hpp"
#include "cbn/cycle_poly.hpp"
#include "cbn/errors.hpp"

namespace cbn {

// Strongly connected components of the dependency graph, listed in a
// topological order of the condensation (sources first). That ordering is
// what puts the adjacency matrix in block-triangular normal form, so no
// explicit permutation matrix is ever materialized.
struct SccDecomposition {
  std::vector<std::vector<int>> components;  // each sorted ascending
  std::vector<int> component_of;             // vertex -> component index
  std::vector<std::uint64_t> loop_numbers;   // 0 for a trivial component
  Int graph_loop_number;                     // lcm of the non-zero entries

  std::size_t size() const { return components.size(); }
  bool has_trivial_component() const;
};

// Adjacency lists in graph orientation: successors(u) = { v : A[v][u] },
// i.e. u is an input of v.
std::vector<std::vector<int>> graph_successors(const BoolMatrix& a);

SccDecomposition scc_decompose(const BoolMatrix& a);

// gcd of the lengths of all directed cycles through the component (the
// index of imprimitivity); 0 when the component is a single vertex with no
// self-loop. `component` must be one SCC of `a`.
std::uint64_t loop_number_scc(const BoolMatrix& a,
                              const std::vector<int>& component);

// Partial order on components: i <= j iff there is an edge path from
// component i to component j (components feed forward along <=).
struct CondensationPoset {
  std::size_t size = 0;
  std::vector<std::vector<bool>> leq;        // reflexive-transitive closure
  std::vector<std::pair<int, int>> covers;   // direct inter-component edges

  bool less_eq(int i, int j) const { return leq[i][j]; }
  bool comparable(int i, int j) const { return leq[i][j] || leq[j][i]; }
};

CondensationPoset condensation_poset(const SccDecomposition& d,
                                     const BoolMatrix& a);

// J^<= (strict=false) or J^< (strict=true): components above some j in J.
std::vector<int> up_closure(const CondensationPoset& p,
                            const std::vector<int>& j_set, bool strict);
// J^>= / J^>: components below some j in J.
std::vector<int> down_closure(const CondensationPoset& p,
                              const std::vector<int>& j_set, bool strict);

// All inclusion-maximal sets of pairwise incomparable components, sorted
// lexicographically. Throws CapError when p.size exceeds `cap` (the number
// of antichains can be exponential in the component count).
std::vector<std::vector<int>> maximal_antichains(const CondensationPoset& p,
                                                 std::size_t cap = 20);

// Partition of a non-trivial SCC into k classes such that every
// intra-component edge steps from class i to class (i+1) mod k; exists for
// every divisor k of the component's loop number. Class 0 contains the
// lowest-numbered vertex.
struct CyclicPartition {
  std::uint64_t k = 1;
  std::vector<std::vector<int>> classes;  // k classes, each sorted, non-empty
};

CyclicPartition cyclic_partition(const BoolMatrix& a,
                                 const std::vector<int>& component,
                                 std::uint64_t k);

}  // namespace cbn
