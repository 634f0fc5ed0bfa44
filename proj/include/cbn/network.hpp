#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cbn/bool_matrix.hpp"
#include "cbn/errors.hpp"

namespace cbn {

enum class OpKind { Conjunctive, Disjunctive };

const char* op_kind_name(OpKind op);  // "AND" / "OR"

// One Boolean state, bits[i] = value of x_{i+1}.
using State = std::vector<bool>;

// A conjunctive (all-AND) or disjunctive (all-OR) Boolean network on n
// nodes. inputs[i] holds the 0-based indices of the variables of node i+1,
// sorted ascending and duplicate-free; no input list is empty (no
// coordinate function is constant). Immutable by convention once built.
struct BooleanNetwork {
  std::size_t node_count = 0;
  OpKind op_kind = OpKind::Conjunctive;
  std::vector<std::vector<int>> inputs;
};

// Validates and normalizes (sorts, de-duplicates) 1-based input lists.
// Appends one warning per de-duplicated list when `warnings` is given.
BooleanNetwork make_network(std::size_t node_count, OpKind op_kind,
                            const std::vector<std::vector<int>>& inputs_1based,
                            std::vector<std::string>* warnings = nullptr);

// Network file format:
//   line 1:  "<n> <AND|OR>"
//   n lines: "<i>: <j1> <j2> ..."      (all indices 1-based)
// Blank lines and lines starting with '#' are ignored.
BooleanNetwork parse_network(std::istream& in,
                             std::vector<std::string>* warnings = nullptr);
BooleanNetwork parse_network(const std::string& text,
                             std::vector<std::string>* warnings = nullptr);
BooleanNetwork parse_network_file(const std::string& path,
                                  std::vector<std::string>* warnings = nullptr);

// Canonical form: header line, then one sorted input line per node.
// parse(serialize(net)) == net.
std::string serialize_network(const BooleanNetwork& net);

// Applies the network map once: out[i] is the AND (conjunctive) or OR
// (disjunctive) of the state over inputs[i].
State evaluate(const BooleanNetwork& net, const State& s);

// Flips every bit; involution.
State complement(State s);

// The conjunctive network with the same input lists. Its phase space is
// isomorphic to the disjunctive input's via the complement map. If `net`
// is already conjunctive the copy is returned unchanged and
// *was_conjunctive, when given, is set.
BooleanNetwork to_conjunctive(const BooleanNetwork& net,
                              bool* was_conjunctive = nullptr);

// Variable matrix A with A[i][j] = 1 iff x_{j+1} is an input of node i+1;
// in dependency-graph terms an edge j -> i.
BoolMatrix dependency_graph(const BooleanNetwork& net);

// DOT rendering of the dependency graph, nodes labeled x1..xn, edges in
// ascending (source, target) order.
std::string dependency_dot(const BooleanNetwork& net);

std::string state_to_string(const State& s);

}  // namespace cbn
