#include "cbn/network.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace cbn {

const char* op_kind_name(OpKind op) {
  return op == OpKind::Conjunctive ? "AND" : "OR";
}

BooleanNetwork make_network(std::size_t node_count, OpKind op_kind,
                            const std::vector<std::vector<int>>& inputs_1based,
                            std::vector<std::string>* warnings) {
  if (node_count == 0) {
    throw ParseError("network must have at least one node");
  }
  if (inputs_1based.size() != node_count) {
    throw ParseError("expected " + std::to_string(node_count) +
                     " input lists, got " + std::to_string(inputs_1based.size()));
  }
  BooleanNetwork net;
  net.node_count = node_count;
  net.op_kind = op_kind;
  net.inputs.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    if (inputs_1based[i].empty()) {
      throw ParseError("node " + std::to_string(i + 1) +
                       " has no inputs (constant coordinate function)");
    }
    std::vector<int> list;
    list.reserve(inputs_1based[i].size());
    for (int j : inputs_1based[i]) {
      if (j < 1 || static_cast<std::size_t>(j) > node_count) {
        throw ParseError("node " + std::to_string(i + 1) + ": input index " +
                         std::to_string(j) + " out of range [1, " +
                         std::to_string(node_count) + "]");
      }
      list.push_back(j - 1);
    }
    std::sort(list.begin(), list.end());
    auto dup = std::unique(list.begin(), list.end());
    if (dup != list.end()) {
      list.erase(dup, list.end());
      if (warnings) {
        warnings->push_back("node " + std::to_string(i + 1) +
                            ": duplicate inputs de-duplicated");
      }
    }
    net.inputs[i] = std::move(list);
  }
  return net;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BooleanNetwork parse_network(std::istream& in,
                             std::vector<std::string>* warnings) {
  std::string line;
  std::size_t node_count = 0;
  OpKind op = OpKind::Conjunctive;
  bool have_header = false;

  std::vector<std::vector<int>> inputs;
  std::vector<bool> defined;
  std::size_t defined_count = 0;

  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;

    if (!have_header) {
      std::istringstream ls(line);
      long long n = 0;
      std::string op_word;
      if (!(ls >> n >> op_word) || n <= 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed header, expected \"<n> <AND|OR>\"");
      }
      std::string rest;
      if (ls >> rest) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": trailing content after header");
      }
      if (op_word == "AND") {
        op = OpKind::Conjunctive;
      } else if (op_word == "OR") {
        op = OpKind::Disjunctive;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unsupported operator \"" + op_word +
                         "\" (only AND and OR networks are supported)");
      }
      node_count = static_cast<std::size_t>(n);
      inputs.assign(node_count, {});
      defined.assign(node_count, false);
      have_header = true;
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected \"<i>: <inputs>\"");
    }
    std::istringstream head(line.substr(0, colon));
    long long i = 0;
    std::string junk;
    if (!(head >> i) || (head >> junk)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": malformed node index before ':'");
    }
    if (i < 1 || static_cast<std::size_t>(i) > node_count) {
      throw ParseError("line " + std::to_string(line_no) + ": node index " +
                       std::to_string(i) + " out of range [1, " +
                       std::to_string(node_count) + "]");
    }
    if (defined[i - 1]) {
      throw ParseError("line " + std::to_string(line_no) + ": node " +
                       std::to_string(i) + " defined twice");
    }
    std::istringstream body(line.substr(colon + 1));
    std::vector<int> list;
    long long j;
    while (body >> j) {
      if (j < 1 || static_cast<std::size_t>(j) > node_count) {
        throw ParseError("line " + std::to_string(line_no) + ": input index " +
                         std::to_string(j) + " out of range [1, " +
                         std::to_string(node_count) + "]");
      }
      list.push_back(static_cast<int>(j));
    }
    if (!body.eof()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": non-numeric input token");
    }
    if (list.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": node " +
                       std::to_string(i) +
                       " has no inputs (constant coordinate function)");
    }
    inputs[i - 1] = std::move(list);
    defined[i - 1] = true;
    ++defined_count;
  }

  if (!have_header) throw ParseError("empty input: missing header line");
  if (defined_count != node_count) {
    for (std::size_t i = 0; i < node_count; ++i) {
      if (!defined[i]) {
        throw ParseError("missing line for node " + std::to_string(i + 1));
      }
    }
  }
  return make_network(node_count, op, inputs, warnings);
}

BooleanNetwork parse_network(const std::string& text,
                             std::vector<std::string>* warnings) {
  std::istringstream is(text);
  return parse_network(is, warnings);
}

BooleanNetwork parse_network_file(const std::string& path,
                                  std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_network(in, warnings);
}

std::string serialize_network(const BooleanNetwork& net) {
  std::ostringstream os;
  os << net.node_count << ' ' << op_kind_name(net.op_kind) << '\n';
  for (std::size_t i = 0; i < net.node_count; ++i) {
    os << (i + 1) << ':';
    for (int j : net.inputs[i]) os << ' ' << (j + 1);
    os << '\n';
  }
  return os.str();
}

State evaluate(const BooleanNetwork& net, const State& s) {
  if (s.size() != net.node_count) {
    throw std::invalid_argument("evaluate: state length " +
                                std::to_string(s.size()) +
                                " does not match node count " +
                                std::to_string(net.node_count));
  }
  State out(net.node_count);
  const bool conj = net.op_kind == OpKind::Conjunctive;
  for (std::size_t i = 0; i < net.node_count; ++i) {
    bool v = conj;
    for (int j : net.inputs[i]) {
      if (conj) {
        v = v && s[j];
      } else {
        v = v || s[j];
      }
    }
    out[i] = v;
  }
  return out;
}

State complement(State s) {
  s.flip();
  return s;
}

BooleanNetwork to_conjunctive(const BooleanNetwork& net, bool* was_conjunctive) {
  if (was_conjunctive) *was_conjunctive = net.op_kind == OpKind::Conjunctive;
  BooleanNetwork out = net;
  out.op_kind = OpKind::Conjunctive;
  return out;
}

BoolMatrix dependency_graph(const BooleanNetwork& net) {
  BoolMatrix a(net.node_count);
  for (std::size_t i = 0; i < net.node_count; ++i) {
    for (int j : net.inputs[i]) a.set(i, static_cast<std::size_t>(j));
  }
  return a;
}

std::string dependency_dot(const BooleanNetwork& net) {
  // Edge j -> i for every input j of node i, sorted by (source, target).
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < net.node_count; ++i) {
    for (int j : net.inputs[i]) edges.emplace(j + 1, static_cast<int>(i) + 1);
  }
  std::ostringstream os;
  os << "digraph dependency {\n";
  for (std::size_t i = 1; i <= net.node_count; ++i) {
    os << "  x" << i << ";\n";
  }
  for (const auto& [from, to] : edges) {
    os << "  x" << from << " -> x" << to << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string state_to_string(const State& s) {
  std::string out;
  out.reserve(s.size());
  for (bool b : s) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace cbn
