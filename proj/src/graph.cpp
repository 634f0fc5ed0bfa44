#include "cbn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace cbn {

bool SccDecomposition::has_trivial_component() const {
  return std::any_of(loop_numbers.begin(), loop_numbers.end(),
                     [](std::uint64_t l) { return l == 0; });
}

std::vector<std::vector<int>> graph_successors(const BoolMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> succ(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (a.get(v, u)) succ[u].push_back(static_cast<int>(v));
    }
  }
  return succ;
}

namespace {

// Iterative Tarjan. SCCs are completed sinks-first; reversing the
// completion order yields a topological order of the condensation.
std::vector<std::vector<int>> tarjan_sccs(
    const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int next_index = 0;

  struct Frame {
    int vertex;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      int v = f.vertex;
      if (f.child < succ[v].size()) {
        int w = succ[v][f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().vertex;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
          std::vector<int> scc;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc.push_back(w);
          } while (w != v);
          std::sort(scc.begin(), scc.end());
          sccs.push_back(std::move(scc));
        }
      }
    }
  }
  std::reverse(sccs.begin(), sccs.end());
  return sccs;
}

// Breadth-first depths from `root` restricted to the component; in a
// strongly connected subgraph the walk reaches every member vertex.
std::vector<int> component_depths(const std::vector<std::vector<int>>& succ,
                                  const std::vector<bool>& in_component,
                                  int root) {
  std::vector<int> depth(succ.size(), -1);
  std::queue<int> queue;
  depth[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : succ[u]) {
      if (in_component[v] && depth[v] == -1) {
        depth[v] = depth[u] + 1;
        queue.push(v);
      }
    }
  }
  return depth;
}

std::vector<bool> membership_mask(std::size_t n,
                                  const std::vector<int>& component) {
  std::vector<bool> mask(n, false);
  for (int v : component) mask[v] = true;
  return mask;
}

}  // namespace

std::uint64_t loop_number_scc(const BoolMatrix& a,
                              const std::vector<int>& component) {
  if (component.empty()) {
    throw std::invalid_argument("loop_number_scc: empty component");
  }
  if (component.size() == 1) {
    int v = component.front();
    return a.get(v, v) ? 1 : 0;
  }
  auto succ = graph_successors(a);
  auto in_comp = membership_mask(a.size(), component);
  int root = *std::min_element(component.begin(), component.end());
  auto depth = component_depths(succ, in_comp, root);

  // gcd over intra-component edges (u, v) of depth(u) + 1 - depth(v); this
  // is the index of imprimitivity of the component.
  std::uint64_t g = 0;
  for (int u : component) {
    for (int v : succ[u]) {
      if (!in_comp[v]) continue;
      long long diff = static_cast<long long>(depth[u]) + 1 - depth[v];
      g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
    }
  }
  return g;
}

SccDecomposition scc_decompose(const BoolMatrix& a) {
  SccDecomposition d;
  d.components = tarjan_sccs(graph_successors(a));
  d.component_of.assign(a.size(), -1);
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    for (int v : d.components[c]) d.component_of[v] = static_cast<int>(c);
  }
  d.loop_numbers.reserve(d.components.size());
  d.graph_loop_number = 1;
  bool any_nontrivial = false;
  for (const auto& comp : d.components) {
    std::uint64_t l = loop_number_scc(a, comp);
    d.loop_numbers.push_back(l);
    if (l != 0) {
      d.graph_loop_number = boost::multiprecision::lcm(d.graph_loop_number, Int(l));
      any_nontrivial = true;
    }
  }
  if (!any_nontrivial) d.graph_loop_number = 0;
  return d;
}

CondensationPoset condensation_poset(const SccDecomposition& d,
                                     const BoolMatrix& a) {
  const std::size_t t = d.size();
  CondensationPoset p;
  p.size = t;
  p.leq.assign(t, std::vector<bool>(t, false));
  for (std::size_t i = 0; i < t; ++i) p.leq[i][i] = true;

  auto succ = graph_successors(a);
  std::vector<std::vector<bool>> direct(t, std::vector<bool>(t, false));
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (int v : succ[u]) {
      int cu = d.component_of[u];
      int cv = d.component_of[v];
      if (cu != cv) direct[cu][cv] = true;
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (direct[i][j]) {
        p.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        p.leq[i][j] = true;
      }
    }
  }
  // Reflexive-transitive closure. Components are topologically ordered, so
  // direct edges only point forward and a reverse sweep finishes each row
  // after its successors' rows.
  for (std::size_t i = t; i-- > 0;) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (!direct[i][j]) continue;
      for (std::size_t m = 0; m < t; ++m) {
        if (p.leq[j][m]) p.leq[i][m] = true;
      }
    }
  }
  return p;
}

std::vector<int> up_closure(const CondensationPoset& p,
                            const std::vector<int>& j_set, bool strict) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(p.size); ++k) {
    for (int j : j_set) {
      if (p.leq[j][k] && !(strict && j == k)) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

std::vector<int> down_closure(const CondensationPoset& p,
                              const std::vector<int>& j_set, bool strict) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(p.size); ++k) {
    for (int j : j_set) {
      if (p.leq[k][j] && !(strict && j == k)) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> maximal_antichains(const CondensationPoset& p,
                                                 std::size_t cap) {
  const std::size_t t = p.size;
  if (t > cap) {
    throw CapError("too many components for antichain enumeration (" +
                   std::to_string(t) + " > cap " + std::to_string(cap) + ")");
  }
  if (t == 0) return {};
  std::vector<std::uint64_t> comparable(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (p.comparable(static_cast<int>(i), static_cast<int>(j))) {
        comparable[i] |= std::uint64_t(1) << j;
      }
    }
  }
  std::vector<std::vector<int>> result;
  const std::uint64_t limit = std::uint64_t(1) << t;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool antichain = true;
    for (std::size_t i = 0; i < t && antichain; ++i) {
      if ((mask >> i) & 1) {
        if ((comparable[i] & mask) != (std::uint64_t(1) << i)) antichain = false;
      }
    }
    if (!antichain) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < t && maximal; ++v) {
      if (!((mask >> v) & 1) && (comparable[v] & mask) == 0) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> set;
    for (std::size_t i = 0; i < t; ++i) {
      if ((mask >> i) & 1) set.push_back(static_cast<int>(i));
    }
    result.push_back(std::move(set));
  }
  std::sort(result.begin(), result.end());
  return result;
}

CyclicPartition cyclic_partition(const BoolMatrix& a,
                                 const std::vector<int>& component,
                                 std::uint64_t k) {
  std::uint64_t c = loop_number_scc(a, component);
  if (c == 0) {
    throw TrivialComponentError(
        "cyclic_partition: component is trivial (no cycle)");
  }
  if (k == 0 || c % k != 0) {
    throw std::invalid_argument("cyclic_partition: k = " + std::to_string(k) +
                                " does not divide the loop number " +
                                std::to_string(c));
  }
  auto succ = graph_successors(a);
  auto in_comp = membership_mask(a.size(), component);
  int root = *std::min_element(component.begin(), component.end());
  auto depth = component_depths(succ, in_comp, root);

  // All walks between two fixed vertices agree modulo c, hence modulo k;
  // depth mod k is therefore independent of the tree and respects edges.
  CyclicPartition part;
  part.k = k;
  part.classes.assign(k, {});
  for (int v : component) {
    part.classes[static_cast<std::uint64_t>(depth[v]) % k].push_back(v);
  }
  for (auto& cls : part.classes) std::sort(cls.begin(), cls.end());
  return part;
}

}  // namespace cbn
