#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hedonic/dynamics.hpp"

namespace hedonic {

inline constexpr int kDefaultEnumerationCap = 10;
inline constexpr int kDefaultPathEnumerationCap = 14;

/// Cap on n for full state enumeration; HEDONIC_MAX_ENUM overrides both defaults.
inline int enumeration_cap(const Graph& g) {
  if (const char* env = std::getenv("HEDONIC_MAX_ENUM"); env && *env) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "HEDONIC_MAX_ENUM must be an integer");
    }
  }
  return g.classify() == Topology::Path ? kDefaultPathEnumerationCap : kDefaultEnumerationCap;
}

namespace detail {

inline void enumerate_partitions_rec(const Graph& g, Coalition remaining, std::vector<Coalition>& parts,
                                     std::vector<Partition>& out) {
  if (remaining.empty()) {
    out.push_back(Partition::from_canonical_parts(parts));
    return;
  }
  std::vector<Coalition> options;
  g.for_each_connected_containing(remaining.min(), remaining, [&](Coalition c) { options.push_back(c); });
  std::sort(options.begin(), options.end(), size_lex_less);
  for (Coalition c : options) {
    parts.push_back(c);
    enumerate_partitions_rec(g, remaining - c, parts, out);
    parts.pop_back();
  }
}

}  // namespace detail

/// Every feasible partition, in a fixed order: the coalition of the smallest
/// unassigned player is chosen size-then-lexicographically, recursively.
inline std::vector<Partition> enumerate_feasible_partitions(const Graph& g, std::optional<int> cap = {}) {
  const int limit = cap.value_or(enumeration_cap(g));
  if (g.n() > limit)
    throw Error(Errc::TooLarge, "state enumeration capped at n=" + std::to_string(limit) + ", graph has " +
                                    std::to_string(g.n()) + " players");
  std::vector<Partition> out;
  std::vector<Coalition> parts;
  detail::enumerate_partitions_rec(g, g.players(), parts, out);
  return out;
}

/// First IS partition in enumeration order, if any.
inline std::optional<Partition> exists_is_partition(const PreferenceProfile& p, std::optional<int> cap = {}) {
  for (auto& pi : enumerate_feasible_partitions(p.graph(), cap))
    if (verify_is(p, pi)) return pi;
  return std::nullopt;
}

struct StateArc {
  std::size_t to = 0;
  Deviation deviation;
};

/// Deviation graph over all feasible partitions.
struct StateGraph {
  std::vector<Partition> nodes;
  std::vector<std::vector<StateArc>> arcs;
  std::unordered_map<Partition, std::size_t> index;

  std::size_t arc_count() const {
    std::size_t total = 0;
    for (const auto& a : arcs) total += a.size();
    return total;
  }
  std::vector<std::size_t> sinks() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < arcs.size(); ++v)
      if (arcs[v].empty()) out.push_back(v);
    return out;
  }
  std::size_t node_of(const Partition& pi) const {
    auto it = index.find(pi);
    if (it == index.end()) throw Error(Errc::InvalidPartition, "partition is not a node of the state graph");
    return it->second;
  }
};

inline StateGraph build_state_graph(const PreferenceProfile& p, std::optional<int> cap = {}) {
  StateGraph sg;
  sg.nodes = enumerate_feasible_partitions(p.graph(), cap);
  sg.index.reserve(sg.nodes.size());
  for (std::size_t v = 0; v < sg.nodes.size(); ++v) sg.index.emplace(sg.nodes[v], v);
  sg.arcs.resize(sg.nodes.size());
  for (std::size_t v = 0; v < sg.nodes.size(); ++v)
    for (const auto& d : find_is_deviations(p, sg.nodes[v]))
      sg.arcs[v].push_back({sg.index.at(apply_deviation(p.graph(), sg.nodes[v], d)), d});
  return sg;
}

struct Certified {};
/// A directed cycle of states; front() == back().
struct CounterCycle {
  std::vector<std::size_t> states;
  std::size_t length() const { return states.empty() ? 0 : states.size() - 1; }
};
using Certificate = std::variant<Certified, CounterCycle>;

inline bool is_certified(const Certificate& c) { return std::holds_alternative<Certified>(c); }

/// Acyclicity of the part of `sg` reachable from states accepted by `filter`.
inline Certificate certify_convergence_from(const StateGraph& sg,
                                            const std::function<bool(const Partition&)>& filter) {
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(sg.nodes.size(), White);
  std::vector<std::size_t> parent(sg.nodes.size(), 0);
  struct Frame {
    std::size_t node;
    std::size_t next_arc;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < sg.nodes.size(); ++root) {
    if (color[root] != White || !filter(sg.nodes[root])) continue;
    stack.push_back({root, 0});
    color[root] = Grey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next_arc == sg.arcs[top.node].size()) {
        color[top.node] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t to = sg.arcs[top.node][top.next_arc++].to;
      if (color[to] == Grey) {
        CounterCycle cycle;
        for (std::size_t k = 0; k < stack.size(); ++k)
          if (stack[k].node == to) {
            for (std::size_t m = k; m < stack.size(); ++m) cycle.states.push_back(stack[m].node);
            break;
          }
        cycle.states.push_back(to);
        return cycle;
      }
      if (color[to] == White) {
        color[to] = Grey;
        stack.push_back({to, 0});
      }
    }
  }
  return Certified{};
}

/// Certified iff no cyclic sequence exists from any state under any scheduler.
inline Certificate certify_convergence(const StateGraph& sg) {
  return certify_convergence_from(sg, [](const Partition&) { return true; });
}

/// The part of `sg` reachable from states accepted by `filter`, reindexed.
inline StateGraph restrict_reachable(const StateGraph& sg, const std::function<bool(const Partition&)>& filter) {
  const std::size_t none = sg.nodes.size();
  std::vector<std::size_t> remap(sg.nodes.size(), none);
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < sg.nodes.size(); ++v)
    if (remap[v] == none && filter(sg.nodes[v])) {
      remap[v] = order.size();
      order.push_back(v);
      for (std::size_t k = order.size() - 1; k < order.size(); ++k)
        for (const auto& arc : sg.arcs[order[k]])
          if (remap[arc.to] == none) {
            remap[arc.to] = order.size();
            order.push_back(arc.to);
          }
    }
  StateGraph out;
  out.arcs.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.nodes.push_back(sg.nodes[order[k]]);
    out.index.emplace(sg.nodes[order[k]], k);
    for (const auto& arc : sg.arcs[order[k]]) out.arcs[k].push_back({remap[arc.to], arc.deviation});
  }
  return out;
}

struct Trajectory {
  std::size_t length = 0;
  std::vector<std::size_t> path;  // node indices, path.size() == length + 1
};

/// Exact longest directed path of an acyclic state graph.
inline Trajectory longest_trajectory(const StateGraph& sg) {
  if (!is_certified(certify_convergence(sg)))
    throw Error(Errc::GraphHasCycle, "longest trajectory is undefined on a cyclic state graph");
  const std::size_t count = sg.nodes.size();
  // Reverse post-order of a DFS is a topological order.
  std::vector<std::size_t> order;
  order.reserve(count);
  std::vector<bool> done(count, false);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < count; ++root) {
    if (done[root]) continue;
    done[root] = true;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (k == sg.arcs[v].size()) {
        order.push_back(v);
        stack.pop_back();
        continue;
      }
      const std::size_t to = sg.arcs[v][k++].to;
      if (!done[to]) {
        done[to] = true;
        stack.emplace_back(to, 0);
      }
    }
  }
  // `order` lists sinks first; longest[v] = longest path starting at v.
  std::vector<std::size_t> longest(count, 0);
  std::vector<std::size_t> succ(count, count);
  for (std::size_t v : order)
    for (const auto& arc : sg.arcs[v])
      if (longest[arc.to] + 1 > longest[v]) {
        longest[v] = longest[arc.to] + 1;
        succ[v] = arc.to;
      }
  Trajectory best;
  std::size_t start = 0;
  for (std::size_t v = 0; v < count; ++v)
    if (longest[v] > longest[start]) start = v;
  best.length = count ? longest[start] : 0;
  if (count == 0) return best;
  for (std::size_t v = start;; v = succ[v]) {
    best.path.push_back(v);
    if (succ[v] == count) break;
  }
  return best;
}

inline std::string to_dot(const StateGraph& sg, const Graph& g) {
  std::ostringstream out;
  out << "digraph states {\n";
  for (std::size_t v = 0; v < sg.nodes.size(); ++v) {
    out << "  s" << v << " [label=\"" << sg.nodes[v].to_string(g) << "\"";
    if (sg.arcs[v].empty()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t v = 0; v < sg.nodes.size(); ++v)
    for (const auto& arc : sg.arcs[v])
      out << "  s" << v << " -> s" << arc.to << " [label=\"" << g.label(arc.deviation.player) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace hedonic
