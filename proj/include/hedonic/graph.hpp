#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hedonic/coalition.hpp"
#include "hedonic/error.hpp"

namespace hedonic {

enum class Topology { Path, Star, Cycle, Tree, General };

constexpr std::string_view to_string(Topology t) noexcept {
  switch (t) {
    case Topology::Path: return "Path";
    case Topology::Star: return "Star";
    case Topology::Cycle: return "Cycle";
    case Topology::Tree: return "Tree";
    case Topology::General: return "General";
  }
  return "General";
}

using Edge = std::pair<Player, Player>;

/// Default bound on n for enumerating feasible coalitions of a single player.
inline constexpr int kDefaultCoalitionCap = 24;

/// Undirected, connected, simple graph over players 0..n-1. Immutable once built.
class Graph {
 public:
  /// Validates and builds; edges may be given in either orientation.
  static Graph build(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {}) {
    if (n < 2) throw Error(Errc::InvalidEdge, "graph needs at least 2 players, got " + std::to_string(n));
    if (n > kMaxPlayers) throw Error(Errc::TooLarge, "at most 64 players are supported");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw Error(Errc::InvalidEdge, "label table size does not match n");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), Coalition{});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(Errc::InvalidEdge,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw Error(Errc::SelfLoop, "self-loop at player " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (g.adj_[u].contains(v))
        throw Error(Errc::InvalidEdge,
                    "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
      g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.labels_ = std::move(labels);
    if (!g.is_connected_subset(g.players())) throw Error(Errc::DisconnectedGraph, "graph is not connected");
    return g;
  }

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Coalition players() const noexcept { return Coalition::first_n(n_); }
  Coalition neighbors(Player i) const { return adj_[static_cast<std::size_t>(i)]; }
  int degree(Player i) const { return neighbors(i).size(); }
  bool adjacent(Player i, Player j) const { return neighbors(i).contains(j); }

  /// Index of edge {i,j} in edges(), if present.
  std::optional<std::size_t> edge_index(Player i, Player j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{i, j});
    if (it == edges_.end() || *it != Edge{i, j}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Player i) const {
    return labels_.empty() ? std::to_string(i) : labels_[static_cast<std::size_t>(i)];
  }
  std::optional<Player> find_label(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name) return static_cast<Player>(i);
    return std::nullopt;
  }

  /// Players of `s` reachable from `start` inside the subgraph induced by `s`.
  Coalition reach_within(Player start, Coalition s) const {
    Coalition seen = Coalition::singleton(start);
    Coalition frontier = seen;
    while (!frontier.empty()) {
      Coalition next;
      frontier.for_each([&](Player v) { next = next | (neighbors(v) & s); });
      next = next - seen;
      seen = seen | next;
      frontier = next;
    }
    return seen;
  }

  bool is_connected_subset(Coalition s) const {
    if (s.empty()) throw Error(Errc::EmptySet, "connectivity of the empty set is undefined");
    return reach_within(s.min(), s) == s;
  }

  /// Inclusion-maximal connected subsets of `s`, ordered by minimum element.
  std::vector<Coalition> maximal_connected_components(Coalition s) const {
    std::vector<Coalition> out;
    while (!s.empty()) {
      Coalition comp = reach_within(s.min(), s);
      out.push_back(comp);
      s = s - comp;
    }
    return out;
  }

  bool is_tree() const noexcept { return static_cast<int>(edges_.size()) == n_ - 1; }

  /// The vertex adjacent to every other vertex of a tree, if the tree is a star.
  std::optional<Player> star_center() const {
    if (!is_tree() || n_ < 3) return std::nullopt;
    for (Player i = 0; i < n_; ++i)
      if (degree(i) == n_ - 1) return i;
    return std::nullopt;
  }

  /// Most specific label: Path, then Star, then Cycle, then Tree.
  Topology classify() const {
    if (is_tree()) {
      int max_degree = 0;
      for (Player i = 0; i < n_; ++i) max_degree = std::max(max_degree, degree(i));
      if (max_degree <= 2) return Topology::Path;
      if (star_center()) return Topology::Star;
      return Topology::Tree;
    }
    bool two_regular = true;
    for (Player i = 0; i < n_; ++i) two_regular = two_regular && degree(i) == 2;
    if (two_regular) return Topology::Cycle;
    return Topology::General;
  }

  /// Visits every connected subset of `allowed` that contains `root`,
  /// each exactly once.
  template <typename F>
  void for_each_connected_containing(Player root, Coalition allowed, F&& visit) const {
    const Coalition banned = Coalition::singleton(root) | (players() - allowed);
    grow(Coalition::singleton(root), neighbors(root) & allowed, banned, visit);
  }

  /// F(i): all connected subsets containing i, size-then-lexicographic.
  std::vector<Coalition> feasible_coalitions(Player i, int cap = kDefaultCoalitionCap) const {
    if (n_ > cap)
      throw Error(Errc::TooLarge, "feasible-coalition enumeration capped at n=" + std::to_string(cap));
    std::vector<Coalition> out;
    for_each_connected_containing(i, players(), [&](Coalition c) { out.push_back(c); });
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_ && labels_ == o.labels_; }

 private:
  Graph() = default;

  // `banned` always contains `current`; frontier vertices tried earlier in a
  // loop are banned for later siblings, so no set is produced twice.
  template <typename F>
  void grow(Coalition current, Coalition frontier, Coalition banned, F& visit) const {
    visit(current);
    Coalition local_banned = banned;
    for (Coalition rest = frontier; !rest.empty();) {
      const Player v = rest.min();
      rest.erase(v);
      local_banned.insert(v);
      const Coalition next_frontier = (rest | neighbors(v)) - local_banned;
      grow(current.with(v), next_frontier, local_banned, visit);
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Coalition> adj_;
  std::vector<std::string> labels_;
};

}  // namespace hedonic
