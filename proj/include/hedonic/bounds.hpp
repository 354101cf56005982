#pragma once

#include <cstdint>
#include <vector>

#include "hedonic/graph.hpp"

namespace hedonic {

/// A tree hung from `root`: parents, children, subtrees and heights.
class RootedTree {
 public:
  RootedTree(const Graph& tree, Player root) : graph_(&tree), root_(root) {
    if (!tree.is_tree()) throw Error(Errc::NotATree, "rooted tree needs a tree graph");
    if (root < 0 || root >= tree.n()) throw Error(Errc::InvalidEdge, "root out of range");
    const auto n = static_cast<std::size_t>(tree.n());
    parent_.assign(n, -1);
    children_.assign(n, Coalition{});
    subtree_.assign(n, Coalition{});
    height_.assign(n, 0);
    std::vector<Player> order{root};
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Player v = order[k];
      (tree.neighbors(v) - Coalition::singleton(parent_of_or_self(v))).for_each([&](Player c) {
        parent_[static_cast<std::size_t>(c)] = v;
        children_[static_cast<std::size_t>(v)].insert(c);
        order.push_back(c);
      });
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto v = static_cast<std::size_t>(*it);
      subtree_[v].insert(*it);
      children_[v].for_each([&](Player c) {
        subtree_[v] = subtree_[v] | subtree_[static_cast<std::size_t>(c)];
        height_[v] = std::max(height_[v], height_[static_cast<std::size_t>(c)] + 1);
      });
    }
  }

  const Graph& graph() const noexcept { return *graph_; }
  Player root() const noexcept { return root_; }
  /// p(i); -1 for the root.
  Player parent(Player i) const { return parent_[static_cast<std::size_t>(i)]; }
  /// C_i.
  Coalition children(Player i) const { return children_[static_cast<std::size_t>(i)]; }
  /// D_i, including i.
  Coalition subtree(Player i) const { return subtree_[static_cast<std::size_t>(i)]; }
  /// d_i: longest distance from i down to a leaf of D_i.
  int height(Player i) const { return height_[static_cast<std::size_t>(i)]; }
  bool is_ancestor_or_self(Player ancestor, Player j) const { return subtree(ancestor).contains(j); }

 private:
  Player parent_of_or_self(Player v) const {
    const Player p = parent_[static_cast<std::size_t>(v)];
    return p < 0 ? v : p;
  }

  const Graph* graph_;
  Player root_;
  std::vector<Player> parent_;
  std::vector<Coalition> children_;
  std::vector<Coalition> subtree_;
  std::vector<int> height_;
};

/// Product of child counts along the upward path j = q_0, ..., q_k = ancestor.
/// Zero whenever j is a leaf.
inline std::uint64_t m_coefficient(const RootedTree& rt, Player j, Player ancestor) {
  if (!rt.is_ancestor_or_self(ancestor, j))
    throw Error(Errc::NotAnAncestor, "player " + std::to_string(ancestor) + " is not an ancestor of " +
                                         std::to_string(j));
  std::uint64_t product = 1;
  for (Player q = j;; q = rt.parent(q)) {
    product *= static_cast<std::uint64_t>(rt.children(q).size());
    if (q == ancestor || product == 0) break;
  }
  return product;
}

/// Upper bound on how often the root can deviate in an LAS tree run:
/// sum over all players j of m_coefficient(j, root).
inline std::uint64_t tree_deviation_bound(const RootedTree& rt) {
  std::uint64_t total = 0;
  for (Player j = 0; j < rt.graph().n(); ++j) total += m_coefficient(rt, j, rt.root());
  return total;
}

/// The bound above for every choice of root, indexed by player.
inline std::vector<std::uint64_t> tree_deviation_bounds(const Graph& tree) {
  std::vector<std::uint64_t> out;
  for (Player r = 0; r < tree.n(); ++r) out.push_back(tree_deviation_bound(RootedTree(tree, r)));
  return out;
}

}  // namespace hedonic
