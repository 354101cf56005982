#pragma once

#include <optional>
#include <vector>

#include "hedonic/dynamics.hpp"

namespace hedonic {

/// One label per edge of Graph::edges(); nullopt is the initial "no one" label.
using EdgeLabels = std::vector<std::optional<Player>>;

/// What a single move did to the edges around the deviating player.
struct LabeledStep {
  Player alpha = 0;  // deviating player
  Player beta = 0;   // her unique neighbour in the joined coalition
  std::size_t built_edge = 0;
  /// Edges incident to alpha that were built before the move and broken by it,
  /// with the label each carried at that time.
  std::vector<std::pair<std::size_t, std::optional<Player>>> broken;
};

struct LabeledRun {
  RunOutcome outcome;
  /// labels[t] is the labeling in force at state t; labels.size() == states.size().
  std::vector<EdgeLabels> labels;
  std::vector<LabeledStep> steps;
};

/// Edges incident to i whose endpoints share a coalition in pi.
inline std::vector<std::size_t> built_edges_at(const Graph& g, const Partition& pi, Player i) {
  std::vector<std::size_t> out;
  const Coalition mine = pi.coalition_of(i);
  (g.neighbors(i) & mine).for_each([&](Player j) { out.push_back(*g.edge_index(i, j)); });
  return out;
}

/// IS dynamics on a tree with LAS preferences, tracking which endpoint last
/// moved across each edge. The trajectory is the one run_dynamics produces.
inline LabeledRun run_tree_dynamics_labeled(const PreferenceProfile& p, const Partition& initial,
                                            const Scheduler& scheduler, const RunOptions& options = {}) {
  const Graph& g = p.graph();
  if (!g.is_tree()) throw Error(Errc::NotATree, "labeled dynamics require a tree");
  if (p.kind() != PreferenceKind::Additive || !is_las(p))
    throw Error(Errc::NotLAS, "labeled dynamics require LAS preferences");

  LabeledRun run;
  EdgeLabels labels(g.edges().size());
  run.labels.push_back(labels);
  std::vector<std::vector<int>> breaks(static_cast<std::size_t>(g.n()),
                                       std::vector<int>(static_cast<std::size_t>(g.n()), 0));

  run.outcome = detail::run_loop(p, initial, scheduler, options,
                                 [&](const Partition& before, const Deviation& d, const Partition&) {
    if (d.goes_alone())
      throw Error(Errc::NotLAS, "going alone never improves under LAS preferences");
    const Coalition reachable = g.neighbors(d.player) & d.target;
    // In a tree a connected target meets the mover's neighbourhood exactly once.
    LabeledStep step;
    step.alpha = d.player;
    step.beta = reachable.min();
    step.built_edge = *g.edge_index(step.alpha, step.beta);
    for (std::size_t e : built_edges_at(g, before, d.player)) {
      step.broken.emplace_back(e, labels[e]);
      const auto [u, v] = g.edges()[e];
      const Player other = u == d.player ? v : u;
      if (labels[e] == other) ++breaks[static_cast<std::size_t>(d.player)][static_cast<std::size_t>(other)];
      labels[e] = d.player;
    }
    labels[step.built_edge] = d.player;
    run.labels.push_back(labels);
    run.steps.push_back(std::move(step));
  });
  run.outcome.per_player_breaks = std::move(breaks);
  return run;
}

// Per-step invariants ------------------------------------------------------

/// At most one built edge around each player carries that player's label.
inline bool labels_have_unique_own_edge(const Graph& g, const Partition& pi, const EdgeLabels& labels) {
  for (Player i = 0; i < g.n(); ++i) {
    int own = 0;
    for (std::size_t e : built_edges_at(g, pi, i))
      if (labels[e] == i) ++own;
    if (own > 1) return false;
  }
  return true;
}

/// Utility signs of every player across step t of a labeled LAS run.
inline bool labeled_step_utilities_consistent(const PreferenceProfile& p, const Partition& before,
                                              const Partition& after, const EdgeLabels& labels_before,
                                              const LabeledStep& step) {
  const Graph& g = p.graph();
  for (Player i = 0; i < g.n(); ++i) {
    const Rational u0 = p.utility(i, before.coalition_of(i));
    const Rational u1 = p.utility(i, after.coalition_of(i));
    if (i == step.alpha) {
      if (!(u0 < u1) || u1 != p.additive_payload().value(i, step.beta)) return false;
      continue;
    }
    if (!g.adjacent(i, step.alpha)) {
      if (u0 != u1) return false;
      continue;
    }
    const std::size_t e = *g.edge_index(i, step.alpha);
    const bool built = before.same_coalition(i, step.alpha);
    if (built) {
      if (labels_before[e] == i) {
        if (!(u0 > u1)) return false;
      } else if (!(u0 >= u1)) {
        return false;
      }
    } else if (i == step.beta) {
      if (!(u0 <= u1)) return false;
    } else if (u0 != u1) {
      return false;
    }
  }
  return true;
}

}  // namespace hedonic
