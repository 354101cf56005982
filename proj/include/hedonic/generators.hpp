#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "hedonic/prefs.hpp"

// Random instances whose preferences stay inside a given class, for
// property-style checks of the convergence results.
namespace hedonic::gen {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Player i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

/// Player 0 is the center.
inline Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (Player i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::build(n, edges);
}

/// Uniform attachment tree: vertex i links to a uniformly chosen earlier vertex.
inline Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (Player i = 1; i < n; ++i) edges.emplace_back(uniform_int(rng, 0, i - 1), i);
  return Graph::build(n, edges);
}

/// Groups an ordered list (best first) into consecutive random tiers.
inline std::vector<std::vector<Coalition>> random_tiers(const std::vector<Coalition>& ordered, Rng& rng) {
  std::vector<std::vector<Coalition>> tiers;
  std::bernoulli_distribution tie(0.3);
  for (Coalition c : ordered) {
    if (tiers.empty() || !tie(rng)) tiers.emplace_back();
    tiers.back().push_back(c);
  }
  return tiers;
}

/// Arbitrary weak orders over each F(i).
inline PreferenceProfile random_general(const Graph& g, Rng& rng) {
  std::vector<PlayerTiers> players;
  for (Player i = 0; i < g.n(); ++i) {
    auto family = g.feasible_coalitions(i);
    std::shuffle(family.begin(), family.end(), rng);
    players.push_back({random_tiers(family, rng), 0});
  }
  return PreferenceProfile::ranked(g, std::move(players));
}

/// Random tiers with the singleton pinned to the bottom tier.
inline PreferenceProfile random_ir(const Graph& g, Rng& rng) {
  std::vector<PlayerTiers> players;
  for (Player i = 0; i < g.n(); ++i) {
    auto family = g.feasible_coalitions(i);
    const Coalition alone = Coalition::singleton(i);
    family.erase(std::find(family.begin(), family.end(), alone));
    std::shuffle(family.begin(), family.end(), rng);
    auto tiers = random_tiers(family, rng);
    std::bernoulli_distribution join_bottom(0.3);
    if (tiers.empty() || !join_bottom(rng)) tiers.emplace_back();
    tiers.back().push_back(alone);
    players.push_back({std::move(tiers), 0});
  }
  return PreferenceProfile::ranked(g, std::move(players));
}

/// Random linear extension of "superset before subset", then random ties
/// between neighbours in that order.
inline PreferenceProfile random_monotone(const Graph& g, Rng& rng) {
  std::vector<PlayerTiers> players;
  for (Player i = 0; i < g.n(); ++i) {
    auto family = g.feasible_coalitions(i);
    std::vector<Coalition> ordered;
    std::vector<bool> placed(family.size(), false);
    while (ordered.size() < family.size()) {
      // Ready: every feasible strict superset already placed.
      std::vector<std::size_t> ready;
      for (std::size_t a = 0; a < family.size(); ++a) {
        if (placed[a]) continue;
        bool ok = true;
        for (std::size_t b = 0; b < family.size() && ok; ++b)
          if (!placed[b] && b != a && family[a].is_subset_of(family[b])) ok = false;
        if (ok) ready.push_back(a);
      }
      const std::size_t pick = ready[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(ready.size()) - 1))];
      placed[pick] = true;
      ordered.push_back(family[pick]);
    }
    players.push_back({random_tiers(ordered, rng), 0});
  }
  return PreferenceProfile::ranked(g, std::move(players));
}

/// Uniform integer values in [0, hi] on edges (each direction independently), 0 elsewhere.
inline PreferenceProfile random_las(const Graph& g, Rng& rng, int hi = 5) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n, 0));
  for (auto [a, b] : g.edges()) {
    v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = uniform_int(rng, 0, hi);
    v[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = uniform_int(rng, 0, hi);
  }
  return PreferenceProfile::additive(g, std::move(v));
}

/// Integer values in [lo, hi] for every ordered pair; no class guarantee.
inline PreferenceProfile random_additive(const Graph& g, Rng& rng, int lo, int hi) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) v[a][b] = uniform_int(rng, lo, hi);
  return PreferenceProfile::additive(g, std::move(v));
}

}  // namespace hedonic::gen
