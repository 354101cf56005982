#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hedonic/coalition.hpp"
#include "hedonic/error.hpp"
#include "hedonic/graph.hpp"

namespace hedonic {

using Rational = boost::rational<std::int64_t>;

enum class Ordering { Prefer, Indifferent, Disprefer };

/// One player's weak order over F(i) as tiers, tier 0 being the best.
/// Coalitions that are not listed sit in `default_tier`.
struct PlayerTiers {
  std::vector<std::vector<Coalition>> tiers;
  int default_tier = 0;
};

class RankedPreference {
 public:
  RankedPreference() = default;
  explicit RankedPreference(std::vector<PlayerTiers> players) : players_(std::move(players)) {
    index_.resize(players_.size());
    for (std::size_t i = 0; i < players_.size(); ++i) {
      auto& p = players_[i];
      if (p.tiers.empty()) p.tiers.emplace_back();
      for (std::size_t t = 0; t < p.tiers.size(); ++t)
        for (Coalition c : p.tiers[t]) index_[i].emplace(c, static_cast<int>(t));
    }
  }

  const std::vector<PlayerTiers>& players() const noexcept { return players_; }

  int tier_of(Player i, Coalition s) const {
    const auto& idx = index_[static_cast<std::size_t>(i)];
    auto it = idx.find(s);
    return it == idx.end() ? players_[static_cast<std::size_t>(i)].default_tier : it->second;
  }

 private:
  std::vector<PlayerTiers> players_;
  std::vector<std::unordered_map<Coalition, int>> index_;
};

/// Additively separable values; v[i][j] is what i gets from sharing a coalition with j.
class AdditiveValuation {
 public:
  AdditiveValuation() = default;
  explicit AdditiveValuation(std::vector<std::vector<Rational>> values) : values_(std::move(values)) {}

  const std::vector<std::vector<Rational>>& values() const noexcept { return values_; }
  const Rational& value(Player i, Player j) const {
    return values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  Rational utility(Player i, Coalition s) const {
    Rational u = 0;
    s.without(i).for_each([&](Player j) { u += value(i, j); });
    return u;
  }

 private:
  std::vector<std::vector<Rational>> values_;
};

enum class PreferenceKind { Ranked, Additive };

/// Preferences of every player of a game, bound to the game's graph.
class PreferenceProfile {
 public:
  static PreferenceProfile ranked(Graph g, std::vector<PlayerTiers> players) {
    if (static_cast<int>(players.size()) != g.n())
      throw Error(Errc::InvalidPreference, "ranked profile must list every player");
    for (std::size_t i = 0; i < players.size(); ++i) {
      const Player p = static_cast<Player>(i);
      auto& tiers = players[i];
      const int tier_count = std::max<int>(1, static_cast<int>(tiers.tiers.size()));
      if (tiers.default_tier < 0 || tiers.default_tier >= tier_count)
        throw Error(Errc::InvalidPreference,
                    "player " + g.label(p) + ": default_tier out of range");
      std::unordered_map<Coalition, int> seen;
      for (const auto& tier : tiers.tiers)
        for (Coalition c : tier) {
          if (!c.contains(p))
            throw Error(Errc::InvalidPreference,
                        "player " + g.label(p) + " ranks a coalition that excludes her");
          if (!g.is_connected_subset(c))
            throw Error(Errc::InvalidPreference,
                        "player " + g.label(p) + " ranks an infeasible coalition");
          if (!seen.emplace(c, 0).second)
            throw Error(Errc::InvalidPreference,
                        "player " + g.label(p) + " lists a coalition twice");
        }
    }
    return PreferenceProfile(std::move(g), RankedPreference(std::move(players)));
  }

  static PreferenceProfile additive(Graph g, std::vector<std::vector<Rational>> values) {
    const auto n = static_cast<std::size_t>(g.n());
    if (values.size() != n) throw Error(Errc::InvalidPreference, "value matrix must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i].size() != n) throw Error(Errc::InvalidPreference, "value matrix must be n x n");
      if (values[i][i] != Rational(0)) throw Error(Errc::InvalidPreference, "v[i][i] must be 0");
    }
    return PreferenceProfile(std::move(g), AdditiveValuation(std::move(values)));
  }

  const Graph& graph() const noexcept { return graph_; }
  int n() const noexcept { return graph_.n(); }
  PreferenceKind kind() const noexcept {
    return std::holds_alternative<RankedPreference>(payload_) ? PreferenceKind::Ranked
                                                              : PreferenceKind::Additive;
  }
  const RankedPreference& ranked_payload() const {
    if (kind() != PreferenceKind::Ranked) throw Error(Errc::WrongKind, "profile is additive");
    return std::get<RankedPreference>(payload_);
  }
  const AdditiveValuation& additive_payload() const {
    if (kind() != PreferenceKind::Additive) throw Error(Errc::WrongKind, "profile is ranked");
    return std::get<AdditiveValuation>(payload_);
  }

  /// Checked comparison of S and T from player i's viewpoint.
  Ordering compare(Player i, Coalition s, Coalition t) const {
    if (!s.contains(i) || !t.contains(i))
      throw Error(Errc::PlayerNotMember, "player " + graph_.label(i) + " must belong to both coalitions");
    if (!graph_.is_connected_subset(s) || !graph_.is_connected_subset(t))
      throw Error(Errc::InfeasibleCoalition, "compared coalitions must be connected");
    return compare_unchecked(i, s, t);
  }

  /// Comparison without membership or feasibility checks; hot path of the dynamics.
  Ordering compare_unchecked(Player i, Coalition s, Coalition t) const {
    if (s == t) return Ordering::Indifferent;
    if (const auto* r = std::get_if<RankedPreference>(&payload_)) {
      const int ts = r->tier_of(i, s);
      const int tt = r->tier_of(i, t);
      return ts < tt ? Ordering::Prefer : (ts > tt ? Ordering::Disprefer : Ordering::Indifferent);
    }
    const auto& a = std::get<AdditiveValuation>(payload_);
    const Rational us = a.utility(i, s);
    const Rational ut = a.utility(i, t);
    return us > ut ? Ordering::Prefer : (us < ut ? Ordering::Disprefer : Ordering::Indifferent);
  }

  bool strictly_prefers(Player i, Coalition s, Coalition t) const {
    return compare_unchecked(i, s, t) == Ordering::Prefer;
  }
  bool weakly_prefers(Player i, Coalition s, Coalition t) const {
    return compare_unchecked(i, s, t) != Ordering::Disprefer;
  }

  /// Utility under additive preferences.
  Rational utility(Player i, Coalition s) const { return additive_payload().utility(i, s); }

 private:
  PreferenceProfile(Graph g, std::variant<RankedPreference, AdditiveValuation> payload)
      : graph_(std::move(g)), payload_(std::move(payload)) {}

  Graph graph_;
  std::variant<RankedPreference, AdditiveValuation> payload_;
};

/// Every coalition member weakly prefers the coalition to being alone.
inline bool is_ir_coalition(const PreferenceProfile& p, Coalition s) {
  bool ok = true;
  s.for_each([&](Player i) { ok = ok && p.weakly_prefers(i, s, Coalition::singleton(i)); });
  return ok;
}

inline bool is_individually_rational(const PreferenceProfile& p, int cap = kDefaultCoalitionCap) {
  const Graph& g = p.graph();
  for (Player i = 0; i < g.n(); ++i) {
    const Coalition alone = Coalition::singleton(i);
    for (Coalition s : g.feasible_coalitions(i, cap))
      if (!p.weakly_prefers(i, s, alone)) return false;
  }
  return true;
}

inline bool is_monotone(const PreferenceProfile& p, int cap = kDefaultCoalitionCap) {
  const Graph& g = p.graph();
  for (Player i = 0; i < g.n(); ++i) {
    const auto family = g.feasible_coalitions(i, cap);
    for (Coalition big : family)
      for (Coalition small : family) {
        if (small.size() >= big.size()) break;  // family is size-ordered
        if (small.is_subset_of(big) && !p.weakly_prefers(i, big, small)) return false;
      }
  }
  return true;
}

/// Nonnegative values, positive only across edges.
inline bool is_las(const PreferenceProfile& p) {
  if (p.kind() != PreferenceKind::Additive)
    throw Error(Errc::WrongKind, "LAS is defined for additive profiles only");
  const auto& a = p.additive_payload();
  const Graph& g = p.graph();
  for (Player i = 0; i < g.n(); ++i)
    for (Player j = 0; j < g.n(); ++j) {
      const Rational& v = a.value(i, j);
      if (v < 0) return false;
      if (v > 0 && !g.adjacent(i, j)) return false;
    }
  return true;
}

}  // namespace hedonic
