#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hedonic/coalition.hpp"
#include "hedonic/error.hpp"
#include "hedonic/graph.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/prefs.hpp"

namespace hedonic {

/// Player `player` leaves `source` (= pi(player)) for `target`; an empty
/// target means going alone.
struct Deviation {
  Player player = 0;
  Coalition source;
  Coalition target;

  bool goes_alone() const noexcept { return target.empty(); }
  Coalition joined() const noexcept { return target.with(player); }
  bool operator==(const Deviation&) const = default;
};

enum class Acceptance {
  Unanimous,  // IS: every member of the target must weakly agree
  Ignored,    // Nash: membership of the target is not consulted
};

namespace detail {

inline bool target_feasible(const Graph& g, Player i, Coalition target) {
  return target.empty() || g.neighbors(i).intersects(target);
}

inline bool accepts_all(const PreferenceProfile& p, Player i, Coalition target) {
  const Coalition joined = target.with(i);
  bool ok = true;
  target.for_each([&](Player j) { ok = ok && p.weakly_prefers(j, joined, target); });
  return ok;
}

}  // namespace detail

/// Feasible, wanted and (under Unanimous) accepted, whatever the partition.
inline bool is_improving_move(const PreferenceProfile& p, Player i, Coalition source, Coalition target,
                              Acceptance rule = Acceptance::Unanimous) {
  if (target == source || target.contains(i)) return false;
  if (!detail::target_feasible(p.graph(), i, target)) return false;
  if (!p.strictly_prefers(i, target.with(i), source)) return false;
  return rule == Acceptance::Ignored || detail::accepts_all(p, i, target);
}

/// Canonical listing order: by target coalition (size, then lexicographic),
/// then by player; going alone comes after every join.
inline bool deviation_order_less(const Deviation& a, const Deviation& b) noexcept {
  if (a.goes_alone() != b.goes_alone()) return b.goes_alone();
  if (a.target != b.target) return size_lex_less(a.target, b.target);
  return a.player < b.player;
}

/// All deviations available in `pi`, in deviation_order_less order.
inline std::vector<Deviation> find_deviations(const PreferenceProfile& p, const Partition& pi,
                                              Acceptance rule) {
  std::vector<Deviation> out;
  const int n = p.n();
  for (Player i = 0; i < n; ++i) {
    const Coalition source = pi.coalition_of(i);
    for (Coalition target : pi.coalitions())
      if (is_improving_move(p, i, source, target, rule)) out.push_back({i, source, target});
    if (is_improving_move(p, i, source, Coalition{}, rule)) out.push_back({i, source, Coalition{}});
  }
  std::sort(out.begin(), out.end(), deviation_order_less);
  return out;
}

inline std::vector<Deviation> find_is_deviations(const PreferenceProfile& p, const Partition& pi) {
  return find_deviations(p, pi, Acceptance::Unanimous);
}

inline std::vector<Deviation> find_nash_deviations(const PreferenceProfile& p, const Partition& pi) {
  return find_deviations(p, pi, Acceptance::Ignored);
}

/// Same as find_is_deviations restricted to one player.
inline std::vector<Deviation> find_is_deviations_of(const PreferenceProfile& p, const Partition& pi,
                                                    Player i) {
  std::vector<Deviation> out;
  const Coalition source = pi.coalition_of(i);
  for (Coalition target : pi.coalitions())
    if (is_improving_move(p, i, source, target)) out.push_back({i, source, target});
  if (is_improving_move(p, i, source, Coalition{})) out.push_back({i, source, Coalition{}});
  return out;
}

inline bool verify_is(const PreferenceProfile& p, const Partition& pi) {
  for (Player i = 0; i < p.n(); ++i) {
    const Coalition source = pi.coalition_of(i);
    for (Coalition target : pi.coalitions())
      if (is_improving_move(p, i, source, target)) return false;
    if (is_improving_move(p, i, source, Coalition{})) return false;
  }
  return true;
}

/// True iff `d` is an IS deviation available in `pi`.
inline bool is_valid_deviation(const PreferenceProfile& p, const Partition& pi, const Deviation& d) {
  if (d.player < 0 || d.player >= p.n()) return false;
  if (pi.coalition_of(d.player) != d.source) return false;
  if (!d.target.empty()) {
    const auto& cs = pi.coalitions();
    if (std::find(cs.begin(), cs.end(), d.target) == cs.end()) return false;
  }
  return is_improving_move(p, d.player, d.source, d.target);
}

/// Moves the player and splits what is left behind into maximal connected parts.
inline Partition apply_deviation(const Graph& g, const Partition& pi, const Deviation& d) {
  if (d.player < 0 || d.player >= g.n())
    throw Error(Errc::InvalidDeviation, "player out of range");
  const Coalition source = pi.coalition_of(d.player);
  if (source != d.source) throw Error(Errc::InvalidDeviation, "source is not the player's coalition");
  if (d.target.contains(d.player) || d.target == source)
    throw Error(Errc::InvalidDeviation, "target must differ from the player's coalition");
  if (!detail::target_feasible(g, d.player, d.target))
    throw Error(Errc::InvalidDeviation, "joined coalition would not be connected");
  std::vector<Coalition> next;
  next.reserve(pi.size() + 2);
  bool target_found = d.target.empty();
  for (Coalition c : pi.coalitions()) {
    if (c == source) continue;
    if (c == d.target) {
      target_found = true;
      continue;
    }
    next.push_back(c);
  }
  if (!target_found) throw Error(Errc::InvalidDeviation, "target is not a coalition of the partition");
  next.push_back(d.joined());
  for (Coalition rest : g.maximal_connected_components(source.without(d.player))) next.push_back(rest);
  return Partition::from_canonical_parts(std::move(next));
}

// Schedulers ---------------------------------------------------------------

struct FirstScheduler {};
struct RandomScheduler {
  std::uint64_t seed = 0;
};
struct BestResponseScheduler {};

/// One step of a scripted schedule.
struct ScriptStep {
  enum class Kind { Join, Alone, Any };
  Player player = 0;
  Kind kind = Kind::Any;
  Player with = 0;  // for Join: any member of the coalition to join

  static ScriptStep join(Player who, Player with) { return {who, Kind::Join, with}; }
  static ScriptStep alone(Player who) { return {who, Kind::Alone, 0}; }
  static ScriptStep any(Player who) { return {who, Kind::Any, 0}; }
  bool operator==(const ScriptStep&) const = default;
};

struct ScriptedScheduler {
  std::vector<ScriptStep> steps;
};

using Scheduler = std::variant<FirstScheduler, RandomScheduler, BestResponseScheduler, ScriptedScheduler>;

enum class RunStatus { Converged, CycleDetected, Truncated };

constexpr std::string_view to_string(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Converged: return "Converged";
    case RunStatus::CycleDetected: return "CycleDetected";
    case RunStatus::Truncated: return "Truncated";
  }
  return "Truncated";
}

struct TraceEntry {
  int step = 0;  // 1-based
  Deviation deviation;
  Partition after;
};

struct RunOutcome {
  RunStatus status = RunStatus::Truncated;
  int steps = 0;
  std::vector<TraceEntry> trace;
  /// pi_0 .. pi_steps.
  std::vector<Partition> states;
  /// For CycleDetected: the recurring segment, first state equal to the last.
  std::vector<Partition> cycle;
  std::vector<int> per_player_counts;
  /// Filled by labeled tree runs: [i][j] = times i broke edge (i,j) while it carried label j.
  std::vector<std::vector<int>> per_player_breaks;

  const Partition& final_state() const { return states.back(); }
  int cycle_length() const { return cycle.empty() ? 0 : static_cast<int>(cycle.size()) - 1; }
};

struct RunOptions {
  /// Defaults to 4 n^2 (or the script length, if longer).
  std::optional<int> max_steps;
  /// Called after each applied deviation.
  std::function<void(const TraceEntry&)> on_step;
};

namespace detail {

class Chooser {
 public:
  Chooser(const PreferenceProfile& p, const Scheduler& s) : profile_(p), scheduler_(s) {
    if (const auto* r = std::get_if<RandomScheduler>(&s)) rng_.seed(r->seed);
  }

  bool scripted() const { return std::holds_alternative<ScriptedScheduler>(scheduler_); }
  std::size_t script_size() const {
    const auto* s = std::get_if<ScriptedScheduler>(&scheduler_);
    return s ? s->steps.size() : 0;
  }
  bool script_exhausted() const { return scripted() && cursor_ >= script_size(); }

  /// Picks the next deviation among `available` (nonempty).
  Deviation pick(const Partition& pi, const std::vector<Deviation>& available) {
    return std::visit([&](const auto& s) { return pick_with(s, pi, available); }, scheduler_);
  }

 private:
  Deviation pick_with(const FirstScheduler&, const Partition&, const std::vector<Deviation>& a) {
    return a.front();
  }
  Deviation pick_with(const RandomScheduler&, const Partition&, const std::vector<Deviation>& a) {
    std::uniform_int_distribution<std::size_t> dist(0, a.size() - 1);
    return a[dist(rng_)];
  }
  Deviation pick_with(const BestResponseScheduler&, const Partition&, const std::vector<Deviation>& a) {
    const Player who = a.front().player;
    Deviation best = a.front();
    for (const auto& d : a) {
      if (d.player != who) continue;
      if (profile_.strictly_prefers(who, d.joined(), best.joined())) best = d;
    }
    return best;
  }
  Deviation pick_with(const ScriptedScheduler& s, const Partition& pi, const std::vector<Deviation>& a) {
    const ScriptStep& step = s.steps.at(cursor_);
    const std::size_t at = cursor_++;
    for (const auto& d : a) {
      if (d.player != step.player) continue;
      switch (step.kind) {
        case ScriptStep::Kind::Any: return d;
        case ScriptStep::Kind::Alone:
          if (d.goes_alone()) return d;
          break;
        case ScriptStep::Kind::Join:
          if (d.target.contains(step.with)) return d;
          break;
      }
    }
    throw Error(Errc::ScriptedDeviationInvalid,
                "script step " + std::to_string(at + 1) + " (player " + profile_.graph().label(step.player) +
                    ") is not an IS deviation in " + pi.to_string(profile_.graph()));
  }

  const PreferenceProfile& profile_;
  const Scheduler& scheduler_;
  std::mt19937_64 rng_;
  std::size_t cursor_ = 0;
};

/// Shared loop; `on_apply(before, deviation, after)` runs for each move.
template <typename OnApply>
RunOutcome run_loop(const PreferenceProfile& p, const Partition& initial, const Scheduler& scheduler,
                    const RunOptions& options, OnApply&& on_apply) {
  const int n = p.n();
  Chooser chooser(p, scheduler);
  int max_steps = options.max_steps.value_or(4 * n * n);
  if (!options.max_steps && chooser.scripted())
    max_steps = std::max<int>(max_steps, static_cast<int>(chooser.script_size()));

  RunOutcome out;
  out.per_player_counts.assign(static_cast<std::size_t>(n), 0);
  out.states.push_back(initial);
  std::unordered_map<Partition, std::size_t> seen;
  seen.emplace(initial, 0);

  while (true) {
    const Partition& current = out.states.back();
    const auto available = find_is_deviations(p, current);
    if (available.empty()) {
      out.status = RunStatus::Converged;
      break;
    }
    if (out.steps >= max_steps || chooser.script_exhausted()) {
      out.status = RunStatus::Truncated;
      break;
    }
    const Deviation d = chooser.pick(current, available);
    Partition next = apply_deviation(p.graph(), current, d);
    on_apply(current, d, next);
    ++out.steps;
    ++out.per_player_counts[static_cast<std::size_t>(d.player)];
    out.trace.push_back({out.steps, d, next});
    if (options.on_step) options.on_step(out.trace.back());
    auto [it, inserted] = seen.emplace(next, out.states.size());
    out.states.push_back(std::move(next));
    if (!inserted) {
      out.cycle.assign(out.states.begin() + static_cast<std::ptrdiff_t>(it->second), out.states.end());
      out.status = RunStatus::CycleDetected;
      break;
    }
  }
  return out;
}

}  // namespace detail

/// IS dynamics from `initial` until convergence, state recurrence or max_steps.
inline RunOutcome run_dynamics(const PreferenceProfile& p, const Partition& initial, const Scheduler& scheduler,
                               const RunOptions& options = {}) {
  return detail::run_loop(p, initial, scheduler, options, [](const auto&, const auto&, const auto&) {});
}

// Stars --------------------------------------------------------------------

enum class StarMove { CenterToLeaf, LeafToCentral, GoAlone };

constexpr std::string_view to_string(StarMove m) noexcept {
  switch (m) {
    case StarMove::CenterToLeaf: return "CenterToLeaf";
    case StarMove::LeafToCentral: return "LeafToCentral";
    case StarMove::GoAlone: return "GoAlone";
  }
  return "GoAlone";
}

inline StarMove classify_star_deviation(const Graph& g, const Partition& pi, const Deviation& d) {
  const auto center = g.star_center();
  if (!center) throw Error(Errc::NotAStar, "graph is not a star");
  if (pi.coalition_of(d.player) != d.source) throw Error(Errc::InvalidDeviation, "stale deviation");
  if (d.goes_alone()) return StarMove::GoAlone;
  if (d.player == *center) {
    if (d.target.size() != 1) throw Error(Errc::InvalidDeviation, "center can only join a lone leaf");
    return StarMove::CenterToLeaf;
  }
  if (!d.target.contains(*center)) throw Error(Errc::InvalidDeviation, "leaf can only join the central coalition");
  return StarMove::LeafToCentral;
}

}  // namespace hedonic
