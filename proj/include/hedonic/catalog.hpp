#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hedonic/bounds.hpp"
#include "hedonic/dynamics.hpp"

namespace hedonic {

enum class PreferenceClass { LAS, Monotone, IndividuallyRational, General };

constexpr std::string_view to_string(PreferenceClass c) noexcept {
  switch (c) {
    case PreferenceClass::LAS: return "LAS";
    case PreferenceClass::Monotone: return "monotone";
    case PreferenceClass::IndividuallyRational: return "IR";
    case PreferenceClass::General: return "general";
  }
  return "general";
}

/// What replaying an instance's script must produce.
struct Expectation {
  enum class Kind { Cycle, ExactSteps, AtLeastSteps };
  Kind kind = Kind::ExactSteps;
  /// Cycle: the recurring states in order, front() == back().
  std::vector<Partition> cycle_states;
  /// Cycle: deviations played before the first state of cycle_states.
  int prefix = 0;
  /// Cycle: if given, the `prefix` states visited before the cycle is entered.
  std::vector<Partition> lead_in;
  /// ExactSteps / AtLeastSteps: number of deviations until convergence.
  int steps = 0;
  /// Optional exact number of deviations by one player.
  std::optional<std::pair<Player, int>> player_count;
};

struct Instance {
  std::string name;
  PreferenceProfile profile;
  Partition initial;
  std::vector<ScriptStep> script;
  Expectation expected;
  PreferenceClass advertised = PreferenceClass::General;

  const Graph& graph() const { return profile.graph(); }
};

namespace catalog_detail {

inline std::vector<std::string> letters(int count) {
  std::vector<std::string> out;
  for (int k = 0; k < count; ++k) out.emplace_back(1, static_cast<char>('a' + k));
  return out;
}

inline std::vector<std::string> numbers(int count) {
  std::vector<std::string> out;
  for (int k = 1; k <= count; ++k) out.push_back(std::to_string(k));
  return out;
}

inline Graph labeled(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& named_edges) {
  std::vector<Edge> edges;
  auto index = [&](const std::string& name) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw Error(Errc::UnknownExample, "bad label " + name);
    return static_cast<Player>(it - labels.begin());
  };
  for (const auto& [u, v] : named_edges) edges.emplace_back(index(u), index(v));
  const int n = static_cast<int>(labels.size());
  return Graph::build(n, edges, std::move(labels));
}

/// A strict order, best first; each entry is one coalition.
inline PlayerTiers strict(const Graph& g, const std::vector<std::string>& order, int default_tier) {
  PlayerTiers t;
  for (const auto& c : order) t.tiers.push_back({parse_coalition(g, c)});
  t.default_tier = default_tier;
  return t;
}

inline PlayerTiers indifferent() { return PlayerTiers{{{}}, 0}; }

inline std::vector<Partition> states(const Graph& g, const std::vector<std::string>& texts) {
  std::vector<Partition> out;
  for (const auto& t : texts) out.push_back(parse_partition(g, t));
  return out;
}

inline Player at(const Graph& g, const std::string& label) {
  auto p = g.find_label(label);
  if (!p) throw Error(Errc::UnknownExample, "bad label " + label);
  return *p;
}

inline ScriptStep join(const Graph& g, const std::string& who, const std::string& with) {
  return ScriptStep::join(at(g, who), at(g, with));
}
inline ScriptStep alone(const Graph& g, const std::string& who) { return ScriptStep::alone(at(g, who)); }

inline std::vector<std::vector<Rational>> zero_values(int n) {
  return std::vector<std::vector<Rational>>(static_cast<std::size_t>(n),
                                            std::vector<Rational>(static_cast<std::size_t>(n), 0));
}

inline void set_value(std::vector<std::vector<Rational>>& v, const Graph& g, const std::string& i,
                      const std::string& j, Rational value) {
  v[static_cast<std::size_t>(at(g, i))][static_cast<std::size_t>(at(g, j))] = value;
}

inline Expectation cycle(std::vector<Partition> seq, int prefix = 0) {
  Expectation e;
  e.kind = Expectation::Kind::Cycle;
  e.cycle_states = std::move(seq);
  e.prefix = prefix;
  return e;
}

inline Expectation exact_steps(int steps) {
  Expectation e;
  e.kind = Expectation::Kind::ExactSteps;
  e.steps = steps;
  return e;
}

// Preferences of the eight players on the path a..h that cycle through four
// coalitions; reused by the two-coalition variant.
inline std::vector<PlayerTiers> path_ir8_tiers(const Graph& g) {
  return {
      strict(g, {"a,b", "a"}, 1),
      strict(g, {"b,c,d,e", "a,b", "b,c", "b"}, 3),
      strict(g, {"b,c,d,e", "c,d,e", "c,d", "c"}, 3),
      strict(g, {"b,c,d,e", "c,d,e", "c,d", "d,e,f,g", "d,e,f", "b,c,d", "d"}, 6),
      strict(g, {"d,e,f,g", "d,e,f", "e,f", "b,c,d,e", "c,d,e", "e,f,g", "e"}, 6),
      strict(g, {"d,e,f,g", "d,e,f", "e,f", "f"}, 3),
      strict(g, {"d,e,f,g", "g,h", "f,g", "g"}, 3),
      strict(g, {"g,h", "h"}, 1),
  };
}

inline std::vector<ScriptStep> path_ir8_script(const Graph& g) {
  return {join(g, "e", "f"), join(g, "d", "e"), join(g, "g", "f"), join(g, "b", "a"),
          join(g, "d", "c"), join(g, "e", "c"), join(g, "b", "c"), join(g, "g", "h")};
}

inline std::vector<std::string> path_ir8_wheel() {
  return {"{{a},{b,c,d,e},{f},{g,h}}", "{{a},{b,c,d},{e,f},{g,h}}", "{{a},{b,c},{d,e,f},{g,h}}",
          "{{a},{b,c},{d,e,f,g},{h}}", "{{a,b},{c},{d,e,f,g},{h}}", "{{a,b},{c,d},{e,f,g},{h}}",
          "{{a,b},{c,d,e},{f,g},{h}}", "{{a},{b,c,d,e},{f,g},{h}}", "{{a},{b,c,d,e},{f},{g,h}}"};
}

}  // namespace catalog_detail

// Instances ----------------------------------------------------------------

/// LAS triangle whose dynamics rotate through three two-coalition states.
inline Instance make_cycle3() {
  using namespace catalog_detail;
  Graph g = labeled(letters(3), {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto v = zero_values(3);
  set_value(v, g, "a", "b", 1);
  set_value(v, g, "b", "c", 1);
  set_value(v, g, "c", "a", 1);
  auto profile = PreferenceProfile::additive(g, std::move(v));
  return {"cycle3",
          profile,
          parse_partition(g, "{{a,c},{b}}"),
          {join(g, "a", "b"), join(g, "b", "c"), join(g, "c", "a")},
          cycle(states(g, {"{{a,c},{b}}", "{{a,b},{c}}", "{{a},{b,c}}", "{{a,c},{b}}"})),
          PreferenceClass::LAS};
}

/// The triangle construction on a ring of n >= 4 players: each three-step
/// round shifts the layout one position backwards, so the run recurs after n rounds.
inline Instance make_cycle_n(int n) {
  using namespace catalog_detail;
  if (n < 4 || n > 24) throw Error(Errc::UnknownExample, "cycle_n needs 4 <= n <= 24");
  std::vector<Edge> edges;
  for (Player i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  Graph g = Graph::build(n, edges, numbers(n));
  auto v = zero_values(n);
  for (Player i = 0; i < n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % n)] = 1;
  auto profile = PreferenceProfile::additive(g, std::move(v));

  auto wrap = [n](int k) { return static_cast<Player>(((k % n) + n) % n); };
  auto interval = [&](int from, int count) {
    Coalition c;
    for (int k = 0; k < count; ++k) c.insert(wrap(from + k));
    return c;
  };
  std::vector<Partition> expected;
  std::vector<ScriptStep> script;
  for (int round = 0; round <= n; ++round) {
    const int s = -round;  // first player of the long block
    const Player end = wrap(s + n - 3), p = wrap(s + n - 2), q = wrap(s + n - 1);
    const Coalition rest = interval(s, n - 3);
    expected.push_back(Partition::make(g, {interval(s, n - 2), Coalition::singleton(p), Coalition::singleton(q)}));
    if (round == n) break;
    expected.push_back(Partition::make(g, {rest, Coalition{end, p}, Coalition::singleton(q)}));
    expected.push_back(Partition::make(g, {rest, Coalition::singleton(end), Coalition{p, q}}));
    script.push_back(ScriptStep::join(end, p));
    script.push_back(ScriptStep::join(p, q));
    script.push_back(ScriptStep::join(q, wrap(s)));
  }
  // For some n the pattern revisits a state before the full rotation; the
  // expectation is the first recurrence along the pattern.
  std::size_t first = 0, last = expected.size() - 1;
  for (std::size_t k = 1, done = 0; k < expected.size() && !done; ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (expected[j] == expected[k]) {
        first = j;
        last = k;
        done = 1;
        break;
      }
  Partition initial = expected.front();
  script.resize(last);
  Expectation e = cycle({expected.begin() + static_cast<std::ptrdiff_t>(first),
                         expected.begin() + static_cast<std::ptrdiff_t>(last) + 1},
                        static_cast<int>(first));
  e.lead_in.assign(expected.begin(), expected.begin() + static_cast<std::ptrdiff_t>(first));
  return {"cycle_n:" + std::to_string(n), profile, initial, script, e, PreferenceClass::LAS};
}

/// Eight IR players on a path cycling through four-coalition states.
inline Instance make_path_ir8() {
  using namespace catalog_detail;
  Graph g = labeled(letters(8), {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                                 {"e", "f"}, {"f", "g"}, {"g", "h"}});
  auto profile = PreferenceProfile::ranked(g, path_ir8_tiers(g));
  const auto wheel = path_ir8_wheel();
  return {"path_ir8",
          profile,
          parse_partition(g, wheel.front()),
          path_ir8_script(g),
          cycle(states(g, wheel)),
          PreferenceClass::IndividuallyRational};
}

/// path_ir8 plus players alpha, alpha' on the right. Starting from two
/// coalitions the dynamics fall into the path_ir8 cycle after three moves.
/// Only the stated overrides differ from path_ir8: f ranks {a..h} and a ranks
/// {a,..,e} strictly below their singletons; alpha strictly prefers
/// {alpha,alpha'} to everything else, which sits at her singleton's tier;
/// alpha' is indifferent.
inline Instance make_path_2coalitions() {
  using namespace catalog_detail;
  auto labels = letters(8);
  labels.emplace_back("alpha");
  labels.emplace_back("alpha'");
  Graph g = labeled(labels, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"},
                             {"f", "g"}, {"g", "h"}, {"h", "alpha"}, {"alpha", "alpha'"}});
  auto tiers = path_ir8_tiers(g);
  tiers[static_cast<std::size_t>(at(g, "a"))].tiers.push_back({parse_coalition(g, "a,b,c,d,e")});
  tiers[static_cast<std::size_t>(at(g, "f"))].tiers.push_back({parse_coalition(g, "a,b,c,d,e,f,g,h")});
  tiers.push_back(PlayerTiers{{{parse_coalition(g, "alpha,alpha'")}, {}}, 1});
  tiers.push_back(indifferent());
  auto profile = PreferenceProfile::ranked(g, std::move(tiers));

  std::vector<std::string> wheel;
  for (auto s : path_ir8_wheel()) wheel.push_back(s.substr(0, s.size() - 1) + ",{alpha,alpha'}}");
  auto script = std::vector<ScriptStep>{join(g, "alpha", "alpha'"), alone(g, "f"), alone(g, "a")};
  for (auto step : path_ir8_script(g)) script.push_back(step);
  Expectation e = cycle(states(g, wheel), 3);
  e.lead_in = states(g, {"{{a,b,c,d,e,f,g,h,alpha},{alpha'}}", "{{a,b,c,d,e,f,g,h},{alpha,alpha'}}",
                         "{{a,b,c,d,e},{f},{g,h},{alpha,alpha'}}"});
  return {"path_2coalitions", profile, e.lead_in.front(), script, e, PreferenceClass::General};
}

/// Star with center d and non-IR leaves; six-state cycle.
inline Instance make_star_general() {
  using namespace catalog_detail;
  Graph g = labeled(letters(4), {{"a", "d"}, {"b", "d"}, {"c", "d"}});
  auto profile = PreferenceProfile::ranked(
      g, {strict(g, {"a,b,d", "a", "a,c,d", "a,d", "a,b,c,d"}, 1),
          strict(g, {"b,c,d", "b", "a,b,d", "b,d", "a,b,c,d"}, 1),
          strict(g, {"a,c,d", "c", "b,c,d", "c,d", "a,b,c,d"}, 1), indifferent()});
  return {"star_general",
          profile,
          parse_partition(g, "{{a},{b,c,d}}"),
          {alone(g, "c"), join(g, "a", "b"), alone(g, "b"), join(g, "c", "a"), alone(g, "a"), join(g, "b", "c")},
          cycle(states(g, {"{{a},{b,c,d}}", "{{a},{b,d},{c}}", "{{a,b,d},{c}}", "{{a,d},{c},{b}}",
                           "{{a,c,d},{b}}", "{{c,d},{b},{a}}", "{{a},{b,c,d}}"})),
          PreferenceClass::General};
}

/// A star with one extra vertex hanging off a leaf; IR preferences still cycle.
/// Coalitions a player does not list sit at her singleton's tier.
inline Instance make_almost_star() {
  using namespace catalog_detail;
  Graph g = labeled(letters(5), {{"c", "b"}, {"b", "a"}, {"a", "e"}, {"a", "d"}});
  auto profile = PreferenceProfile::ranked(
      g, {strict(g, {"a,b", "a,e", "a,b,d", "a,d", "a"}, 4), strict(g, {"a,b,d", "b,c", "a,b", "b"}, 3),
          strict(g, {"b,c", "c"}, 1), strict(g, {"a,b,d", "a,d", "d"}, 2), strict(g, {"a,e", "e"}, 1)});
  return {"almost_star",
          profile,
          parse_partition(g, "{{a,b},{c},{d},{e}}"),
          {join(g, "b", "c"), join(g, "a", "d"), join(g, "b", "a"), join(g, "a", "e"), join(g, "a", "b")},
          cycle(states(g, {"{{a,b},{c},{d},{e}}", "{{a},{b,c},{d},{e}}", "{{a,d},{b,c},{e}}",
                           "{{a,b,d},{c},{e}}", "{{a,e},{b},{c},{d}}", "{{a,b},{c},{d},{e}}"})),
          PreferenceClass::IndividuallyRational};
}

/// Monotone (nonnegative additive, not local) preferences on a seven-vertex tree.
inline Instance make_tree_monotone() {
  using namespace catalog_detail;
  Graph g = labeled({"T", "a0", "a1", "a2", "x0", "x1", "x2"},
                    {{"x0", "a0"}, {"a0", "T"}, {"T", "a2"}, {"a2", "x2"}, {"T", "a1"}, {"a1", "x1"}});
  auto v = zero_values(g.n());
  for (int i = 0; i < 3; ++i) {
    const std::string a = "a" + std::to_string(i);
    set_value(v, g, a, "x" + std::to_string(i), 1);
    set_value(v, g, a, "a" + std::to_string((i + 1) % 3), 2);
  }
  auto profile = PreferenceProfile::additive(g, std::move(v));
  return {"tree_monotone",
          profile,
          parse_partition(g, "{{x0,a0},{T,a1},{x1},{a2,x2}}"),
          {join(g, "a0", "T"), join(g, "a1", "x1"), join(g, "a2", "T"), join(g, "a0", "x0"),
           join(g, "a1", "T"), join(g, "a2", "x2")},
          cycle(states(g, {"{{x0,a0},{T,a1},{x1},{a2,x2}}", "{{x0},{T,a0,a1},{x1},{a2,x2}}",
                           "{{x0},{T,a0},{a1,x1},{a2,x2}}", "{{x0},{T,a0,a2},{a1,x1},{x2}}",
                           "{{x0,a0},{T,a2},{a1,x1},{x2}}", "{{x0,a0},{T,a1,a2},{x1},{x2}}",
                           "{{x0,a0},{T,a1},{x1},{a2,x2}}"})),
          PreferenceClass::Monotone};
}

/// tree_monotone with a vertex b_i inserted between a_i and x_i; all values 0 or 1.
inline Instance make_tree_monotone_01() {
  using namespace catalog_detail;
  Graph g = labeled({"T", "a0", "a1", "a2", "b0", "b1", "b2", "x0", "x1", "x2"},
                    {{"T", "a0"}, {"T", "a1"}, {"T", "a2"}, {"a0", "b0"}, {"a1", "b1"}, {"a2", "b2"},
                     {"b0", "x0"}, {"b1", "x1"}, {"b2", "x2"}});
  auto v = zero_values(g.n());
  for (int i = 0; i < 3; ++i) {
    const std::string next = std::to_string((i + 1) % 3);
    for (const std::string who : {"a", "b"}) {
      const std::string me = who + std::to_string(i);
      set_value(v, g, me, "x" + std::to_string(i), 1);
      set_value(v, g, me, "a" + next, 1);
      set_value(v, g, me, "b" + next, 1);
    }
  }
  auto profile = PreferenceProfile::additive(g, std::move(v));
  return {"tree_monotone_01",
          profile,
          parse_partition(g, "{{x0,b0,a0},{T,a1,b1},{x1},{a2,b2,x2}}"),
          {join(g, "a0", "T"), join(g, "b0", "T"), join(g, "b1", "x1"), join(g, "a1", "x1"),
           join(g, "a2", "T"), join(g, "b2", "T"), join(g, "b0", "x0"), join(g, "a0", "x0"),
           join(g, "a1", "T"), join(g, "b1", "T"), join(g, "b2", "x2"), join(g, "a2", "x2")},
          cycle(states(g, {"{{x0,b0,a0},{T,a1,b1},{x1},{a2,b2,x2}}", "{{x0,b0},{T,a0,a1,b1},{x1},{a2,b2,x2}}",
                           "{{x0},{T,a0,b0,a1,b1},{x1},{a2,b2,x2}}", "{{x0},{T,a0,b0,a1},{x1,b1},{a2,b2,x2}}",
                           "{{x0},{T,a0,b0},{a1,x1,b1},{a2,b2,x2}}", "{{x0},{T,a0,b0,a2},{a1,x1,b1},{b2,x2}}",
                           "{{x0},{T,a0,b0,a2,b2},{a1,x1,b1},{x2}}", "{{x0,b0},{T,a0,a2,b2},{a1,x1,b1},{x2}}",
                           "{{x0,b0,a0},{T,a2,b2},{a1,x1,b1},{x2}}", "{{x0,b0,a0},{T,a1,a2,b2},{x1,b1},{x2}}",
                           "{{x0,b0,a0},{T,a1,b1,a2,b2},{x1},{x2}}", "{{x0,b0,a0},{T,a1,b1,a2},{x1},{b2,x2}}",
                           "{{x0,b0,a0},{T,a1,b1},{x1},{a2,b2,x2}}"})),
          PreferenceClass::Monotone};
}

/// Star with center c and leaves x_1..x_t, y_1..y_t where the center keeps
/// trading up one x at a time; t(t+1) deviations before convergence.
inline Instance make_star_lb(int t) {
  using namespace catalog_detail;
  if (t < 1 || 2 * t + 1 > kDefaultCoalitionCap) throw Error(Errc::UnknownExample, "star_lb needs 1 <= t <= 11");
  std::vector<std::string> labels{"c"};
  for (int i = 1; i <= t; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= t; ++i) labels.push_back("y" + std::to_string(i));
  const int n = 2 * t + 1;
  std::vector<Edge> edges;
  for (Player i = 1; i < n; ++i) edges.emplace_back(0, i);
  Graph g = Graph::build(n, edges, labels);
  const Coalition xs(((std::uint64_t{1} << t) - 1) << 1);
  const Coalition ys(((std::uint64_t{1} << t) - 1) << (t + 1));

  // The four stated conditions are the lexicographic order of this key;
  // whatever they leave undecided is indifference.
  auto key = [&](Coalition s) {
    if (s == Coalition::singleton(0)) return std::tuple<int, int, int>{0, 0, 0};
    if ((s & xs).size() != 1) return std::tuple<int, int, int>{1, 0, 0};
    return std::tuple<int, int, int>{2, (s & xs).min(), (s & ys).size()};
  };
  auto family = g.feasible_coalitions(0);
  std::sort(family.begin(), family.end(), [&](Coalition a, Coalition b) { return key(a) > key(b); });
  PlayerTiers center;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k == 0 || key(family[k]) != key(family[k - 1])) center.tiers.emplace_back();
    center.tiers.back().push_back(family[k]);
  }
  std::vector<PlayerTiers> players{center};
  for (Player leaf = 1; leaf < n; ++leaf) players.push_back(PlayerTiers{{{}, {Coalition::singleton(leaf)}}, 0});
  auto profile = PreferenceProfile::ranked(g, std::move(players));

  std::vector<ScriptStep> script;
  for (int i = 1; i <= t; ++i) {
    script.push_back(ScriptStep::join(0, i));
    for (int k = 1; k <= t; ++k) script.push_back(ScriptStep::join(t + k, 0));
  }
  return {"star_lb:" + std::to_string(t), profile, Partition::singletons(n), script, exact_steps(t * (t + 1)),
          PreferenceClass::IndividuallyRational};
}

/// LAS path 1..n where player i values i-1 at 1 and i+1 at 2; the sweep
/// schedule takes n(n-1)/2 deviations.
inline Instance make_path_quadratic(int n) {
  using namespace catalog_detail;
  if (n < 2 || n > kMaxPlayers) throw Error(Errc::UnknownExample, "path_quadratic needs 2 <= n <= 64");
  std::vector<Edge> edges;
  for (Player i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  Graph g = Graph::build(n, edges, numbers(n));
  auto v = zero_values(n);
  for (Player i = 0; i < n; ++i) {
    if (i > 0) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = 1;
    if (i + 1 < n) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 2;
  }
  auto profile = PreferenceProfile::additive(g, std::move(v));
  std::vector<ScriptStep> script;
  for (int r = 1; r <= n - 1; ++r)
    for (int i = 1; i <= n - r; ++i) script.push_back(ScriptStep::join(i - 1, i));
  return {"path_quadratic:" + std::to_string(n), profile, Partition::singletons(n), script,
          exact_steps(n * (n - 1) / 2), PreferenceClass::LAS};
}

/// Player index of x_i (1-based i) and y_i in tree_exponential(t).
inline Player exponential_x(int i) { return i - 1; }
inline Player exponential_y(int t, int i) { return t + i; }

/// Interleaved schedule on tree_exponential(t). x_t joins {y_t} then {x_{t+1}};
/// for i < t, x_i joins {y_i} and then x_{i+1}'s coalition right before each
/// move of x_{i+1}, and once more at the end, so x_i moves 2 + 2 * (moves of x_{i+1}) times.
inline std::vector<ScriptStep> exponential_schedule(int t) {
  if (t < 1) throw Error(Errc::UnknownExample, "exponential schedule needs t >= 1");
  auto pair_for = [t](int i) {
    return std::vector<ScriptStep>{ScriptStep::join(exponential_x(i), exponential_y(t, i)),
                                   ScriptStep::join(exponential_x(i), exponential_x(i + 1))};
  };
  std::vector<ScriptStep> seq = pair_for(t);
  for (int i = t - 1; i >= 1; --i) {
    std::vector<ScriptStep> next;
    for (const auto& step : seq) {
      if (step.player == exponential_x(i + 1))
        for (const auto& s : pair_for(i)) next.push_back(s);
      next.push_back(step);
    }
    for (const auto& s : pair_for(i)) next.push_back(s);
    seq = std::move(next);
  }
  return seq;
}

/// Caterpillar x_1 - ... - x_{t+1} with a pendant y_i at each x_i, i <= t.
/// x_i values x_{i+1} at 2 and y_i at 1.
inline Instance make_tree_exponential(int t) {
  using namespace catalog_detail;
  if (t < 1 || 2 * t + 1 > kMaxPlayers) throw Error(Errc::UnknownExample, "tree_exponential needs 1 <= t <= 31");
  const int n = 2 * t + 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= t + 1; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= t; ++i) labels.push_back("y" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= t; ++i) {
    edges.emplace_back(exponential_x(i), exponential_x(i + 1));
    edges.emplace_back(exponential_x(i), exponential_y(t, i));
  }
  Graph g = Graph::build(n, edges, labels);
  auto v = zero_values(n);
  for (int i = 1; i <= t; ++i) {
    v[static_cast<std::size_t>(exponential_x(i))][static_cast<std::size_t>(exponential_x(i + 1))] = 2;
    v[static_cast<std::size_t>(exponential_x(i))][static_cast<std::size_t>(exponential_y(t, i))] = 1;
  }
  auto profile = PreferenceProfile::additive(g, std::move(v));
  const int root_moves = (1 << (t + 1)) - 2;
  Expectation e;
  e.kind = Expectation::Kind::AtLeastSteps;
  e.steps = root_moves;
  e.player_count = std::pair{exponential_x(1), root_moves};
  return {"tree_exponential:" + std::to_string(t), profile, Partition::singletons(n), exponential_schedule(t), e,
          PreferenceClass::LAS};
}

// Lookup -------------------------------------------------------------------

/// Accepts "name", "name:k" and "name(k)".
inline Instance build_example(std::string_view spec) {
  std::string name(spec);
  std::optional<int> arg;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    arg = std::stoi(name.substr(colon + 1));
    name = name.substr(0, colon);
  } else if (auto open = name.find('('); open != std::string::npos && name.back() == ')') {
    arg = std::stoi(name.substr(open + 1, name.size() - open - 2));
    name = name.substr(0, open);
  }
  auto need = [&](int fallback) { return arg.value_or(fallback); };
  if (name == "cycle3") return make_cycle3();
  if (name == "cycle_n") return make_cycle_n(need(5));
  if (name == "path_ir8") return make_path_ir8();
  if (name == "path_2coalitions") return make_path_2coalitions();
  if (name == "star_general") return make_star_general();
  if (name == "almost_star") return make_almost_star();
  if (name == "tree_monotone") return make_tree_monotone();
  if (name == "tree_monotone_01") return make_tree_monotone_01();
  if (name == "star_lb") return make_star_lb(need(3));
  if (name == "path_quadratic") return make_path_quadratic(need(4));
  if (name == "tree_exponential") return make_tree_exponential(need(3));
  throw Error(Errc::UnknownExample, "no catalog instance named '" + std::string(spec) + "'");
}

/// Every instance the regression run replays.
inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out{"cycle3"};
  for (int n = 5; n <= 8; ++n) out.push_back("cycle_n:" + std::to_string(n));
  for (const char* s : {"path_ir8", "path_2coalitions", "star_general", "almost_star", "tree_monotone",
                        "tree_monotone_01"})
    out.emplace_back(s);
  for (int t = 2; t <= 6; ++t) out.push_back("star_lb:" + std::to_string(t));
  for (int n = 3; n <= 10; ++n) out.push_back("path_quadratic:" + std::to_string(n));
  for (int t = 1; t <= 6; ++t) out.push_back("tree_exponential:" + std::to_string(t));
  return out;
}

// Replay -------------------------------------------------------------------

struct ReproduceReport {
  bool ok = false;
  std::string detail;
  RunOutcome outcome;
};

/// Replays the instance's script and compares against its expectation.
inline ReproduceReport reproduce(const Instance& inst) {
  ReproduceReport report;
  const Graph& g = inst.graph();
  RunOptions options;
  options.max_steps = static_cast<int>(inst.script.size());
  report.outcome = run_dynamics(inst.profile, inst.initial, ScriptedScheduler{inst.script}, options);
  const RunOutcome& run = report.outcome;
  std::ostringstream msg;
  const Expectation& e = inst.expected;
  switch (e.kind) {
    case Expectation::Kind::Cycle: {
      if (run.status != RunStatus::CycleDetected) {
        msg << "expected a cycle, run ended " << to_string(run.status) << " after " << run.steps << " steps";
        break;
      }
      const int prefix = run.steps - run.cycle_length();
      bool same = prefix == e.prefix && run.cycle.size() == e.cycle_states.size();
      for (std::size_t k = 0; same && k < run.cycle.size(); ++k) same = run.cycle[k] == e.cycle_states[k];
      for (std::size_t k = 0; same && k < e.lead_in.size(); ++k) same = run.states[k] == e.lead_in[k];
      if (!same && !e.lead_in.empty()) {
        msg << "lead-in:\n";
        for (std::size_t k = 0; k < e.lead_in.size(); ++k) {
          const std::string want = e.lead_in[k].to_string(g);
          const std::string got = k < run.states.size() ? run.states[k].to_string(g) : "-";
          msg << (want == got ? "  " : "! ") << "expected " << want << "  got " << got << "\n";
        }
      }
      if (!same) {
        msg << "cycle mismatch (prefix " << prefix << " vs " << e.prefix << ")\n";
        const std::size_t rows = std::max(run.cycle.size(), e.cycle_states.size());
        for (std::size_t k = 0; k < rows; ++k) {
          const std::string want = k < e.cycle_states.size() ? e.cycle_states[k].to_string(g) : "-";
          const std::string got = k < run.cycle.size() ? run.cycle[k].to_string(g) : "-";
          msg << (want == got ? "  " : "! ") << "expected " << want << "  got " << got << "\n";
        }
        break;
      }
      report.ok = true;
      msg << "cycle of length " << run.cycle_length() << " after " << prefix << " deviations";
      break;
    }
    case Expectation::Kind::ExactSteps:
    case Expectation::Kind::AtLeastSteps: {
      const bool exact = e.kind == Expectation::Kind::ExactSteps;
      if (run.status != RunStatus::Converged) {
        msg << "expected convergence, run ended " << to_string(run.status) << " after " << run.steps << " steps";
        break;
      }
      if (exact ? run.steps != e.steps : run.steps < e.steps) {
        msg << "converged in " << run.steps << " deviations, expected " << (exact ? "" : ">= ") << e.steps;
        break;
      }
      if (e.player_count) {
        const auto [who, count] = *e.player_count;
        const int got = run.per_player_counts[static_cast<std::size_t>(who)];
        if (got != count) {
          msg << "player " << g.label(who) << " deviated " << got << " times, expected " << count;
          break;
        }
      }
      report.ok = true;
      msg << "converged in " << run.steps << " deviations";
      if (e.player_count)
        msg << ", player " << g.label(e.player_count->first) << " moved " << e.player_count->second << " times";
      break;
    }
  }
  report.detail = msg.str();
  return report;
}

}  // namespace hedonic
