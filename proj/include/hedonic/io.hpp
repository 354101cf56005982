#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hedonic/dynamics.hpp"
#include "hedonic/oracle.hpp"

namespace hedonic::io {

using json = nlohmann::ordered_json;

inline constexpr int kInstanceVersion = 1;
inline constexpr int kSummaryVersion = 1;

namespace detail {

[[noreturn]] inline void fail(const std::string& field, const std::string& what) {
  throw Error(Errc::ParseError, field + ": " + what);
}

inline const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(field, std::string("missing \"") + key + "\"");
  return *it;
}

inline std::string at_index(const std::string& field, std::size_t k) {
  return field + "[" + std::to_string(k) + "]";
}

/// Re-raise library errors (bad edge, infeasible coalition...) with the field
/// they came from.
template <typename F>
auto in_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(e.code(), field + ": " + e.message());
  }
}

}  // namespace detail

// Players, coalitions, partitions ------------------------------------------

inline json player_to_json(const Graph& g, Player i) {
  if (g.has_labels()) return g.label(i);
  return i;
}

inline Player player_from_json(const Graph& g, const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= g.n()) detail::fail(field, "player " + std::to_string(v) + " out of range");
    return static_cast<Player>(v);
  }
  if (j.is_string()) {
    if (auto p = g.find_label(j.get<std::string>())) return *p;
    detail::fail(field, "unknown player label \"" + j.get<std::string>() + "\"");
  }
  detail::fail(field, "expected a player index or label");
}

inline json coalition_to_json(const Graph& g, Coalition c) {
  json out = json::array();
  c.for_each([&](Player p) { out.push_back(player_to_json(g, p)); });
  return out;
}

inline Coalition coalition_from_json(const Graph& g, const json& j, const std::string& field) {
  if (!j.is_array()) detail::fail(field, "expected an array of players");
  Coalition c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Player p = player_from_json(g, j[k], detail::at_index(field, k));
    if (c.contains(p)) detail::fail(detail::at_index(field, k), "player listed twice");
    c.insert(p);
  }
  return c;
}

inline json partition_to_json(const Graph& g, const Partition& pi) {
  json out = json::array();
  for (Coalition c : pi.coalitions()) out.push_back(coalition_to_json(g, c));
  return out;
}

inline Partition partition_from_json(const Graph& g, const json& j, const std::string& field) {
  if (!j.is_array()) detail::fail(field, "expected an array of coalitions");
  std::vector<Coalition> parts;
  for (std::size_t k = 0; k < j.size(); ++k) parts.push_back(coalition_from_json(g, j[k], detail::at_index(field, k)));
  return detail::in_field(field, [&] { return Partition::make(g, std::move(parts)); });
}

// Graph --------------------------------------------------------------------

inline json graph_to_json(const Graph& g) {
  json out;
  out["n"] = g.n();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  if (g.has_labels()) out["labels"] = g.labels();
  return out;
}

inline Graph graph_from_json(const json& j, const std::string& field = "graph") {
  const json& n = detail::require(j, "n", field);
  if (!n.is_number_integer()) detail::fail(field + ".n", "expected an integer");
  const json& edges = detail::require(j, "edges", field);
  if (!edges.is_array()) detail::fail(field + ".edges", "expected an array");
  std::vector<Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const json& e = edges[k];
    const auto where = detail::at_index(field + ".edges", k);
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      detail::fail(where, "expected [i, j]");
    list.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) detail::fail(field + ".labels", "expected an array of strings");
    for (std::size_t k = 0; k < it->size(); ++k) {
      if (!(*it)[k].is_string()) detail::fail(detail::at_index(field + ".labels", k), "expected a string");
      labels.push_back((*it)[k].get<std::string>());
    }
  }
  return detail::in_field(field, [&] { return Graph::build(n.get<int>(), list, std::move(labels)); });
}

// Preferences --------------------------------------------------------------

inline json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t used = 0;
      const auto slash = s.find('/');
      const std::int64_t num = std::stoll(s.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
      if (slash == std::string::npos) return Rational(num);
      const std::string rest = s.substr(slash + 1);
      const std::int64_t den = std::stoll(rest, &used);
      if (used != rest.size() || den == 0) throw std::invalid_argument(s);
      return Rational(num, den);
    } catch (const std::exception&) {
      detail::fail(field, "\"" + s + "\" is not an integer or p/q");
    }
  }
  detail::fail(field, "expected an integer or a \"p/q\" string");
}

inline json preferences_to_json(const PreferenceProfile& p) {
  const Graph& g = p.graph();
  json out;
  if (p.kind() == PreferenceKind::Additive) {
    out["kind"] = "additive";
    json rows = json::array();
    for (const auto& row : p.additive_payload().values()) {
      json r = json::array();
      for (const auto& v : row) r.push_back(rational_to_json(v));
      rows.push_back(std::move(r));
    }
    out["values"] = std::move(rows);
    return out;
  }
  out["kind"] = "ranked";
  json players = json::array();
  for (const auto& pt : p.ranked_payload().players()) {
    json tiers = json::array();
    for (const auto& tier : pt.tiers) {
      json t = json::array();
      for (Coalition c : tier) t.push_back(coalition_to_json(g, c));
      tiers.push_back(std::move(t));
    }
    players.push_back({{"tiers", std::move(tiers)}, {"default_tier", pt.default_tier}});
  }
  out["players"] = std::move(players);
  return out;
}

inline PreferenceProfile preferences_from_json(const Graph& g, const json& j,
                                               const std::string& field = "preferences") {
  const json& kind = detail::require(j, "kind", field);
  if (kind == "additive") {
    const json& rows = detail::require(j, "values", field);
    const std::string vf = field + ".values";
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(g.n()))
      detail::fail(vf, "expected " + std::to_string(g.n()) + " rows");
    std::vector<std::vector<Rational>> values;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto rf = detail::at_index(vf, i);
      if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(g.n()))
        detail::fail(rf, "expected " + std::to_string(g.n()) + " values");
      std::vector<Rational> row;
      for (std::size_t k = 0; k < rows[i].size(); ++k) row.push_back(rational_from_json(rows[i][k], detail::at_index(rf, k)));
      values.push_back(std::move(row));
    }
    return detail::in_field(field, [&] { return PreferenceProfile::additive(g, std::move(values)); });
  }
  if (kind == "ranked") {
    const json& players = detail::require(j, "players", field);
    const std::string pf = field + ".players";
    if (!players.is_array() || players.size() != static_cast<std::size_t>(g.n()))
      detail::fail(pf, "expected " + std::to_string(g.n()) + " entries");
    std::vector<PlayerTiers> all;
    for (std::size_t i = 0; i < players.size(); ++i) {
      const auto where = detail::at_index(pf, i);
      const json& tiers = detail::require(players[i], "tiers", where);
      if (!tiers.is_array()) detail::fail(where + ".tiers", "expected an array of tiers");
      PlayerTiers pt;
      for (std::size_t t = 0; t < tiers.size(); ++t) {
        const auto tf = detail::at_index(where + ".tiers", t);
        if (!tiers[t].is_array()) detail::fail(tf, "expected an array of coalitions");
        std::vector<Coalition> tier;
        for (std::size_t k = 0; k < tiers[t].size(); ++k)
          tier.push_back(coalition_from_json(g, tiers[t][k], detail::at_index(tf, k)));
        pt.tiers.push_back(std::move(tier));
      }
      if (auto it = players[i].find("default_tier"); it != players[i].end()) {
        if (!it->is_number_integer()) detail::fail(where + ".default_tier", "expected an integer");
        pt.default_tier = it->get<int>();
      }
      all.push_back(std::move(pt));
    }
    return detail::in_field(field, [&] { return PreferenceProfile::ranked(g, std::move(all)); });
  }
  detail::fail(field + ".kind", "expected \"ranked\" or \"additive\"");
}

// Scripts ------------------------------------------------------------------

inline json script_to_json(const Graph& g, const std::vector<ScriptStep>& script) {
  json out = json::array();
  for (const auto& s : script) {
    json step;
    step["player"] = player_to_json(g, s.player);
    if (s.kind == ScriptStep::Kind::Join) step["join"] = player_to_json(g, s.with);
    if (s.kind == ScriptStep::Kind::Alone) step["alone"] = true;
    out.push_back(std::move(step));
  }
  return out;
}

inline std::vector<ScriptStep> script_from_json(const Graph& g, const json& j, const std::string& field = "script") {
  if (!j.is_array()) detail::fail(field, "expected an array of steps");
  std::vector<ScriptStep> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto where = detail::at_index(field, k);
    const Player who = player_from_json(g, detail::require(j[k], "player", where), where + ".player");
    if (auto it = j[k].find("join"); it != j[k].end())
      out.push_back(ScriptStep::join(who, player_from_json(g, *it, where + ".join")));
    else if (j[k].value("alone", false))
      out.push_back(ScriptStep::alone(who));
    else
      out.push_back(ScriptStep::any(who));
  }
  return out;
}

// Instance files -----------------------------------------------------------

struct InstanceFile {
  std::string name;
  PreferenceProfile profile;
  std::optional<Partition> initial;
  std::vector<ScriptStep> script;

  const Graph& graph() const { return profile.graph(); }
};

inline json instance_to_json(const std::string& name, const PreferenceProfile& p,
                             const std::optional<Partition>& initial, const std::vector<ScriptStep>& script) {
  json out;
  out["format"] = "hedonic-instance";
  out["version"] = kInstanceVersion;
  out["name"] = name;
  out["graph"] = graph_to_json(p.graph());
  out["preferences"] = preferences_to_json(p);
  if (initial) out["initial"] = partition_to_json(p.graph(), *initial);
  if (!script.empty()) out["script"] = script_to_json(p.graph(), script);
  return out;
}

inline InstanceFile instance_from_json(const json& j) {
  if (!j.is_object()) detail::fail("<root>", "expected an object");
  if (auto it = j.find("version"); it != j.end() && *it != kInstanceVersion)
    detail::fail("version", "unsupported instance version " + it->dump());
  Graph g = graph_from_json(detail::require(j, "graph", "<root>"));
  InstanceFile out{j.value("name", std::string{}), preferences_from_json(g, detail::require(j, "preferences", "<root>")),
                   std::nullopt, {}};
  if (auto it = j.find("initial"); it != j.end() && !it->is_null())
    out.initial = partition_from_json(out.graph(), *it, "initial");
  if (auto it = j.find("script"); it != j.end() && !it->is_null()) out.script = script_from_json(out.graph(), *it);
  return out;
}

/// Parses instance JSON text; syntax errors report line and column.
inline InstanceFile load_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                      "invalid JSON");
  }
  return instance_from_json(j);
}

inline InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return load_instance_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

// Run output ---------------------------------------------------------------

/// One line of a JSONL trace. "to" is the coalition joined (before the move),
/// or null when the player goes alone.
inline json trace_record(const Graph& g, const TraceEntry& e) {
  json out;
  out["step"] = e.step;
  out["player"] = player_to_json(g, e.deviation.player);
  out["from"] = coalition_to_json(g, e.deviation.source);
  out["to"] = e.deviation.goes_alone() ? json(nullptr) : coalition_to_json(g, e.deviation.target);
  out["partition"] = partition_to_json(g, e.after);
  return out;
}

inline json run_summary(const Graph& g, const RunOutcome& run) {
  json out;
  out["schema"] = "hedonic-run-summary";
  out["version"] = kSummaryVersion;
  out["status"] = std::string(to_string(run.status));
  out["steps"] = run.steps;
  out["initial"] = partition_to_json(g, run.states.front());
  out["final"] = partition_to_json(g, run.final_state());
  if (run.status == RunStatus::CycleDetected) {
    json cycle = json::array();
    for (const auto& s : run.cycle) cycle.push_back(partition_to_json(g, s));
    out["cycle_length"] = run.cycle_length();
    out["cycle"] = std::move(cycle);
  }
  json counts = json::object();
  for (Player i = 0; i < g.n(); ++i) counts[g.label(i)] = run.per_player_counts[static_cast<std::size_t>(i)];
  out["per_player_counts"] = std::move(counts);
  if (!run.per_player_breaks.empty()) {
    json breaks = json::array();
    for (Player i = 0; i < g.n(); ++i)
      for (Player j = 0; j < g.n(); ++j)
        if (int c = run.per_player_breaks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; c > 0)
          breaks.push_back({{"player", player_to_json(g, i)}, {"neighbor", player_to_json(g, j)}, {"count", c}});
    out["per_player_breaks"] = std::move(breaks);
  }
  return out;
}

inline json state_graph_summary(const Graph& g, const StateGraph& sg, const Certificate& cert) {
  json out;
  out["schema"] = "hedonic-state-graph";
  out["version"] = kSummaryVersion;
  out["nodes"] = sg.nodes.size();
  out["arcs"] = sg.arc_count();
  out["sinks"] = sg.sinks().size();
  out["certified"] = is_certified(cert);
  if (const auto* c = std::get_if<CounterCycle>(&cert)) {
    json cycle = json::array();
    for (std::size_t v : c->states) cycle.push_back(partition_to_json(g, sg.nodes[v]));
    out["cycle"] = std::move(cycle);
  }
  return out;
}

}  // namespace hedonic::io
