#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hedonic/coalition.hpp"
#include "hedonic/error.hpp"
#include "hedonic/graph.hpp"

namespace hedonic {

/// A feasible partition in canonical form: coalitions sorted by minimum element.
class Partition {
 public:
  Partition() = default;

  /// Validates cover, disjointness and connectivity against `g`.
  static Partition make(const Graph& g, std::vector<Coalition> coalitions) {
    Coalition covered;
    for (Coalition c : coalitions) {
      if (c.empty()) throw Error(Errc::InvalidPartition, "empty coalition");
      if (c.intersects(covered)) throw Error(Errc::InvalidPartition, "coalitions overlap");
      if (!c.is_subset_of(g.players())) throw Error(Errc::InvalidPartition, "player out of range");
      if (!g.is_connected_subset(c))
        throw Error(Errc::InvalidPartition, "coalition " + format_coalition(g, c) + " is not connected");
      covered = covered | c;
    }
    if (covered != g.players()) throw Error(Errc::InvalidPartition, "partition does not cover every player");
    return from_canonical_parts(std::move(coalitions));
  }

  /// No validation; callers guarantee a feasible partition.
  static Partition from_canonical_parts(std::vector<Coalition> coalitions) {
    Partition p;
    std::sort(coalitions.begin(), coalitions.end(), min_element_less);
    p.coalitions_ = std::move(coalitions);
    return p;
  }

  static Partition singletons(int n) {
    std::vector<Coalition> cs;
    for (Player i = 0; i < n; ++i) cs.push_back(Coalition::singleton(i));
    return from_canonical_parts(std::move(cs));
  }

  static Partition grand(int n) { return from_canonical_parts({Coalition::first_n(n)}); }

  const std::vector<Coalition>& coalitions() const noexcept { return coalitions_; }
  std::size_t size() const noexcept { return coalitions_.size(); }

  /// pi(i).
  Coalition coalition_of(Player i) const {
    for (Coalition c : coalitions_)
      if (c.contains(i)) return c;
    throw Error(Errc::PlayerNotMember, "player " + std::to_string(i) + " not in partition");
  }

  bool same_coalition(Player i, Player j) const { return coalition_of(i).contains(j); }

  bool operator==(const Partition&) const = default;

  static std::string format_coalition(const Graph& g, Coalition c) {
    std::string out = "{";
    bool first = true;
    c.for_each([&](Player p) {
      if (!first) out += ",";
      out += g.label(p);
      first = false;
    });
    return out + "}";
  }

  /// Byte-stable text form, e.g. {{a},{b,c,d,e},{f},{g,h}}.
  std::string to_string(const Graph& g) const {
    std::string out = "{";
    for (std::size_t k = 0; k < coalitions_.size(); ++k) {
      if (k) out += ",";
      out += format_coalition(g, coalitions_[k]);
    }
    return out + "}";
  }

 private:
  std::vector<Coalition> coalitions_;
};

}  // namespace hedonic

template <>
struct std::hash<hedonic::Partition> {
  std::size_t operator()(const hedonic::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : p.coalitions()) {
      h ^= std::hash<std::uint64_t>{}(c.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

namespace hedonic {

/// Parses "a,b,c" or "{a,b,c}" using the graph's labels (or integers).
inline Coalition parse_coalition(const Graph& g, std::string_view text) {
  Coalition c;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (auto p = g.find_label(token)) {
      c.insert(*p);
    } else {
      std::size_t used = 0;
      int value = -1;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0 || value >= g.n())
        throw Error(Errc::ParseError, "unknown player '" + token + "'");
      c.insert(value);
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == '{' || ch == '}' || ch == ' ') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return c;
}

/// Parses "{{a},{b,c}}" into a validated partition.
inline Partition parse_partition(const Graph& g, std::string_view text) {
  std::vector<Coalition> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '{') {
      if (++depth == 2) start = k + 1;
    } else if (text[k] == '}') {
      if (depth-- == 2) parts.push_back(parse_coalition(g, text.substr(start, k - start)));
    }
  }
  if (depth != 0) throw Error(Errc::ParseError, "unbalanced braces in partition text");
  return Partition::make(g, std::move(parts));
}

}  // namespace hedonic
