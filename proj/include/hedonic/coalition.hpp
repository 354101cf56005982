#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hedonic {

using Player = int;

inline constexpr int kMaxPlayers = 64;

/// A set of players stored as a bitmask; players are 0..63.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}
  Coalition(std::initializer_list<Player> players) {
    for (Player p : players) insert(p);
  }
  explicit Coalition(const std::vector<Player>& players) {
    for (Player p : players) insert(p);
  }

  static constexpr Coalition singleton(Player p) { return Coalition(std::uint64_t{1} << p); }
  static constexpr Coalition first_n(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(Player p) const noexcept { return (bits_ >> p) & 1U; }
  constexpr bool is_subset_of(Coalition other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Coalition other) const noexcept { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined for the empty set.
  constexpr Player min() const noexcept { return std::countr_zero(bits_); }

  constexpr void insert(Player p) noexcept { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(Player p) noexcept { bits_ &= ~(std::uint64_t{1} << p); }

  constexpr Coalition with(Player p) const noexcept {
    Coalition c = *this;
    c.insert(p);
    return c;
  }
  constexpr Coalition without(Player p) const noexcept {
    Coalition c = *this;
    c.erase(p);
    return c;
  }

  constexpr Coalition operator|(Coalition o) const noexcept { return Coalition(bits_ | o.bits_); }
  constexpr Coalition operator&(Coalition o) const noexcept { return Coalition(bits_ & o.bits_); }
  constexpr Coalition operator-(Coalition o) const noexcept { return Coalition(bits_ & ~o.bits_); }

  std::vector<Player> members() const {
    std::vector<Player> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Player>(std::countr_zero(b)));
  }

  constexpr bool operator==(const Coalition&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Size first, then lexicographic on the ascending member list.
inline bool size_lex_less(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on sorted members equals comparing the lowest differing bit.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

/// Orders coalitions by their minimum element (disjoint coalitions never tie).
inline bool min_element_less(Coalition a, Coalition b) {
  if (a.empty() || b.empty()) return !a.empty() < !b.empty();
  if (a.min() != b.min()) return a.min() < b.min();
  return a.bits() < b.bits();
}

}  // namespace hedonic

template <>
struct std::hash<hedonic::Coalition> {
  std::size_t operator()(hedonic::Coalition c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits());
  }
};
