#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hedonic {

enum class Errc {
  DisconnectedGraph,
  InvalidEdge,
  SelfLoop,
  EmptySet,
  PlayerNotMember,
  InfeasibleCoalition,
  InvalidPreference,
  InvalidPartition,
  WrongKind,
  InvalidDeviation,
  ScriptedDeviationInvalid,
  NotATree,
  NotLAS,
  NotAStar,
  NotAnAncestor,
  TooLarge,
  GraphHasCycle,
  UnknownExample,
  ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EmptySet: return "EmptySet";
    case Errc::PlayerNotMember: return "PlayerNotMember";
    case Errc::InfeasibleCoalition: return "InfeasibleCoalition";
    case Errc::InvalidPreference: return "InvalidPreference";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::WrongKind: return "WrongKind";
    case Errc::InvalidDeviation: return "InvalidDeviation";
    case Errc::ScriptedDeviationInvalid: return "ScriptedDeviationInvalid";
    case Errc::NotATree: return "NotATree";
    case Errc::NotLAS: return "NotLAS";
    case Errc::NotAStar: return "NotAStar";
    case Errc::NotAnAncestor: return "NotAnAncestor";
    case Errc::TooLarge: return "TooLarge";
    case Errc::GraphHasCycle: return "GraphHasCycle";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  Errc code() const noexcept { return code_; }
  /// The text without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace hedonic
