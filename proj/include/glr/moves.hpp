#pragma once

// Legendrian Reidemeister moves on front codes. The exact before/after event
// templates are documented in docs/conventions.md.

#include "glr/front_code.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace glr {

enum class Move : std::uint8_t { LR1, LR2, LR3 };
enum class Direction : std::uint8_t { Forward, Backward };

/// Insert a kink `x<c><r>+ cd cu x<c><r'>+` before event `gap`.
struct Lr1Insert {
  std::size_t gap = 0;
  Role first = Role::Over;
  friend bool operator==(const Lr1Insert&, const Lr1Insert&) = default;
};

/// Remove the kink whose first event sits at `index`.
struct Lr1Remove {
  std::size_t index = 0;
  friend bool operator==(const Lr1Remove&, const Lr1Remove&) = default;
};

/// Push the cusp at `cusp` across the strand passing through `gap`; the cusp's
/// strand takes `cusp_role` at both new crossings, signed `sign` then `-sign`.
struct Lr2Insert {
  std::size_t cusp = 0;
  std::size_t gap = 0;
  Role cusp_role = Role::Under;
  int sign = 1;
  friend bool operator==(const Lr2Insert&, const Lr2Insert&) = default;
};

/// Pull the cusp at `cusp` back off the strand it crosses twice.
struct Lr2Remove {
  std::size_t cusp = 0;
  friend bool operator==(const Lr2Remove&, const Lr2Remove&) = default;
};

/// Triangle move through the three named crossings. Self-inverse.
struct Lr3Swap {
  std::array<int, 3> crossings{};
  friend bool operator==(const Lr3Swap&, const Lr3Swap&) = default;
};

using MoveSite = std::variant<Lr1Insert, Lr1Remove, Lr2Insert, Lr2Remove, Lr3Swap>;

/// The local pattern did not match the move's precondition.
class MoveMismatch : public std::runtime_error {
public:
  MoveMismatch(std::string expected, const std::string& detail);
  const std::string& expected() const noexcept { return expected_; }

private:
  std::string expected_;
};

FrontCode apply_move(const FrontCode& code, const MoveSite& site);

/// Parses a CLI site spec for the given move and direction:
///   LR1 fwd  <gap>[:o|:u]        LR1 bwd  <index>
///   LR2 fwd  <cusp>,<gap>[,<o|u>,<+|->]   LR2 bwd  <cusp>
///   LR3      <c1>,<c2>,<c3>
MoveSite parse_move_site(Move move, Direction dir, std::string_view spec);

FrontCode apply_move(const FrontCode& code, Move move, Direction dir, std::string_view spec);

Move move_of(const MoveSite& site);
std::string describe(const MoveSite& site);

/// Every removal and triangle move whose pattern matches, followed (when
/// `with_inserts`) by every kink and cusp-crossing insertion site.
std::vector<MoveSite> applicable_moves(const FrontCode& code, bool with_inserts = true);

} // namespace glr
