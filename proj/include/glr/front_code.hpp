#pragma once

// Oriented Legendrian front diagrams as cyclic event codes.
//
// A front code lists, in traversal order along the knot's orientation, every
// crossing pass and every cusp the knot meets. Codes are combinatorial: they
// are trusted to be the trace of a real front and no planarity check is made.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glr {

enum class Role : std::uint8_t { Over, Under };
enum class CuspDir : std::uint8_t { Up, Down };

struct Event {
  enum class Kind : std::uint8_t { Pass, Cusp };

  Kind kind = Kind::Cusp;
  int crossing = 0;  // pass only; positive
  Role role = Role::Over;
  int sign = 1;      // pass only; +1 or -1, right-handed = +1
  CuspDir dir = CuspDir::Up;

  static Event pass(int crossing, Role role, int sign) {
    Event e;
    e.kind = Kind::Pass;
    e.crossing = crossing;
    e.role = role;
    e.sign = sign;
    return e;
  }
  static Event over(int crossing, int sign) { return pass(crossing, Role::Over, sign); }
  static Event under(int crossing, int sign) { return pass(crossing, Role::Under, sign); }
  static Event cusp(CuspDir dir) {
    Event e;
    e.dir = dir;
    return e;
  }
  static Event up() { return cusp(CuspDir::Up); }
  static Event down() { return cusp(CuspDir::Down); }

  bool is_cusp() const noexcept { return kind == Kind::Cusp; }
  bool is_pass() const noexcept { return kind == Kind::Pass; }
  bool is_under() const noexcept { return is_pass() && role == Role::Under; }
  bool is_over() const noexcept { return is_pass() && role == Role::Over; }

  friend bool operator==(const Event&, const Event&) = default;
};

struct FrontCode {
  std::string name;
  std::vector<Event> events;

  std::size_t size() const noexcept { return events.size(); }
  friend bool operator==(const FrontCode&, const FrontCode&) = default;
};

struct Violation {
  enum class Kind : std::uint8_t {
    Empty,
    BadCrossingId,
    BadSign,
    MissingPass,
    ExtraPass,
    RoleMismatch,
    SignMismatch,
    OddCusps,
    TooFewCusps,
  };
  Kind kind;
  std::size_t index;  // offending event, or 0 for whole-code violations
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

/// Every violated invariant of `code`; an empty result means the code is valid.
std::vector<Violation> validate(const FrontCode& code);

class InvalidCode : public std::runtime_error {
public:
  explicit InvalidCode(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
  std::vector<Violation> violations_;
};

/// Throws InvalidCode when validate() reports anything.
void require_valid(const FrontCode& code);

struct ClassicalInvariants {
  int writhe = 0;
  int up_cusps = 0;
  int down_cusps = 0;
  int tb = 0;
  int rot = 0;

  friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

/// tb = writhe - (U + D) / 2 and rot = (D - U) / 2.
ClassicalInvariants classical_invariants(const FrontCode& code);

enum class Stabilization : std::uint8_t { Plus, Minus };

/// Inserts a zigzag before event `site` (site == size() appends). S+ adds two
/// down cusps and S- two up cusps, so rot moves by +1 / -1 and tb drops by 1.
FrontCode stabilize(const FrontCode& code, Stabilization kind, std::size_t site);

/// Cyclic rotation: event `shift` becomes event 0.
FrontCode rotate(const FrontCode& code, std::size_t shift);

int max_crossing_id(const FrontCode& code);
int crossing_count(const FrontCode& code);
int cusp_count(const FrontCode& code);

/// Index of the pass of `crossing` with the given role, or npos.
std::size_t find_pass(const FrontCode& code, int crossing, Role role);

// Text format:
//   knot <name>
//   code <ev> <ev> ...      ev = cu | cd | x<id><o|u><+|->
FrontCode parse_front_code(std::string_view text);
std::string to_text(const FrontCode& code);
std::string to_token(const Event& e);

} // namespace glr
