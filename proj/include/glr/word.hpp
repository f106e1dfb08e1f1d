#pragma once

// Terms of the free GL-rack: generators closed under *, *^-1, u and d.

#include "glr/gl_rack.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace glr {

class Word {
public:
  enum class Kind : std::uint8_t { Gen, Star, StarInv, Up, Down };

  static Word gen(int index);
  static Word star(Word a, Word b);
  static Word star_inv(Word a, Word b);
  /// a *^eps b.
  static Word star(Word a, Word b, int eps);
  static Word up(Word a);
  static Word down(Word a);
  /// u^p d^q (a): d applied first, matching a strand that meets its down cusps
  /// first. The order is immaterial in any GL-rack since ud = du.
  static Word shifted(Word a, int p, int q);

  Kind kind() const noexcept { return kind_; }
  int generator() const noexcept { return gen_; }
  const Word& left() const { return args_.at(0); }
  const Word& right() const { return args_.at(1); }

  /// Largest generator index occurring in the word.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  Kind kind_ = Kind::Gen;
  int gen_ = 0;
  std::vector<Word> args_;
};

class UnassignedGenerator : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Structural evaluation in X; assignment[i] is the color of generator i and
/// negative entries mean unassigned.
int eval_word(const Word& w, const FiniteGLRack& x, std::span<const int> assignment);

/// Infix rendering with 1-based generator names, e.g. "u(d(x1 * x1))".
std::string to_string(const Word& w, std::string_view prefix = "x");

} // namespace glr
