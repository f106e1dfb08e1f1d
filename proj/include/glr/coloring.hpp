#pragma once

// Counting GL-rack colorings: homomorphisms from a presented fundamental
// GL-rack to a finite GL-rack X, i.e. assignments of elements of X to
// generators that satisfy every relation.

#include "glr/gl_rack.hpp"
#include "glr/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace glr {

inline constexpr std::uint64_t kDefaultBruteForceBudget = 10'000'000;
inline constexpr std::size_t kDefaultColoringCap = 1000;

struct ColoringOptions {
  bool emit = false;
  std::size_t cap = kDefaultColoringCap;
};

struct ColoringResult {
  std::uint64_t count = 0;
  /// First `cap` colorings in search order (generator 0 color ascending, then
  /// lexicographic); empty unless requested.
  std::vector<std::vector<int>> colorings;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact count by propagation and backtracking. Seeds for generator 0 are
/// searched in parallel; the result equals count_colorings_serial.
ColoringResult count_colorings(const ReducedPresentation& rp, const FiniteGLRack& x, ColoringOptions opt = {});
ColoringResult count_colorings(const FullPresentation& fp, const FiniteGLRack& x, ColoringOptions opt = {});
ColoringResult count_colorings(const Presentation& p, const FiniteGLRack& x, ColoringOptions opt = {});

ColoringResult count_colorings_serial(const ReducedPresentation& rp, const FiniteGLRack& x, ColoringOptions opt = {});
ColoringResult count_colorings_serial(const FullPresentation& fp, const FiniteGLRack& x, ColoringOptions opt = {});

/// Enumerates all |X|^gens assignments and evaluates each relation as a word.
ColoringResult count_bruteforce(const ReducedPresentation& rp, const FiniteGLRack& x,
                                std::uint64_t budget = kDefaultBruteForceBudget, ColoringOptions opt = {});
ColoringResult count_bruteforce(const FullPresentation& fp, const FiniteGLRack& x,
                                std::uint64_t budget = kDefaultBruteForceBudget, ColoringOptions opt = {});
ColoringResult count_bruteforce(const Presentation& p, const FiniteGLRack& x,
                                std::uint64_t budget = kDefaultBruteForceBudget, ColoringOptions opt = {});

/// Colorings by the k-cycle permutation GL-rack with u = sigma^-a,
/// d = sigma^-b: a seed propagates uniquely, and survives the loop iff
/// sigma^(omega - a p - b q) fixes it. Returns k if k divides
/// omega - a p - b q, else 0. Requires k >= 1 and a + b = 1.
std::uint64_t closed_form_permutation(const PresentationSummary& s, long k, long a, long b);

/// count_colorings against each rack, in input order.
std::vector<std::uint64_t> coloring_profile(const Presentation& p, std::span<const FiniteGLRack> racks);

/// True iff the assignment satisfies every relation (word evaluation).
bool satisfies(const ReducedPresentation& rp, const FiniteGLRack& x, std::span<const int> assignment);
bool satisfies(const FullPresentation& fp, const FiniteGLRack& x, std::span<const int> assignment);

} // namespace glr
