#pragma once

// Fundamental GL-rack presentations read off a front code.
//
// Full form: one generator per arc, arcs cut at under-passes and at cusps.
// An up cusp sends the incoming arc x to u(x), a down cusp to d(x), and a
// crossing sends the under-strand x to x *^eps y where y is the over arc and
// eps the crossing sign.
//
// Reduced form: one generator per arc between consecutive under-passes; the
// cusps along an arc fold into the relation
//     u^p d^q (x_i) *^eps x_k = x_{i+1 mod m}.
// Generator 0 is the arc leaving the first under-pass at or after event 0.

#include "glr/front_code.hpp"
#include "glr/word.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace glr {

enum class Shift : std::uint8_t { U, D };

struct CuspRel {
  Shift kind = Shift::U;
  int from = 0;
  int to = 0;
  friend bool operator==(const CuspRel&, const CuspRel&) = default;
};

struct CrossRel {
  int eps = 1;
  int under_in = 0;
  int over = 0;
  int under_out = 0;
  friend bool operator==(const CrossRel&, const CrossRel&) = default;
};

using FullRelation = std::variant<CuspRel, CrossRel>;

struct FullPresentation {
  int gens = 0;
  std::vector<FullRelation> relations;  // traversal order
  friend bool operator==(const FullPresentation&, const FullPresentation&) = default;
};

/// u^p d^q (x_i) *^eps x_over = x_{i+1}; i is the relation's position.
struct ReducedRelation {
  int p = 0;
  int q = 0;
  int eps = 1;
  int over = 0;
  friend bool operator==(const ReducedRelation&, const ReducedRelation&) = default;
};

struct ReducedPresentation {
  std::vector<ReducedRelation> relations;
  int gens() const noexcept { return static_cast<int>(relations.size()); }
  friend bool operator==(const ReducedPresentation&, const ReducedPresentation&) = default;
};

struct PresentationSummary {
  long omega = 0;  // sum of eps
  long p = 0;      // sum of u exponents
  long q = 0;      // sum of d exponents
  long gens = 0;
  long cusps = 0;  // p + q
  friend bool operator==(const PresentationSummary&, const PresentationSummary&) = default;
};

/// The code has no crossings, so no reduced form exists.
class NoCrossings : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class MalformedPresentation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

FullPresentation extract_full(const FrontCode& code);
ReducedPresentation extract_reduced(const FrontCode& code);

/// Eliminates the generators created by cusps, folding their u/d exponents
/// into the next crossing relation. Generators are numbered from the arc
/// leaving the first crossing relation in list order, so
/// reduce(extract_full(c)) == extract_reduced(c).
ReducedPresentation reduce(const FullPresentation& fp);

PresentationSummary summarize(const ReducedPresentation& rp);
/// Counts cusp relations into p / q and crossing relations into omega and
/// gens; equals summarize(reduce(fp)) when fp has a crossing, and still
/// carries the cusp data when it has none.
PresentationSummary summarize(const FullPresentation& fp);
/// Also checks cusps against the code's cusp count and omega against its
/// writhe; throws std::logic_error on disagreement.
PresentationSummary summarize(const ReducedPresentation& rp, const FrontCode& source);

/// Index ranges and the single-component shape (every generator is produced
/// exactly once and consumed exactly once).
void validate_presentation(const FullPresentation& fp);
void validate_presentation(const ReducedPresentation& rp);

/// Relations as (lhs, rhs) word pairs.
std::vector<std::pair<Word, Word>> relation_words(const FullPresentation& fp);
std::vector<std::pair<Word, Word>> relation_words(const ReducedPresentation& rp);

/// Rewrites generator i as (i + shift) mod m; the relation list rotates with it.
ReducedPresentation rotate_generators(const ReducedPresentation& rp, int shift);

/// Human-readable relation, e.g. "u^2d(x1) * x4 = x2".
std::string format_relation(const ReducedPresentation& rp, std::size_t i, std::string_view prefix = "x");

using Presentation = std::variant<FullPresentation, ReducedPresentation>;

// Text format: `gens <m>` then one relation per line. Full relations are
// `cusp <u|d> <from> <to>` and `cross <+|-> <under_in> <over> <under_out>`;
// reduced relations are `xr <i> <p> <q> <+|-> <k>`. Indices are 0-based.
Presentation parse_presentation(std::string_view text);
std::string to_text(const FullPresentation& fp);
std::string to_text(const ReducedPresentation& rp);
std::string to_text(const Presentation& p);

// Summary text: `omega <w>` / `p <p>` / `q <q>` / `gens <m>` / `cusps <c>`.
PresentationSummary parse_summary(std::string_view text);
std::string to_text(const PresentationSummary& s);

} // namespace glr
