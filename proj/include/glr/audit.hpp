#pragma once

// Necessary conditions for two Legendrian knots to have isomorphic
// fundamental GL-racks, checked on reduced presentation summaries.
//
// Colorings by the k-cycle permutation GL-racks with (u, d) = (sigma^-a,
// sigma^-b) for (a, b) in {(1,0), (0,1), (2,-1)} depend only on
// t = omega - a p - b q. Isomorphic GL-racks force |t| to agree for all three
// choices, which in turn forces (tb, rot) to agree or to be opposite. When
// some |t| differs, a k separating the two counts is a certificate that the
// GL-racks are not isomorphic. Equal or opposite invariants only mean the
// test did not refute isomorphism.

#include "glr/presentation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glr {

enum class Verdict : std::uint8_t { SameInvariants, OppositeInvariants, CertifiedDistinct, Inconclusive };

std::string_view to_string(Verdict v);

struct Witness {
  long k = 0;
  long a = 0;
  long b = 0;
  std::pair<std::uint64_t, std::uint64_t> counts{};
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AuditReport {
  Verdict verdict = Verdict::Inconclusive;
  std::pair<long, long> tb{};
  std::pair<long, long> rot{};
  std::optional<Witness> witness;
  /// Set by corollary_gate: which inputs violate the slice-Bennequin bound.
  std::vector<int> bennequin_violations;
  bool opposite_eliminated = false;
  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// The (a, b) choices, in search order.
inline constexpr std::array<std::pair<long, long>, 3> kPermutationFamilies{{{1, 0}, {0, 1}, {2, -1}}};

long tb_of(const PresentationSummary& s);
long rot_of(const PresentationSummary& s);

/// Witness for the first family minimizing k; k follows the case split on
/// the smaller magnitude (zero: k = larger + 1; nonzero: k = larger).
std::optional<Witness> witness_search(const PresentationSummary& s1, const PresentationSummary& s2);

/// Inconclusive when either summary is empty (no cusps, so no knot).
AuditReport theorem1_gate(const PresentationSummary& s1, const PresentationSummary& s2);

/// Slice-Bennequin check tb + |rot| <= 2 g - 1 on each input. With g = 0 the
/// opposite-invariants case is impossible for consistent inputs, so it is
/// eliminated: the verdict drops to Inconclusive and the report lists the
/// violating inputs.
AuditReport corollary_gate(const PresentationSummary& s1, const PresentationSummary& s2, long slice_genus);

bool satisfies_bennequin(const PresentationSummary& s, long slice_genus);

// Line-oriented report: verdict / tb / rot / [witness] / [bennequin] / note.
std::string to_text(const AuditReport& r);

} // namespace glr
