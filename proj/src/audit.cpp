#include "glr/audit.hpp"

#include "glr/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace glr {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::SameInvariants: return "SameInvariants";
  case Verdict::OppositeInvariants: return "OppositeInvariants";
  case Verdict::CertifiedDistinct: return "CertifiedDistinct";
  case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

void check_parity(const PresentationSummary& s) {
  if ((s.p + s.q) % 2 != 0)
    throw std::invalid_argument("summary has an odd cusp count p + q; input is corrupted");
}

} // namespace

long tb_of(const PresentationSummary& s) {
  check_parity(s);
  return s.omega - (s.p + s.q) / 2;
}

long rot_of(const PresentationSummary& s) {
  check_parity(s);
  return (s.q - s.p) / 2;
}

std::optional<Witness> witness_search(const PresentationSummary& s1, const PresentationSummary& s2) {
  std::optional<Witness> best;
  for (auto [a, b] : kPermutationFamilies) {
    const long t1 = s1.omega - a * s1.p - b * s1.q;
    const long t2 = s2.omega - a * s2.p - b * s2.q;
    const long m1 = std::labs(t1), m2 = std::labs(t2);
    if (m1 == m2)
      continue;
    const long lo = std::min(m1, m2), hi = std::max(m1, m2);
    const long k = lo == 0 ? hi + 1 : hi;
    Witness w{k, a, b, {closed_form_permutation(s1, k, a, b), closed_form_permutation(s2, k, a, b)}};
    if (w.counts.first == w.counts.second)
      throw std::logic_error("witness k does not separate the counts");
    if (!best || k < best->k)
      best = w;
  }
  return best;
}

AuditReport theorem1_gate(const PresentationSummary& s1, const PresentationSummary& s2) {
  AuditReport r;
  if (s1.cusps == 0 || s2.cusps == 0) {
    // An empty presentation carries no data.
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  r.tb = {tb_of(s1), tb_of(s2)};
  r.rot = {rot_of(s1), rot_of(s2)};
  if (r.tb.first == r.tb.second && r.rot.first == r.rot.second) {
    r.verdict = Verdict::SameInvariants;
  } else if (r.tb.first == -r.tb.second && r.rot.first == -r.rot.second) {
    r.verdict = Verdict::OppositeInvariants;
  } else {
    r.witness = witness_search(s1, s2);
    if (!r.witness)
      throw std::logic_error("invariants differ but every |omega - a p - b q| agrees");
    r.verdict = Verdict::CertifiedDistinct;
  }
  return r;
}

bool satisfies_bennequin(const PresentationSummary& s, long slice_genus) {
  return tb_of(s) + std::labs(rot_of(s)) <= 2 * slice_genus - 1;
}

AuditReport corollary_gate(const PresentationSummary& s1, const PresentationSummary& s2, long slice_genus) {
  if (slice_genus < 0)
    throw std::invalid_argument("slice genus must be nonnegative");
  AuditReport r = theorem1_gate(s1, s2);
  if (r.verdict == Verdict::Inconclusive)
    return r;
  if (!satisfies_bennequin(s1, slice_genus))
    r.bennequin_violations.push_back(1);
  if (!satisfies_bennequin(s2, slice_genus))
    r.bennequin_violations.push_back(2);
  if (slice_genus == 0 && r.verdict == Verdict::OppositeInvariants) {
    r.opposite_eliminated = true;
    r.verdict = Verdict::Inconclusive;
  }
  return r;
}

std::string to_text(const AuditReport& r) {
  std::string out = "verdict " + std::string(to_string(r.verdict)) + "\n";
  out += "tb " + std::to_string(r.tb.first) + " " + std::to_string(r.tb.second) + "\n";
  out += "rot " + std::to_string(r.rot.first) + " " + std::to_string(r.rot.second) + "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    out += "witness k=" + std::to_string(w.k) + " a=" + std::to_string(w.a) + " b=" + std::to_string(w.b) +
           " counts=" + std::to_string(w.counts.first) + "," + std::to_string(w.counts.second) + "\n";
  }
  for (int i : r.bennequin_violations)
    out += "bennequin-violation input=" + std::to_string(i) + "\n";
  if (r.opposite_eliminated)
    out += "eliminated OppositeInvariants\n";
  switch (r.verdict) {
  case Verdict::SameInvariants:
  case Verdict::OppositeInvariants:
    out += "note not refuted: necessary condition for isomorphic GL-racks holds\n";
    break;
  case Verdict::CertifiedDistinct:
    out += "note fundamental GL-racks are not isomorphic\n";
    break;
  case Verdict::Inconclusive:
    out += "note no conclusion\n";
    break;
  }
  return out;
}

} // namespace glr
