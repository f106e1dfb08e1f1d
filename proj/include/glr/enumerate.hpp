#pragma once

// Exhaustive enumeration of finite racks and GL-racks.
//
// Racks are built column by column: a rack is a tuple of permutations
// (s_0, ..., s_{n-1}) with s_z o s_y = s_{s_z(y)} o s_z. For each rack the
// admissible u are searched directly and d is forced to theta^-1 o u^-1.
// Results are deduplicated by canonical_form and sorted by it.

#include "glr/gl_rack.hpp"

#include <stdexcept>
#include <vector>

namespace glr {

inline constexpr int kDefaultEnumerationBound = 5;

class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Every rack table of order n (labeled, not up to isomorphism), in
/// lexicographic order of (s_0, ..., s_{n-1}).
std::vector<FiniteRack> enumerate_rack_tables(int n);
std::vector<FiniteRack> enumerate_rack_tables_serial(int n);

/// Racks of order n up to isomorphism, sorted by canonical table.
std::vector<FiniteRack> enumerate_racks(int n, int bound = kDefaultEnumerationBound);

/// One GL-rack per isomorphism class, sorted by canonical form. The top-level
/// search is split across OpenMP threads; output is identical to the serial
/// version.
std::vector<FiniteGLRack> enumerate_glracks(int n, int bound = kDefaultEnumerationBound);
std::vector<FiniteGLRack> enumerate_glracks_serial(int n, int bound = kDefaultEnumerationBound);

/// All admissible u for a rack: bijections with u(x*y) = u(x)*y and x*u(y) = x*y.
std::vector<Perm> admissible_u(const FiniteRack& rack);

/// theta^-1 o u^-1.
Perm forced_d(const FiniteRack& rack, const Perm& u);

/// Classes of every order 1..max_order, concatenated in order.
std::vector<FiniteGLRack> enumerate_glracks_upto(int max_order, int bound = kDefaultEnumerationBound);

} // namespace glr
