#pragma once

#include "glr/gl_rack.hpp"

#include <optional>
#include <vector>

namespace glr {

/// Relabeling-invariant data attached to each element; isomorphisms can only
/// map elements to elements with equal signatures.
std::vector<std::vector<int>> element_signatures(const FiniteGLRack& x);

/// A bijective GL-rack homomorphism x -> y if one exists. Backtracking over
/// elements in index order, candidates restricted by element_signatures and
/// checked against every already-assigned pair.
std::optional<Perm> is_isomorphic(const FiniteGLRack& x, const FiniteGLRack& y);

/// Lexicographically smallest (op, u, d) over all n! relabelings.
std::vector<int> canonical_form(const FiniteGLRack& x);

} // namespace glr
