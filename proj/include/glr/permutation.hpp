#pragma once

#include <span>
#include <vector>

namespace glr {

/// Permutations of 0..n-1 as image vectors: p[x] is the image of x.
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// x -> x + 1 mod n.
Perm cycle_perm(int n);
bool is_permutation(std::span<const int> p, int n);
Perm inverse(std::span<const int> p);
/// (f o g)(x) = f(g(x)).
Perm compose(std::span<const int> f, std::span<const int> g);
/// p^e for any integer e.
Perm power(std::span<const int> p, long e);
/// Cycle length of each element.
std::vector<int> cycle_lengths(std::span<const int> p);
/// Sorted multiset of cycle lengths.
std::vector<int> cycle_type(std::span<const int> p);

/// Steps through all permutations of 0..n-1 in lexicographic order.
bool next_perm(Perm& p);

} // namespace glr
