#include "glr/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glr {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm cycle_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    p[static_cast<std::size_t>(x)] = (x + 1) % n;
  return p;
}

bool is_permutation(std::span<const int> p, int n) {
  if (p.size() != static_cast<std::size_t>(n))
    return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Perm inverse(std::span<const int> p) {
  Perm inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    inv[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return inv;
}

Perm compose(std::span<const int> f, std::span<const int> g) {
  if (f.size() != g.size())
    throw std::invalid_argument("compose: size mismatch");
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    out[x] = f[static_cast<std::size_t>(g[x])];
  return out;
}

Perm power(std::span<const int> p, long e) {
  Perm base = e < 0 ? inverse(p) : Perm(p.begin(), p.end());
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Perm out = identity_perm(static_cast<int>(p.size()));
  while (k) {
    if (k & 1)
      out = compose(base, out);
    base = compose(base, base);
    k >>= 1;
  }
  return out;
}

std::vector<int> cycle_lengths(std::span<const int> p) {
  std::vector<int> len(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (len[x])
      continue;
    std::vector<std::size_t> orbit;
    std::size_t y = x;
    do {
      orbit.push_back(y);
      y = static_cast<std::size_t>(p[y]);
    } while (y != x);
    for (std::size_t z : orbit)
      len[z] = static_cast<int>(orbit.size());
  }
  return len;
}

std::vector<int> cycle_type(std::span<const int> p) {
  std::vector<int> len = cycle_lengths(p);
  std::vector<bool> seen(p.size(), false);
  std::vector<int> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x])
      continue;
    std::size_t y = x;
    do {
      seen[y] = true;
      y = static_cast<std::size_t>(p[y]);
    } while (y != x);
    out.push_back(len[x]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool next_perm(Perm& p) { return std::next_permutation(p.begin(), p.end()); }

} // namespace glr
