#include "glr/isomorphism.hpp"

#include <algorithm>

namespace glr {

std::vector<std::vector<int>> element_signatures(const FiniteGLRack& x) {
  const int n = x.size();
  const auto ul = cycle_lengths(x.u);
  const auto dl = cycle_lengths(x.d);
  const auto tl = cycle_lengths(theta(x.rack));
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int fixes = 0;   // #y with a*y = a
    int fixed = 0;   // #y with y*a = y
    for (int y = 0; y < n; ++y) {
      fixes += x.star(a, y) == a;
      fixed += x.star(y, a) == y;
    }
    const auto col = cycle_type(x.rack.column(a));
    auto& s = sig[static_cast<std::size_t>(a)];
    s = {ul[static_cast<std::size_t>(a)], dl[static_cast<std::size_t>(a)], tl[static_cast<std::size_t>(a)], fixes,
         fixed};
    s.insert(s.end(), col.begin(), col.end());
  }
  return sig;
}

std::optional<Perm> is_isomorphic(const FiniteGLRack& x, const FiniteGLRack& y) {
  const int n = x.size();
  if (n != y.size())
    return std::nullopt;
  const auto sx = element_signatures(x);
  const auto sy = element_signatures(y);
  {
    auto a = sx, b = sy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return std::nullopt;
  }

  const auto N = static_cast<std::size_t>(n);
  Perm f(N, -1);
  std::vector<bool> used(N, false);

  // All constraints among the assigned elements 0..a.
  auto consistent = [&](int a) {
    auto F = [&](int e) { return f[static_cast<std::size_t>(e)]; };
    for (int p = 0; p <= a; ++p) {
      for (int q = 0; q <= a; ++q) {
        int r = x.star(p, q);
        if (r <= a && F(r) != y.star(F(p), F(q)))
          return false;
      }
      int up = x.u[static_cast<std::size_t>(p)];
      int dp = x.d[static_cast<std::size_t>(p)];
      if (up <= a && F(up) != y.u[static_cast<std::size_t>(F(p))])
        return false;
      if (dp <= a && F(dp) != y.d[static_cast<std::size_t>(F(p))])
        return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int a) -> bool {
    if (a == n)
      return true;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || sx[static_cast<std::size_t>(a)] != sy[static_cast<std::size_t>(c)])
        continue;
      f[static_cast<std::size_t>(a)] = c;
      used[static_cast<std::size_t>(c)] = true;
      if (consistent(a) && self(self, a + 1))
        return true;
      used[static_cast<std::size_t>(c)] = false;
      f[static_cast<std::size_t>(a)] = -1;
    }
    return false;
  };
  if (!search(search, 0))
    return std::nullopt;
  return f;
}

std::vector<int> canonical_form(const FiniteGLRack& x) {
  const int n = x.size();
  const auto N = static_cast<std::size_t>(n);
  std::vector<int> best;
  std::vector<int> cur(N * N + 2 * N);
  Perm p = identity_perm(n);
  Perm pinv(N);
  do {
    for (std::size_t a = 0; a < N; ++a)
      pinv[static_cast<std::size_t>(p[a])] = static_cast<int>(a);
    // cur is the relabeled table read in new-label order.
    for (std::size_t a = 0; a < N; ++a) {
      const int oa = pinv[a];
      for (std::size_t b = 0; b < N; ++b)
        cur[a * N + b] = p[static_cast<std::size_t>(x.star(oa, pinv[b]))];
      cur[N * N + a] = p[static_cast<std::size_t>(x.u[static_cast<std::size_t>(oa)])];
      cur[N * N + N + a] = p[static_cast<std::size_t>(x.d[static_cast<std::size_t>(oa)])];
    }
    if (best.empty() || cur < best)
      best = cur;
  } while (next_perm(p));
  return best;
}

} // namespace glr
