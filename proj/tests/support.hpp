#pragma once

// Shared test helpers: a random front code generator and oracles that work
// straight from raw tables, without going through the library's search code.

#include "glr/front_code.hpp"
#include "glr/gl_rack.hpp"
#include "glr/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace glr::test {

/// Random valid code with up to `max_crossings` crossings and an even number
/// of cusps in [2, max_cusps].
inline FrontCode random_code(std::mt19937& rng, int max_crossings = 10, int max_cusps = 12) {
  std::uniform_int_distribution<int> nc(0, max_crossings), ncusp(1, max_cusps / 2), coin(0, 1);
  const int c = nc(rng);
  const int cusps = 2 * ncusp(rng);
  FrontCode code{"random", {}};
  for (int id = 1; id <= c; ++id) {
    const int sign = coin(rng) ? 1 : -1;
    code.events.push_back(Event::over(id, sign));
    code.events.push_back(Event::under(id, sign));
  }
  for (int i = 0; i < cusps; ++i)
    code.events.push_back(coin(rng) ? Event::up() : Event::down());
  std::shuffle(code.events.begin(), code.events.end(), rng);
  return code;
}

inline std::vector<int> table_inverse(const FiniteGLRack& x) {
  const int n = x.size();
  const auto& op = x.rack.table();
  std::vector<int> inv(op.size());
  for (int y = 0; y < n; ++y)
    for (int a = 0; a < n; ++a)
      inv[op[a * n + y] * n + y] = a;
  return inv;
}

inline int apply_power(const std::vector<int>& f, int times, int x) {
  for (int i = 0; i < times; ++i)
    x = f[x];
  return x;
}

/// Counts colorings of a reduced presentation by trying every assignment and
/// checking each relation on raw tables.
inline std::uint64_t oracle_count(const ReducedPresentation& rp, const FiniteGLRack& x) {
  const int n = x.size(), m = rp.gens();
  const auto& op = x.rack.table();
  const auto inv = table_inverse(x);
  std::vector<int> a(m, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const auto& r = rp.relations[i];
      int v = apply_power(x.u, r.p, apply_power(x.d, r.q, a[i]));
      v = r.eps > 0 ? op[v * n + a[r.over]] : inv[v * n + a[r.over]];
      ok = v == a[(i + 1) % m];
    }
    count += ok;
    int j = m - 1;
    while (j >= 0 && ++a[j] == n)
      a[j--] = 0;
    if (j < 0)
      break;
  }
  return m == 0 ? 1 : count;
}

/// Same for a full presentation.
inline std::uint64_t oracle_count(const FullPresentation& fp, const FiniteGLRack& x) {
  const int n = x.size(), m = fp.gens;
  const auto& op = x.rack.table();
  const auto inv = table_inverse(x);
  std::vector<int> a(m, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& rel : fp.relations) {
      if (const auto* c = std::get_if<CuspRel>(&rel)) {
        ok = ok && (c->kind == Shift::U ? x.u : x.d)[a[c->from]] == a[c->to];
      } else {
        const auto& r = std::get<CrossRel>(rel);
        const int v = r.eps > 0 ? op[a[r.under_in] * n + a[r.over]] : inv[a[r.under_in] * n + a[r.over]];
        ok = ok && v == a[r.under_out];
      }
    }
    count += ok;
    int j = m - 1;
    while (j >= 0 && ++a[j] == n)
      a[j--] = 0;
    if (j < 0)
      break;
  }
  return count;
}

/// Every axiom checked directly on raw tables.
inline bool oracle_is_glrack(int n, const std::vector<int>& op, const std::vector<int>& u, const std::vector<int>& d) {
  auto s = [&](int x, int y) { return op[x * n + y]; };
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x)
      seen[s(x, y)] = true;
    if (std::count(seen.begin(), seen.end(), false))
      return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s(s(x, y), z) != s(s(x, z), s(y, z)))
          return false;
  for (int x = 0; x < n; ++x) {
    const int t = s(x, x);
    if (u[d[t]] != x || d[u[t]] != x)
      return false;
    for (int y = 0; y < n; ++y) {
      if (u[s(x, y)] != s(u[x], y) || d[s(x, y)] != s(d[x], y))
        return false;
      if (s(x, u[y]) != s(x, y) || s(x, d[y]) != s(x, y))
        return false;
    }
  }
  return true;
}

/// Tries every bijection.
inline std::optional<std::vector<int>> oracle_isomorphism(const FiniteGLRack& x, const FiniteGLRack& y) {
  const int n = x.size();
  if (y.size() != n)
    return std::nullopt;
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = f[x.u[a]] == y.u[f[a]] && f[x.d[a]] == y.d[f[a]];
      for (int b = 0; b < n && ok; ++b)
        ok = f[x.star(a, b)] == y.star(f[a], f[b]);
    }
    if (ok)
      return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

/// All GL-racks of order n found by exhaustive table search, one per class.
inline std::vector<FiniteGLRack> oracle_glracks(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<FiniteGLRack> classes;
  std::vector<int> op(n * n, 0);
  while (true) {
    for (const auto& u : perms)
      for (const auto& d : perms)
        if (oracle_is_glrack(n, op, u, d)) {
          auto x = make_glrack(n, op, u, d);
          bool fresh = std::none_of(classes.begin(), classes.end(),
                                    [&](const FiniteGLRack& c) { return oracle_isomorphism(c, x).has_value(); });
          if (fresh)
            classes.push_back(x);
        }
    int j = n * n - 1;
    while (j >= 0 && ++op[j] == n)
      op[j--] = 0;
    if (j < 0)
      break;
  }
  return classes;
}

} // namespace glr::test
