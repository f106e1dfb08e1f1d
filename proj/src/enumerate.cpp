#include "glr/enumerate.hpp"

#include "glr/isomorphism.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

namespace glr {

namespace {

void check_bound(int n, int bound) {
  if (n < 1)
    throw std::invalid_argument("order must be at least 1");
  if (n > bound)
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (next_perm(p));
  return out;
}

// s_z o s_y == s_{s_z(y)} o s_z for every assigned triple touching `last`.
bool columns_consistent(const std::vector<const Perm*>& cols, int last, int n) {
  auto check = [&](int y, int z) {
    const Perm* sy = cols[static_cast<std::size_t>(y)];
    const Perm* sz = cols[static_cast<std::size_t>(z)];
    if (!sy || !sz)
      return true;
    const int w = (*sz)[static_cast<std::size_t>(y)];
    const Perm* sw = cols[static_cast<std::size_t>(w)];
    if (!sw)
      return true;
    for (int x = 0; x < n; ++x)
      if ((*sz)[static_cast<std::size_t>((*sy)[static_cast<std::size_t>(x)])] !=
          (*sw)[static_cast<std::size_t>((*sz)[static_cast<std::size_t>(x)])])
        return false;
    return true;
  };
  // Triples whose third column is `last` are covered by re-checking every
  // assigned pair; n <= bound keeps this cheap.
  for (int y = 0; y <= last; ++y)
    for (int z = 0; z <= last; ++z)
      if (!check(y, z))
        return false;
  return true;
}

FiniteRack rack_from_columns(const std::vector<const Perm*>& cols, int n) {
  std::vector<int> op(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[static_cast<std::size_t>(x * n + y)] = (*cols[static_cast<std::size_t>(y)])[static_cast<std::size_t>(x)];
  return FiniteRack::from_table(n, std::move(op));
}

// Completes columns 1..n-1 given column 0.
void extend_columns(const std::vector<Perm>& perms, std::vector<const Perm*>& cols, int next, int n,
                    std::vector<FiniteRack>& out) {
  if (next == n) {
    out.push_back(rack_from_columns(cols, n));
    return;
  }
  for (const Perm& p : perms) {
    cols[static_cast<std::size_t>(next)] = &p;
    if (columns_consistent(cols, next, n))
      extend_columns(perms, cols, next + 1, n, out);
  }
  cols[static_cast<std::size_t>(next)] = nullptr;
}

std::vector<FiniteRack> racks_with_first_column(const std::vector<Perm>& perms, std::size_t first, int n) {
  std::vector<FiniteRack> out;
  std::vector<const Perm*> cols(static_cast<std::size_t>(n), nullptr);
  cols[0] = &perms[first];
  if (columns_consistent(cols, 0, n))
    extend_columns(perms, cols, 1, n, out);
  return out;
}

std::vector<std::pair<std::vector<int>, FiniteGLRack>> glracks_over(const FiniteRack& rack) {
  std::vector<std::pair<std::vector<int>, FiniteGLRack>> out;
  for (Perm& u : admissible_u(rack)) {
    Perm d = forced_d(rack, u);
    if (!validate_glrack(rack.size(), rack.table(), u, d).empty())
      continue;
    FiniteGLRack x{rack, std::move(u), std::move(d)};
    auto key = canonical_form(x);
    out.emplace_back(std::move(key), std::move(x));
  }
  return out;
}

std::vector<FiniteGLRack> dedupe(std::vector<std::vector<std::pair<std::vector<int>, FiniteGLRack>>> parts) {
  std::map<std::vector<int>, FiniteGLRack> classes;
  for (auto& part : parts)
    for (auto& [key, x] : part)
      classes.try_emplace(std::move(key), std::move(x));
  std::vector<FiniteGLRack> out;
  out.reserve(classes.size());
  for (auto& [key, x] : classes) {
    // Store the canonical representative itself so output bytes do not
    // depend on which labeled copy was found first.
    const int n = x.size();
    const auto nn = static_cast<std::ptrdiff_t>(n) * n;
    std::vector<int> op(key.begin(), key.begin() + nn);
    Perm u(key.begin() + nn, key.begin() + nn + n);
    Perm d(key.begin() + nn + n, key.end());
    out.push_back(FiniteGLRack{FiniteRack::from_table(n, std::move(op)), std::move(u), std::move(d)});
  }
  return out;
}

} // namespace

std::vector<FiniteRack> enumerate_rack_tables_serial(int n) {
  const auto perms = all_perms(n);
  std::vector<FiniteRack> out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    auto part = racks_with_first_column(perms, i, n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<FiniteRack> enumerate_rack_tables(int n) {
  const auto perms = all_perms(n);
  std::vector<std::vector<FiniteRack>> parts(perms.size());
  const auto count = static_cast<long>(perms.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i)
    parts[static_cast<std::size_t>(i)] = racks_with_first_column(perms, static_cast<std::size_t>(i), n);
  std::vector<FiniteRack> out;
  for (auto& part : parts)
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

std::vector<FiniteRack> enumerate_racks(int n, int bound) {
  check_bound(n, bound);
  std::map<std::vector<int>, FiniteRack> classes;
  for (FiniteRack& r : enumerate_rack_tables(n)) {
    // Identity u and d are fixed by every relabeling, so the key's op part is
    // the canonical table of the rack alone.
    FiniteGLRack probe{r, identity_perm(n), identity_perm(n)};
    auto key = canonical_form(probe);
    key.resize(static_cast<std::size_t>(n * n));
    classes.try_emplace(std::move(key), std::move(r));
  }
  std::vector<FiniteRack> out;
  for (auto& [key, r] : classes)
    out.push_back(FiniteRack::from_table(n, key));
  return out;
}

std::vector<Perm> admissible_u(const FiniteRack& rack) {
  const int n = rack.size();
  std::vector<Perm> out;
  Perm u = identity_perm(n);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = rack.star(x, u[static_cast<std::size_t>(y)]) == rack.star(x, y) &&
             u[static_cast<std::size_t>(rack.star(x, y))] == rack.star(u[static_cast<std::size_t>(x)], y);
    if (ok)
      out.push_back(u);
  } while (next_perm(u));
  return out;
}

Perm forced_d(const FiniteRack& rack, const Perm& u) {
  return compose(inverse(theta(rack)), inverse(u));
}

std::vector<FiniteGLRack> enumerate_glracks_serial(int n, int bound) {
  check_bound(n, bound);
  auto racks = enumerate_rack_tables_serial(n);
  std::vector<std::vector<std::pair<std::vector<int>, FiniteGLRack>>> parts;
  for (const auto& r : racks)
    parts.push_back(glracks_over(r));
  return dedupe(std::move(parts));
}

std::vector<FiniteGLRack> enumerate_glracks(int n, int bound) {
  check_bound(n, bound);
  auto racks = enumerate_rack_tables(n);
  std::vector<std::vector<std::pair<std::vector<int>, FiniteGLRack>>> parts(racks.size());
  const auto count = static_cast<long>(racks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i)
    parts[static_cast<std::size_t>(i)] = glracks_over(racks[static_cast<std::size_t>(i)]);
  return dedupe(std::move(parts));
}

std::vector<FiniteGLRack> enumerate_glracks_upto(int max_order, int bound) {
  std::vector<FiniteGLRack> out;
  for (int n = 1; n <= max_order; ++n) {
    auto part = enumerate_glracks(n, bound);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

} // namespace glr
