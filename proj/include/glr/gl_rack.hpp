#pragma once

// Finite racks and generalized Legendrian racks (GL-racks) as explicit tables.
//
// Elements are 0..n-1. The rack operation is stored row-major, op[x*n + y] =
// x * y, and the right translation s_y : x -> x * y is a column of the table.
// The inverse operation x *^-1 y = s_y^-1(x) is materialized at construction.

#include "glr/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glr {

class FiniteRack {
public:
  FiniteRack() = default;

  /// Builds the rack and its inverse table. Throws InvalidStructure unless
  /// every column is a bijection and the table is right self-distributive.
  static FiniteRack from_table(int n, std::vector<int> op);

  int size() const noexcept { return n_; }
  int star(int x, int y) const { return op_[idx(x, y)]; }
  int star_inv(int x, int y) const { return inv_[idx(x, y)]; }
  /// x *^eps y for eps = +1 / -1.
  int star(int x, int y, int eps) const { return eps > 0 ? star(x, y) : star_inv(x, y); }

  const std::vector<int>& table() const noexcept { return op_; }
  const std::vector<int>& inverse_table() const noexcept { return inv_; }

  /// s_y as a permutation: x -> x * y.
  Perm column(int y) const;

  friend bool operator==(const FiniteRack& a, const FiniteRack& b) { return a.n_ == b.n_ && a.op_ == b.op_; }

private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
  }

  int n_ = 0;
  std::vector<int> op_;
  std::vector<int> inv_;
};

struct FiniteGLRack {
  FiniteRack rack;
  Perm u;
  Perm d;

  int size() const noexcept { return rack.size(); }
  int star(int x, int y) const { return rack.star(x, y); }
  int star(int x, int y, int eps) const { return rack.star(x, y, eps); }

  friend bool operator==(const FiniteGLRack&, const FiniteGLRack&) = default;
};

struct AxiomViolation {
  enum class Axiom : std::uint8_t {
    ColumnBijective,     // s_y is a bijection
    SelfDistributive,    // (x*y)*z = (x*z)*(y*z)
    UPermutation,
    DPermutation,
    GL1,                 // u(d(x*x)) = d(u(x*x)) = x
    GL2,                 // u(x*y) = u(x)*y, d(x*y) = d(x)*y
    GL3,                 // x*u(y) = x*d(y) = x*y
  };
  Axiom axiom;
  std::vector<int> witness;  // the offending tuple
  std::string message;
};

std::string_view to_string(AxiomViolation::Axiom a);

/// Exhaustive axiom check of a candidate table. Throws std::invalid_argument
/// for inconsistent dimensions or out-of-range entries.
std::vector<AxiomViolation> validate_glrack(int n, std::span<const int> op, std::span<const int> u,
                                            std::span<const int> d);
std::vector<AxiomViolation> validate_rack(int n, std::span<const int> op);

class InvalidStructure : public std::runtime_error {
public:
  explicit InvalidStructure(const std::string& what, std::vector<AxiomViolation> v = {})
      : std::runtime_error(what), violations_(std::move(v)) {}
  const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }

private:
  std::vector<AxiomViolation> violations_;
};

/// Validates and builds. Throws InvalidStructure listing the violations.
FiniteGLRack make_glrack(int n, std::vector<int> op, Perm u, Perm d);

/// theta(x) = x * x.
Perm theta(const FiniteRack& rack);
bool is_quandle(const FiniteRack& rack);

/// A finite group given by its Cayley table mul[a*n + b] = ab.
struct Group {
  int n = 0;
  std::vector<int> mul;
  int identity = 0;
  std::vector<int> inv;

  static Group from_cayley(int n, std::vector<int> mul);
  int operator()(int a, int b) const { return mul[static_cast<std::size_t>(a * n + b)]; }
};

/// Cayley table of the cyclic group Z_n.
Group cyclic_group(int n);
/// Cayley table of the symmetric group on k letters, elements in lexicographic order.
Group symmetric_group(int k);

FiniteGLRack mk_trivial(int n);
/// Conjugation quandle x * y = y^-1 x y with u(x) = z x, d(x) = z^-1 x. z must be central.
FiniteGLRack mk_conjugation(const Group& g, int z);
/// Core quandle x * y = y x^-1 y.
FiniteRack mk_core(const Group& g);
/// Permutation rack x * y = sigma(x) with the given u and d; requires d o u = sigma^-1.
FiniteGLRack mk_permutation(int n, const Perm& sigma, const Perm& u, const Perm& d);
/// The k-cycle permutation GL-rack with u = sigma^-a, d = sigma^-b (a + b = 1).
FiniteGLRack mk_permutation_family(int k, long a, long b);

/// Exhaustive check that f preserves *, u and d.
bool is_homomorphism(std::span<const int> f, const FiniteGLRack& x, const FiniteGLRack& y);

/// The GL-rack transported along the bijection p (element x becomes p[x]).
FiniteGLRack relabel(const FiniteGLRack& x, std::span<const int> p);

// Text format: size <n> / op <n*n entries> / u <n entries> / d <n entries>
FiniteGLRack parse_glrack(std::string_view text);
std::string to_text(const FiniteGLRack& x);

} // namespace glr
