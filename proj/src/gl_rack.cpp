#include "glr/gl_rack.hpp"

#include "glr/text_io.hpp"

#include <numeric>

namespace glr {

namespace {

std::size_t at(int n, int x, int y) {
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y);
}

void check_dims(int n, std::span<const int> op) {
  if (n < 1)
    throw std::invalid_argument("order must be at least 1");
  if (op.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("operation table needs n*n entries");
  for (int v : op)
    if (v < 0 || v >= n)
      throw std::invalid_argument("operation table entry out of range");
}

void check_map(int n, std::span<const int> m, const char* name) {
  if (m.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument(std::string(name) + " needs n entries");
  for (int v : m)
    if (v < 0 || v >= n)
      throw std::invalid_argument(std::string(name) + " entry out of range");
}

std::string tuple(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first)
      s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

} // namespace

std::string_view to_string(AxiomViolation::Axiom a) {
  using A = AxiomViolation::Axiom;
  switch (a) {
  case A::ColumnBijective: return "column-bijective";
  case A::SelfDistributive: return "self-distributive";
  case A::UPermutation: return "u-permutation";
  case A::DPermutation: return "d-permutation";
  case A::GL1: return "GL1";
  case A::GL2: return "GL2";
  case A::GL3: return "GL3";
  }
  return "unknown";
}

std::vector<AxiomViolation> validate_rack(int n, std::span<const int> op) {
  using A = AxiomViolation::Axiom;
  check_dims(n, op);
  std::vector<AxiomViolation> out;
  auto s = [&](int x, int y) { return op[at(n, x, y)]; };

  for (int y = 0; y < n; ++y) {
    std::vector<int> hit(static_cast<std::size_t>(n), -1);
    bool bad = false;
    for (int x = 0; x < n && !bad; ++x) {
      int v = s(x, y);
      if (hit[static_cast<std::size_t>(v)] >= 0) {
        out.push_back({A::ColumnBijective, {hit[static_cast<std::size_t>(v)], x, y},
                       "s_y not injective: x*y = x'*y at (x,x',y) = " + tuple({hit[static_cast<std::size_t>(v)], x, y})});
        bad = true;
      }
      hit[static_cast<std::size_t>(v)] = x;
    }
    if (bad)
      break;
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s(s(x, y), z) != s(s(x, z), s(y, z))) {
          out.push_back({A::SelfDistributive, {x, y, z}, "(x*y)*z != (x*z)*(y*z) at " + tuple({x, y, z})});
          return out;
        }
  return out;
}

std::vector<AxiomViolation> validate_glrack(int n, std::span<const int> op, std::span<const int> u,
                                            std::span<const int> d) {
  using A = AxiomViolation::Axiom;
  check_dims(n, op);
  check_map(n, u, "u");
  check_map(n, d, "d");
  std::vector<AxiomViolation> out = validate_rack(n, op);
  auto s = [&](int x, int y) { return op[at(n, x, y)]; };
  auto U = [&](int x) { return u[static_cast<std::size_t>(x)]; };
  auto D = [&](int x) { return d[static_cast<std::size_t>(x)]; };

  if (!is_permutation(u, n))
    out.push_back({A::UPermutation, {}, "u is not a bijection"});
  if (!is_permutation(d, n))
    out.push_back({A::DPermutation, {}, "d is not a bijection"});

  for (int x = 0; x < n; ++x) {
    int xx = s(x, x);
    if (U(D(xx)) != x || D(U(xx)) != x) {
      out.push_back({A::GL1, {x}, "ud(x*x) = du(x*x) = x fails at x = " + std::to_string(x)});
      break;
    }
  }

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (U(s(x, y)) != s(U(x), y) || D(s(x, y)) != s(D(x), y)) {
          out.push_back({A::GL2, {x, y}, "u(x*y) = u(x)*y or d(x*y) = d(x)*y fails at " + tuple({x, y})});
          return;
        }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (s(x, U(y)) != s(x, y) || s(x, D(y)) != s(x, y)) {
          out.push_back({A::GL3, {x, y}, "x*u(y) = x*d(y) = x*y fails at " + tuple({x, y})});
          return;
        }
  }();
  return out;
}

namespace {

std::string describe(const std::vector<AxiomViolation>& vs) {
  std::string msg = "axioms violated:";
  for (const auto& v : vs)
    msg += " [" + std::string(to_string(v.axiom)) + ": " + v.message + "]";
  return msg;
}

} // namespace

FiniteRack FiniteRack::from_table(int n, std::vector<int> op) {
  auto vs = validate_rack(n, op);
  if (!vs.empty())
    throw InvalidStructure(describe(vs), std::move(vs));
  FiniteRack r;
  r.n_ = n;
  r.op_ = std::move(op);
  r.inv_.assign(r.op_.size(), 0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      r.inv_[at(n, r.op_[at(n, x, y)], y)] = x;
  return r;
}

Perm FiniteRack::column(int y) const {
  Perm p(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x)
    p[static_cast<std::size_t>(x)] = star(x, y);
  return p;
}

FiniteGLRack make_glrack(int n, std::vector<int> op, Perm u, Perm d) {
  auto vs = validate_glrack(n, op, u, d);
  if (!vs.empty())
    throw InvalidStructure(describe(vs), std::move(vs));
  return FiniteGLRack{FiniteRack::from_table(n, std::move(op)), std::move(u), std::move(d)};
}

Perm theta(const FiniteRack& rack) {
  Perm t(static_cast<std::size_t>(rack.size()));
  for (int x = 0; x < rack.size(); ++x)
    t[static_cast<std::size_t>(x)] = rack.star(x, x);
  return t;
}

bool is_quandle(const FiniteRack& rack) {
  for (int x = 0; x < rack.size(); ++x)
    if (rack.star(x, x) != x)
      return false;
  return true;
}

Group Group::from_cayley(int n, std::vector<int> mul) {
  check_dims(n, mul);
  Group g;
  g.n = n;
  g.mul = std::move(mul);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g(g(a, b), c) != g(a, g(b, c)))
          throw InvalidStructure("Cayley table is not associative at " + tuple({a, b, c}));
  g.identity = -1;
  for (int e = 0; e < n && g.identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = g(e, a) == a && g(a, e) == a;
    if (ok)
      g.identity = e;
  }
  if (g.identity < 0)
    throw InvalidStructure("Cayley table has no identity");
  g.inv.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g(a, b) == g.identity && g(b, a) == g.identity)
        g.inv[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (g.inv[static_cast<std::size_t>(a)] < 0)
      throw InvalidStructure("element " + std::to_string(a) + " has no inverse");
  return g;
}

Group cyclic_group(int n) {
  std::vector<int> mul(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[at(n, a, b)] = (a + b) % n;
  return Group::from_cayley(n, std::move(mul));
}

Group symmetric_group(int k) {
  std::vector<Perm> elems;
  Perm p = identity_perm(k);
  do {
    elems.push_back(p);
  } while (next_perm(p));
  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const Perm& q) {
    for (int i = 0; i < n; ++i)
      if (elems[static_cast<std::size_t>(i)] == q)
        return i;
    return -1;
  };
  std::vector<int> mul(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[at(n, a, b)] = index_of(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  return Group::from_cayley(n, std::move(mul));
}

FiniteGLRack mk_trivial(int n) {
  if (n < 1)
    throw std::invalid_argument("order must be at least 1");
  std::vector<int> op(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[at(n, x, y)] = x;
  return make_glrack(n, std::move(op), identity_perm(n), identity_perm(n));
}

FiniteGLRack mk_conjugation(const Group& g, int z) {
  const int n = g.n;
  if (z < 0 || z >= n)
    throw std::invalid_argument("z out of range");
  for (int a = 0; a < n; ++a)
    if (g(z, a) != g(a, z))
      throw InvalidStructure("z = " + std::to_string(z) + " is not central");
  std::vector<int> op(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[at(n, x, y)] = g(g(g.inv[static_cast<std::size_t>(y)], x), y);
  const int zinv = g.inv[static_cast<std::size_t>(z)];
  Perm u(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    u[static_cast<std::size_t>(x)] = g(z, x);
    d[static_cast<std::size_t>(x)] = g(zinv, x);
  }
  return make_glrack(n, std::move(op), std::move(u), std::move(d));
}

FiniteRack mk_core(const Group& g) {
  const int n = g.n;
  std::vector<int> op(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[at(n, x, y)] = g(g(y, g.inv[static_cast<std::size_t>(x)]), y);
  return FiniteRack::from_table(n, std::move(op));
}

FiniteGLRack mk_permutation(int n, const Perm& sigma, const Perm& u, const Perm& d) {
  if (!is_permutation(sigma, n) || !is_permutation(u, n) || !is_permutation(d, n))
    throw std::invalid_argument("sigma, u and d must be permutations of 0..n-1");
  if (compose(d, u) != inverse(sigma))
    throw InvalidStructure("permutation GL-rack requires d o u = sigma^-1");
  std::vector<int> op(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[at(n, x, y)] = sigma[static_cast<std::size_t>(x)];
  return make_glrack(n, std::move(op), u, d);
}

FiniteGLRack mk_permutation_family(int k, long a, long b) {
  if (k < 1)
    throw std::invalid_argument("k must be at least 1");
  if (a + b != 1)
    throw std::invalid_argument("permutation family needs a + b = 1");
  Perm sigma = cycle_perm(k);
  return mk_permutation(k, sigma, power(sigma, -a), power(sigma, -b));
}

bool is_homomorphism(std::span<const int> f, const FiniteGLRack& x, const FiniteGLRack& y) {
  const int n = x.size();
  if (f.size() != static_cast<std::size_t>(n))
    return false;
  for (int v : f)
    if (v < 0 || v >= y.size())
      return false;
  auto F = [&](int a) { return f[static_cast<std::size_t>(a)]; };
  for (int a = 0; a < n; ++a) {
    if (F(x.u[static_cast<std::size_t>(a)]) != y.u[static_cast<std::size_t>(F(a))])
      return false;
    if (F(x.d[static_cast<std::size_t>(a)]) != y.d[static_cast<std::size_t>(F(a))])
      return false;
    for (int b = 0; b < n; ++b)
      if (F(x.star(a, b)) != y.star(F(a), F(b)))
        return false;
  }
  return true;
}

FiniteGLRack relabel(const FiniteGLRack& x, std::span<const int> p) {
  const int n = x.size();
  if (!is_permutation(p, n))
    throw std::invalid_argument("relabel needs a permutation");
  auto P = [&](int a) { return p[static_cast<std::size_t>(a)]; };
  std::vector<int> op(static_cast<std::size_t>(n * n));
  Perm u(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    u[static_cast<std::size_t>(P(a))] = P(x.u[static_cast<std::size_t>(a)]);
    d[static_cast<std::size_t>(P(a))] = P(x.d[static_cast<std::size_t>(a)]);
    for (int b = 0; b < n; ++b)
      op[at(n, P(a), P(b))] = P(x.star(a, b));
  }
  return FiniteGLRack{FiniteRack::from_table(n, std::move(op)), std::move(u), std::move(d)};
}

FiniteGLRack parse_glrack(std::string_view text) {
  auto lines = tokenize_lines(text);
  const char* keys[] = {"size", "op", "u", "d"};
  if (lines.size() < 4)
    throw ParseError(lines.empty() ? 1 : lines.back().line + 1, 1,
                     "GL-rack needs 'size', 'op', 'u' and 'd' lines");
  if (lines.size() > 4)
    fail_at(lines[4].tokens[0], "unexpected content after 'd' line");
  for (std::size_t i = 0; i < 4; ++i)
    if (lines[i].tokens[0].text != keys[i])
      fail_at(lines[i].tokens[0], std::string("expected '") + keys[i] + "'");

  if (lines[0].tokens.size() != 2)
    fail_at(lines[0].tokens[0], "expected 'size <n>'");
  const int n = parse_int(lines[0].tokens[1]);
  if (n < 1)
    fail_at(lines[0].tokens[1], "size must be at least 1");

  auto read = [&](const TokenLine& l, std::size_t count) {
    if (l.tokens.size() != count + 1)
      throw ParseError(l.line, l.tokens.back().column,
                       "expected " + std::to_string(count) + " entries, got " + std::to_string(l.tokens.size() - 1));
    std::vector<int> v;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      int e = parse_int(l.tokens[i]);
      if (e < 0 || e >= n)
        fail_at(l.tokens[i], "entry out of range 0.." + std::to_string(n - 1));
      v.push_back(e);
    }
    return v;
  };
  auto op = read(lines[1], static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto u = read(lines[2], static_cast<std::size_t>(n));
  auto d = read(lines[3], static_cast<std::size_t>(n));
  return make_glrack(n, std::move(op), std::move(u), std::move(d));
}

std::string to_text(const FiniteGLRack& x) {
  return "size " + std::to_string(x.size()) + "\nop " + join_ints(x.rack.table()) + "\nu " + join_ints(x.u) +
         "\nd " + join_ints(x.d) + "\n";
}

} // namespace glr
