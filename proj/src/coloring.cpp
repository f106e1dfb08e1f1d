#include "glr/coloring.hpp"

#include <omp.h>

namespace glr {

namespace {

// out = u^p d^q (in) *^eps over; eps == 0 means no crossing (cusp relation).
struct Constraint {
  int in;
  int over;
  int eps;
  int out;
  Perm shift;
  Perm unshift;
};

struct System {
  int gens = 0;
  std::vector<Constraint> constraints;
};

Perm shift_perm(const FiniteGLRack& x, int p, int q) {
  return compose(power(x.u, p), power(x.d, q));
}

System build(const ReducedPresentation& rp, const FiniteGLRack& x) {
  validate_presentation(rp);
  System sys;
  sys.gens = rp.gens();
  for (int i = 0; i < sys.gens; ++i) {
    const auto& r = rp.relations[static_cast<std::size_t>(i)];
    Perm s = shift_perm(x, r.p, r.q);
    Perm si = inverse(s);
    sys.constraints.push_back({i, r.over, r.eps, (i + 1) % sys.gens, std::move(s), std::move(si)});
  }
  return sys;
}

System build(const FullPresentation& fp, const FiniteGLRack& x) {
  validate_presentation(fp);
  System sys;
  sys.gens = fp.gens;
  const Perm id = identity_perm(x.size());
  for (const auto& rel : fp.relations) {
    if (const auto* c = std::get_if<CuspRel>(&rel)) {
      const Perm& s = c->kind == Shift::U ? x.u : x.d;
      sys.constraints.push_back({c->from, -1, 0, c->to, s, inverse(s)});
    } else {
      const auto& r = std::get<CrossRel>(rel);
      sys.constraints.push_back({r.under_in, r.over, r.eps, r.under_out, id, id});
    }
  }
  return sys;
}

class Search {
public:
  Search(const System& sys, const FiniteGLRack& x, const ColoringOptions& opt) : sys_(sys), x_(x), opt_(opt) {}

  ColoringResult run_seed(int seed) {
    result_ = {};
    std::vector<int> col(static_cast<std::size_t>(sys_.gens), -1);
    col[0] = seed;
    dfs(col);
    return std::move(result_);
  }

private:
  // Fixpoint of forward and backward propagation; false on contradiction.
  bool propagate(std::vector<int>& col) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : sys_.constraints) {
        const int a = col[static_cast<std::size_t>(c.in)];
        const int o = col[static_cast<std::size_t>(c.out)];
        const bool need_over = c.eps != 0;
        const int b = need_over ? col[static_cast<std::size_t>(c.over)] : 0;
        if (b < 0)
          continue;
        if (a >= 0) {
          int v = c.shift[static_cast<std::size_t>(a)];
          if (need_over)
            v = x_.star(v, b, c.eps);
          if (o < 0) {
            col[static_cast<std::size_t>(c.out)] = v;
            changed = true;
          } else if (o != v) {
            return false;
          }
        } else if (o >= 0) {
          const int y = need_over ? x_.star(o, b, -c.eps) : o;
          col[static_cast<std::size_t>(c.in)] = c.unshift[static_cast<std::size_t>(y)];
          changed = true;
        }
      }
    }
    return true;
  }

  void dfs(std::vector<int> col) {
    if (!propagate(col))
      return;
    std::size_t g = 0;
    while (g < col.size() && col[g] >= 0)
      ++g;
    if (g == col.size()) {
      ++result_.count;
      if (opt_.emit && result_.colorings.size() < opt_.cap)
        result_.colorings.push_back(col);
      return;
    }
    for (int v = 0; v < x_.size(); ++v) {
      std::vector<int> next = col;
      next[g] = v;
      dfs(std::move(next));
    }
  }

  const System& sys_;
  const FiniteGLRack& x_;
  const ColoringOptions& opt_;
  ColoringResult result_;
};

ColoringResult merge(std::vector<ColoringResult>& parts, const ColoringOptions& opt) {
  ColoringResult out;
  for (auto& part : parts) {
    out.count += part.count;
    for (auto& c : part.colorings) {
      if (out.colorings.size() >= opt.cap)
        break;
      out.colorings.push_back(std::move(c));
    }
  }
  return out;
}

template <class Pres>
ColoringResult verified(ColoringResult r, const Pres& p, const FiniteGLRack& x) {
  for (const auto& c : r.colorings)
    if (!satisfies(p, x, c))
      throw std::logic_error("emitted coloring fails a relation");
  return r;
}

ColoringResult count_parallel(const System& sys, const FiniteGLRack& x, const ColoringOptions& opt) {
  if (sys.gens == 0) {
    ColoringResult r{1, {}};
    if (opt.emit && opt.cap > 0)
      r.colorings.emplace_back();
    return r;
  }
  const int n = x.size();
  std::vector<ColoringResult> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int seed = 0; seed < n; ++seed) {
    Search s(sys, x, opt);
    parts[static_cast<std::size_t>(seed)] = s.run_seed(seed);
  }
  return merge(parts, opt);
}

ColoringResult count_serial(const System& sys, const FiniteGLRack& x, const ColoringOptions& opt) {
  if (sys.gens == 0) {
    ColoringResult r{1, {}};
    if (opt.emit && opt.cap > 0)
      r.colorings.emplace_back();
    return r;
  }
  std::vector<ColoringResult> parts;
  Search s(sys, x, opt);
  for (int seed = 0; seed < x.size(); ++seed)
    parts.push_back(s.run_seed(seed));
  return merge(parts, opt);
}

bool check_words(const std::vector<std::pair<Word, Word>>& rels, const FiniteGLRack& x,
                 std::span<const int> assignment) {
  for (const auto& [lhs, rhs] : rels)
    if (eval_word(lhs, x, assignment) != eval_word(rhs, x, assignment))
      return false;
  return true;
}

ColoringResult brute(int gens, const std::vector<std::pair<Word, Word>>& rels, const FiniteGLRack& x,
                     std::uint64_t budget, const ColoringOptions& opt) {
  const auto n = static_cast<std::uint64_t>(x.size());
  std::uint64_t total = 1;
  for (int i = 0; i < gens; ++i) {
    if (total > budget / n)
      throw BudgetExceeded("brute force needs " + std::to_string(x.size()) + "^" + std::to_string(gens) +
                           " assignments, over the budget of " + std::to_string(budget));
    total *= n;
  }
  if (total > budget)
    throw BudgetExceeded("brute force over budget");

  ColoringResult out;
  std::vector<int> a(static_cast<std::size_t>(gens), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    if (check_words(rels, x, a)) {
      ++out.count;
      if (opt.emit && out.colorings.size() < opt.cap)
        out.colorings.push_back(a);
    }
    // Odometer with generator 0 most significant, matching search order.
    for (int i = gens - 1; i >= 0; --i) {
      if (++a[static_cast<std::size_t>(i)] < x.size())
        break;
      a[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

} // namespace

bool satisfies(const ReducedPresentation& rp, const FiniteGLRack& x, std::span<const int> assignment) {
  return check_words(relation_words(rp), x, assignment);
}

bool satisfies(const FullPresentation& fp, const FiniteGLRack& x, std::span<const int> assignment) {
  return check_words(relation_words(fp), x, assignment);
}

ColoringResult count_colorings(const ReducedPresentation& rp, const FiniteGLRack& x, ColoringOptions opt) {
  return verified(count_parallel(build(rp, x), x, opt), rp, x);
}

ColoringResult count_colorings(const FullPresentation& fp, const FiniteGLRack& x, ColoringOptions opt) {
  return verified(count_parallel(build(fp, x), x, opt), fp, x);
}

ColoringResult count_colorings(const Presentation& p, const FiniteGLRack& x, ColoringOptions opt) {
  return std::visit([&](const auto& v) { return count_colorings(v, x, opt); }, p);
}

ColoringResult count_colorings_serial(const ReducedPresentation& rp, const FiniteGLRack& x, ColoringOptions opt) {
  return verified(count_serial(build(rp, x), x, opt), rp, x);
}

ColoringResult count_colorings_serial(const FullPresentation& fp, const FiniteGLRack& x, ColoringOptions opt) {
  return verified(count_serial(build(fp, x), x, opt), fp, x);
}

ColoringResult count_bruteforce(const ReducedPresentation& rp, const FiniteGLRack& x, std::uint64_t budget,
                                ColoringOptions opt) {
  validate_presentation(rp);
  return brute(rp.gens(), relation_words(rp), x, budget, opt);
}

ColoringResult count_bruteforce(const FullPresentation& fp, const FiniteGLRack& x, std::uint64_t budget,
                                ColoringOptions opt) {
  validate_presentation(fp);
  return brute(fp.gens, relation_words(fp), x, budget, opt);
}

ColoringResult count_bruteforce(const Presentation& p, const FiniteGLRack& x, std::uint64_t budget,
                                ColoringOptions opt) {
  return std::visit([&](const auto& v) { return count_bruteforce(v, x, budget, opt); }, p);
}

std::uint64_t closed_form_permutation(const PresentationSummary& s, long k, long a, long b) {
  if (k < 1)
    throw std::invalid_argument("k must be at least 1");
  if (a + b != 1)
    throw std::invalid_argument("closed form needs a + b = 1");
  const long t = s.omega - a * s.p - b * s.q;
  return t % k == 0 ? static_cast<std::uint64_t>(k) : 0;
}

std::vector<std::uint64_t> coloring_profile(const Presentation& p, std::span<const FiniteGLRack> racks) {
  std::vector<std::uint64_t> out;
  out.reserve(racks.size());
  for (const auto& x : racks)
    out.push_back(count_colorings(p, x).count);
  return out;
}

} // namespace glr
