#include "glr/word.hpp"

#include <algorithm>

namespace glr {

Word Word::gen(int index) {
  Word w;
  w.kind_ = Kind::Gen;
  w.gen_ = index;
  return w;
}

Word Word::star(Word a, Word b) {
  Word w;
  w.kind_ = Kind::Star;
  w.args_ = {std::move(a), std::move(b)};
  return w;
}

Word Word::star_inv(Word a, Word b) {
  Word w;
  w.kind_ = Kind::StarInv;
  w.args_ = {std::move(a), std::move(b)};
  return w;
}

Word Word::star(Word a, Word b, int eps) {
  return eps > 0 ? star(std::move(a), std::move(b)) : star_inv(std::move(a), std::move(b));
}

Word Word::up(Word a) {
  Word w;
  w.kind_ = Kind::Up;
  w.args_ = {std::move(a)};
  return w;
}

Word Word::down(Word a) {
  Word w;
  w.kind_ = Kind::Down;
  w.args_ = {std::move(a)};
  return w;
}

Word Word::shifted(Word a, int p, int q) {
  for (int i = 0; i < q; ++i)
    a = down(std::move(a));
  for (int i = 0; i < p; ++i)
    a = up(std::move(a));
  return a;
}

int Word::max_generator() const {
  if (kind_ == Kind::Gen)
    return gen_;
  int m = -1;
  for (const Word& a : args_)
    m = std::max(m, a.max_generator());
  return m;
}

int eval_word(const Word& w, const FiniteGLRack& x, std::span<const int> assignment) {
  switch (w.kind()) {
  case Word::Kind::Gen: {
    const int g = w.generator();
    if (g < 0 || static_cast<std::size_t>(g) >= assignment.size() || assignment[static_cast<std::size_t>(g)] < 0)
      throw UnassignedGenerator("generator " + std::to_string(g + 1) + " is unassigned");
    const int v = assignment[static_cast<std::size_t>(g)];
    if (v >= x.size())
      throw std::out_of_range("generator color out of range");
    return v;
  }
  case Word::Kind::Star:
    return x.rack.star(eval_word(w.left(), x, assignment), eval_word(w.right(), x, assignment));
  case Word::Kind::StarInv:
    return x.rack.star_inv(eval_word(w.left(), x, assignment), eval_word(w.right(), x, assignment));
  case Word::Kind::Up:
    return x.u[static_cast<std::size_t>(eval_word(w.left(), x, assignment))];
  case Word::Kind::Down:
    return x.d[static_cast<std::size_t>(eval_word(w.left(), x, assignment))];
  }
  throw std::logic_error("bad word kind");
}

std::string to_string(const Word& w, std::string_view prefix) {
  auto wrap = [&](const Word& a) {
    bool infix = a.kind() == Word::Kind::Star || a.kind() == Word::Kind::StarInv;
    return infix ? "(" + to_string(a, prefix) + ")" : to_string(a, prefix);
  };
  switch (w.kind()) {
  case Word::Kind::Gen:
    return std::string(prefix) + std::to_string(w.generator() + 1);
  case Word::Kind::Star:
    return wrap(w.left()) + " * " + wrap(w.right());
  case Word::Kind::StarInv:
    return wrap(w.left()) + " *^-1 " + wrap(w.right());
  case Word::Kind::Up:
    return "u(" + to_string(w.left(), prefix) + ")";
  case Word::Kind::Down:
    return "d(" + to_string(w.left(), prefix) + ")";
  }
  return "?";
}

} // namespace glr
