#include "glr/moves.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

namespace glr {

namespace {

constexpr std::string_view kLr1Pattern = "x<c><r>+ c<a> c<b> x<c><r'>+ with {a,b} = {u,d} and r != r'";
constexpr std::string_view kLr2Pattern =
    "x<c1><r><e> c? x<c2><r><-e> around a cusp, with x<c1><r'> and x<c2><r'> adjacent elsewhere";
constexpr std::string_view kLr3Pattern =
    "three adjacent pass pairs over the named crossings: one over-over, one over-under, one "
    "under-under, with sign(top,mid)*sign(top,bottom) = order(mid)*order(bottom)";

std::size_t wrap(std::size_t i, std::size_t n) { return i % n; }

bool adjacent(std::size_t a, std::size_t b, std::size_t n) {
  return wrap(a + 1, n) == b || wrap(b + 1, n) == a;
}

Role flip(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

FrontCode erase_indices(const FrontCode& code, const std::set<std::size_t>& drop) {
  FrontCode out;
  out.name = code.name;
  for (std::size_t i = 0; i < code.events.size(); ++i)
    if (!drop.count(i))
      out.events.push_back(code.events[i]);
  return out;
}

void require_result_valid(const FrontCode& out, std::string_view pattern) {
  auto vs = validate(out);
  if (!vs.empty())
    throw MoveMismatch(std::string(pattern), "the rewritten code would be invalid (" +
                                                 std::string(to_string(vs.front().kind)) + ")");
}

std::size_t other_pass(const FrontCode& code, std::size_t i) {
  const Event& e = code.events[i];
  return find_pass(code, e.crossing, flip(e.role));
}

FrontCode lr1_insert(const FrontCode& code, const Lr1Insert& s) {
  if (s.gap > code.events.size())
    throw std::out_of_range("LR1 insertion gap out of range");
  const int c = max_crossing_id(code) + 1;
  std::vector<Event> kink{Event::pass(c, s.first, 1), Event::down(), Event::up(),
                          Event::pass(c, flip(s.first), 1)};
  FrontCode out = code;
  out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(s.gap), kink.begin(), kink.end());
  return out;
}

std::optional<std::string> lr1_match(const FrontCode& code, std::size_t i) {
  const std::size_t n = code.events.size();
  if (n < 4)
    return "code is shorter than a kink";
  const Event& a = code.events[wrap(i, n)];
  const Event& c1 = code.events[wrap(i + 1, n)];
  const Event& c2 = code.events[wrap(i + 2, n)];
  const Event& b = code.events[wrap(i + 3, n)];
  if (!a.is_pass() || !b.is_pass() || a.crossing != b.crossing)
    return "events " + std::to_string(i) + " and " + std::to_string(i + 3) + " are not passes of one crossing";
  if (a.role == b.role || a.sign != 1 || b.sign != 1)
    return "kink crossing must be positive with one over and one under pass";
  if (!c1.is_cusp() || !c2.is_cusp() || c1.dir == c2.dir)
    return "kink needs one up and one down cusp between its passes";
  return std::nullopt;
}

FrontCode lr1_remove(const FrontCode& code, const Lr1Remove& s) {
  const std::size_t n = code.events.size();
  if (s.index >= n)
    throw std::out_of_range("LR1 site out of range");
  if (auto why = lr1_match(code, s.index))
    throw MoveMismatch(std::string(kLr1Pattern), *why);
  std::set<std::size_t> drop;
  for (std::size_t k = 0; k < 4; ++k)
    drop.insert(wrap(s.index + k, n));
  FrontCode out = erase_indices(code, drop);
  require_result_valid(out, kLr1Pattern);
  return out;
}

FrontCode lr2_insert(const FrontCode& code, const Lr2Insert& s) {
  const std::size_t n = code.events.size();
  if (s.cusp >= n || s.gap > n)
    throw std::out_of_range("LR2 site out of range");
  if (!code.events[s.cusp].is_cusp())
    throw MoveMismatch("a cusp event at the cusp index", "event " + std::to_string(s.cusp) + " is a crossing pass");
  if (s.sign != 1 && s.sign != -1)
    throw std::invalid_argument("LR2 sign must be +1 or -1");

  const int c1 = max_crossing_id(code) + 1;
  const int c2 = c1 + 1;
  const Role other = flip(s.cusp_role);
  FrontCode out;
  out.name = code.name;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == s.gap) {
      out.events.push_back(Event::pass(c1, other, s.sign));
      out.events.push_back(Event::pass(c2, other, -s.sign));
    }
    if (k == n)
      break;
    if (k == s.cusp) {
      out.events.push_back(Event::pass(c1, s.cusp_role, s.sign));
      out.events.push_back(code.events[k]);
      out.events.push_back(Event::pass(c2, s.cusp_role, -s.sign));
    } else {
      out.events.push_back(code.events[k]);
    }
  }
  return out;
}

struct Lr2Match {
  std::set<std::size_t> drop;
};

std::variant<Lr2Match, std::string> lr2_match(const FrontCode& code, std::size_t cusp) {
  const std::size_t n = code.events.size();
  if (n < 5)
    return std::string("code is too short");
  if (!code.events[cusp].is_cusp())
    return "event " + std::to_string(cusp) + " is not a cusp";
  const std::size_t ia = wrap(cusp + n - 1, n);
  const std::size_t ib = wrap(cusp + 1, n);
  const Event& a = code.events[ia];
  const Event& b = code.events[ib];
  if (!a.is_pass() || !b.is_pass())
    return std::string("the cusp is not flanked by two crossing passes");
  if (a.crossing == b.crossing)
    return std::string("flanking passes belong to the same crossing");
  if (a.role != b.role || a.sign != -b.sign)
    return std::string("flanking passes need equal roles and opposite signs");
  const std::size_t oa = other_pass(code, ia);
  const std::size_t ob = other_pass(code, ib);
  if (oa == std::string::npos || ob == std::string::npos)
    return std::string("flanking crossings are incomplete");
  if (!adjacent(oa, ob, n))
    return std::string("the other passes of the flanking crossings are not adjacent");
  return Lr2Match{{ia, ib, oa, ob}};
}

FrontCode lr2_remove(const FrontCode& code, const Lr2Remove& s) {
  if (s.cusp >= code.events.size())
    throw std::out_of_range("LR2 site out of range");
  auto m = lr2_match(code, s.cusp);
  if (auto* why = std::get_if<std::string>(&m))
    throw MoveMismatch(std::string(kLr2Pattern), *why);
  FrontCode out = erase_indices(code, std::get<Lr2Match>(m).drop);
  require_result_valid(out, kLr2Pattern);
  return out;
}

// A strand segment through two of the triangle's crossings.
struct PassPair {
  std::size_t first;   // earlier in traversal
  std::size_t second;
};

struct TriangleMatch {
  std::vector<PassPair> pairs;
};

// Tries every perfect matching of the six passes into cyclically adjacent
// pairs and returns the first that forms a valid triangle.
std::variant<TriangleMatch, std::string> lr3_match(const FrontCode& code, const std::array<int, 3>& ids) {
  const std::size_t n = code.events.size();
  std::set<int> distinct(ids.begin(), ids.end());
  if (distinct.size() != 3)
    return std::string("the three crossing ids must be distinct");

  std::vector<std::size_t> passes;
  for (std::size_t i = 0; i < n; ++i) {
    const Event& e = code.events[i];
    if (e.is_pass() && distinct.count(e.crossing))
      passes.push_back(i);
  }
  if (passes.size() != 6)
    return std::string("the named crossings do not all occur in the code");

  std::string last_reason = "no strand passes two of the named crossings consecutively";
  std::vector<PassPair> chosen;
  std::vector<bool> used(6, false);
  std::optional<TriangleMatch> found;

  auto check = [&](const std::vector<PassPair>& pairs) -> std::optional<std::string> {
    const PassPair* top = nullptr;
    const PassPair* mid = nullptr;
    const PassPair* bot = nullptr;
    for (const auto& p : pairs) {
      const Event& a = code.events[p.first];
      const Event& b = code.events[p.second];
      if (a.is_over() && b.is_over())
        top = &p;
      else if (a.is_under() && b.is_under())
        bot = &p;
      else
        mid = &p;
    }
    if (!top || !mid || !bot)
      return std::string("need one over-over, one over-under and one under-under strand");

    auto cr = [&](std::size_t i) { return code.events[i].crossing; };
    const int t1 = cr(top->first), t2 = cr(top->second);
    const int b1 = cr(bot->first), b2 = cr(bot->second);
    int tb = 0;
    if (t1 == b1 || t1 == b2)
      tb = t1;
    else if (t2 == b1 || t2 == b2)
      tb = t2;
    else
      return std::string("top and bottom strands share no crossing");
    const int tm = tb == t1 ? t2 : t1;
    const int mb = tb == b1 ? b2 : b1;
    const std::set<int> mid_ids{cr(mid->first), cr(mid->second)};
    if (mid_ids != std::set<int>{tm, mb})
      return std::string("middle strand does not meet both other strands");

    const std::size_t mid_tm = cr(mid->first) == tm ? mid->first : mid->second;

    const int e1 = code.events[mid_tm].sign;
    const int e2 = code.events[cr(bot->first) == tb ? bot->first : bot->second].sign;
    const int dir_mid = cr(mid->first) == tm ? 1 : -1;
    const int dir_bot = cr(bot->first) == tb ? 1 : -1;
    if (e1 * e2 != dir_mid * dir_bot)
      return std::string("crossing signs are inconsistent with the strands' traversal order");
    return std::nullopt;
  };

  auto recurse = [&](auto&& self) -> void {
    if (found)
      return;
    std::size_t i = 0;
    while (i < 6 && used[i])
      ++i;
    if (i == 6) {
      if (auto why = check(chosen))
        last_reason = *why;
      else
        found = TriangleMatch{chosen};
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (used[j])
        continue;
      std::size_t a = passes[i], b = passes[j];
      if (code.events[a].crossing == code.events[b].crossing || !adjacent(a, b, n))
        continue;
      if (wrap(b + 1, n) == a)
        std::swap(a, b);
      used[j] = true;
      chosen.push_back({a, b});
      self(self);
      chosen.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  recurse(recurse);

  if (found)
    return *found;
  return last_reason;
}

FrontCode lr3_swap(const FrontCode& code, const Lr3Swap& s) {
  auto m = lr3_match(code, s.crossings);
  if (auto* why = std::get_if<std::string>(&m))
    throw MoveMismatch(std::string(kLr3Pattern), *why);
  FrontCode out = code;
  for (const auto& p : std::get<TriangleMatch>(m).pairs)
    std::swap(out.events[p.first], out.events[p.second]);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(sep, pos);
    parts.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos)
      break;
    pos = end + 1;
  }
  return parts;
}

long to_number(std::string_view s, std::string_view spec) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    throw std::invalid_argument("bad move site '" + std::string(spec) + "'");
  return v;
}

Role to_role(std::string_view s, std::string_view spec) {
  if (s == "o")
    return Role::Over;
  if (s == "u")
    return Role::Under;
  throw std::invalid_argument("bad role in move site '" + std::string(spec) + "'");
}

} // namespace

MoveMismatch::MoveMismatch(std::string expected, const std::string& detail)
    : std::runtime_error("move pattern mismatch: " + detail + "; expected " + expected),
      expected_(std::move(expected)) {}

FrontCode apply_move(const FrontCode& code, const MoveSite& site) {
  require_valid(code);
  return std::visit(
      [&](const auto& s) -> FrontCode {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Lr1Insert>)
          return lr1_insert(code, s);
        else if constexpr (std::is_same_v<T, Lr1Remove>)
          return lr1_remove(code, s);
        else if constexpr (std::is_same_v<T, Lr2Insert>)
          return lr2_insert(code, s);
        else if constexpr (std::is_same_v<T, Lr2Remove>)
          return lr2_remove(code, s);
        else
          return lr3_swap(code, s);
      },
      site);
}

MoveSite parse_move_site(Move move, Direction dir, std::string_view spec) {
  switch (move) {
  case Move::LR1:
    if (dir == Direction::Forward) {
      auto parts = split(spec, ':');
      if (parts.size() > 2)
        throw std::invalid_argument("bad LR1 site '" + std::string(spec) + "'");
      Lr1Insert s{static_cast<std::size_t>(to_number(parts[0], spec)), Role::Over};
      if (parts.size() == 2)
        s.first = to_role(parts[1], spec);
      return s;
    }
    return Lr1Remove{static_cast<std::size_t>(to_number(spec, spec))};
  case Move::LR2:
    if (dir == Direction::Forward) {
      auto parts = split(spec, ',');
      if (parts.size() != 2 && parts.size() != 4)
        throw std::invalid_argument("LR2 forward site is <cusp>,<gap>[,<o|u>,<+|->]");
      Lr2Insert s{static_cast<std::size_t>(to_number(parts[0], spec)),
                  static_cast<std::size_t>(to_number(parts[1], spec)), Role::Under, 1};
      if (parts.size() == 4) {
        s.cusp_role = to_role(parts[2], spec);
        if (parts[3] != "+" && parts[3] != "-")
          throw std::invalid_argument("bad sign in move site '" + std::string(spec) + "'");
        s.sign = parts[3] == "+" ? 1 : -1;
      }
      return s;
    }
    return Lr2Remove{static_cast<std::size_t>(to_number(spec, spec))};
  case Move::LR3: {
    auto parts = split(spec, ',');
    if (parts.size() != 3)
      throw std::invalid_argument("LR3 site is <c1>,<c2>,<c3>");
    Lr3Swap s;
    for (std::size_t i = 0; i < 3; ++i)
      s.crossings[i] = static_cast<int>(to_number(parts[i], spec));
    return s;
  }
  }
  throw std::invalid_argument("unknown move");
}

FrontCode apply_move(const FrontCode& code, Move move, Direction dir, std::string_view spec) {
  return apply_move(code, parse_move_site(move, dir, spec));
}

Move move_of(const MoveSite& site) {
  if (std::holds_alternative<Lr1Insert>(site) || std::holds_alternative<Lr1Remove>(site))
    return Move::LR1;
  if (std::holds_alternative<Lr2Insert>(site) || std::holds_alternative<Lr2Remove>(site))
    return Move::LR2;
  return Move::LR3;
}

std::string describe(const MoveSite& site) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        auto role = [](Role r) { return r == Role::Over ? "o" : "u"; };
        if constexpr (std::is_same_v<T, Lr1Insert>)
          return "LR1 fwd " + std::to_string(s.gap) + ":" + role(s.first);
        else if constexpr (std::is_same_v<T, Lr1Remove>)
          return "LR1 bwd " + std::to_string(s.index);
        else if constexpr (std::is_same_v<T, Lr2Insert>)
          return "LR2 fwd " + std::to_string(s.cusp) + "," + std::to_string(s.gap) + "," + role(s.cusp_role) +
                 "," + (s.sign > 0 ? "+" : "-");
        else if constexpr (std::is_same_v<T, Lr2Remove>)
          return "LR2 bwd " + std::to_string(s.cusp);
        else
          return "LR3 " + std::to_string(s.crossings[0]) + "," + std::to_string(s.crossings[1]) + "," +
                 std::to_string(s.crossings[2]);
      },
      site);
}

std::vector<MoveSite> applicable_moves(const FrontCode& code, bool with_inserts) {
  require_valid(code);
  const std::size_t n = code.events.size();
  std::vector<MoveSite> out;

  for (std::size_t i = 0; i < n; ++i) {
    if (lr1_match(code, i))
      continue;
    std::set<std::size_t> drop;
    for (std::size_t k = 0; k < 4; ++k)
      drop.insert(wrap(i + k, n));
    if (validate(erase_indices(code, drop)).empty())
      out.push_back(Lr1Remove{i});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!code.events[i].is_cusp())
      continue;
    auto m = lr2_match(code, i);
    if (std::holds_alternative<Lr2Match>(m) && validate(erase_indices(code, std::get<Lr2Match>(m).drop)).empty())
      out.push_back(Lr2Remove{i});
  }

  std::vector<int> ids;
  for (const Event& e : code.events)
    if (e.is_under())
      ids.push_back(e.crossing);
  std::sort(ids.begin(), ids.end());
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      for (std::size_t c = b + 1; c < ids.size(); ++c) {
        std::array<int, 3> t{ids[a], ids[b], ids[c]};
        if (std::holds_alternative<TriangleMatch>(lr3_match(code, t)))
          out.push_back(Lr3Swap{t});
      }

  if (with_inserts) {
    for (std::size_t g = 0; g < n; ++g)
      for (Role r : {Role::Over, Role::Under})
        out.push_back(Lr1Insert{g, r});
    for (std::size_t i = 0; i < n; ++i) {
      if (!code.events[i].is_cusp())
        continue;
      for (std::size_t g = 0; g < n; ++g)
        for (Role r : {Role::Over, Role::Under})
          for (int s : {1, -1})
            out.push_back(Lr2Insert{i, g, r, s});
    }
  }
  return out;
}

} // namespace glr
