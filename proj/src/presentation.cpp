#include "glr/presentation.hpp"

#include "glr/text_io.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace glr {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

int input_of(const FullRelation& r) {
  return std::visit([](const auto& v) {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, CuspRel>)
      return v.from;
    else
      return v.under_in;
  }, r);
}

int output_of(const FullRelation& r) {
  return std::visit([](const auto& v) {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, CuspRel>)
      return v.to;
    else
      return v.under_out;
  }, r);
}

} // namespace

FullPresentation extract_full(const FrontCode& code) {
  require_valid(code);
  const auto& ev = code.events;
  std::vector<std::size_t> seps;
  for (std::size_t i = 0; i < ev.size(); ++i)
    if (ev[i].is_cusp() || ev[i].is_under())
      seps.push_back(i);
  const long s = static_cast<long>(seps.size());

  // Arc containing event e: the number of separators strictly before it.
  auto arc_at = [&](std::size_t e) {
    long before = 0;
    for (std::size_t idx : seps)
      before += idx < e;
    return mod(before, s);
  };

  FullPresentation fp;
  fp.gens = static_cast<int>(s);
  for (long t = 0; t < s; ++t) {
    const Event& e = ev[seps[static_cast<std::size_t>(t)]];
    const int from = static_cast<int>(t);
    const int to = mod(t + 1, s);
    if (e.is_cusp()) {
      fp.relations.push_back(CuspRel{e.dir == CuspDir::Up ? Shift::U : Shift::D, from, to});
    } else {
      const std::size_t over = find_pass(code, e.crossing, Role::Over);
      fp.relations.push_back(CrossRel{e.sign, from, arc_at(over), to});
    }
  }
  return fp;
}

ReducedPresentation extract_reduced(const FrontCode& code) {
  require_valid(code);
  const auto& ev = code.events;
  std::vector<std::size_t> unders;
  for (std::size_t i = 0; i < ev.size(); ++i)
    if (ev[i].is_under())
      unders.push_back(i);
  if (unders.empty())
    throw NoCrossings("front code '" + code.name + "' has no crossings; use the full presentation");
  const long m = static_cast<long>(unders.size());
  const std::size_t n = ev.size();

  // Reduced generator of the arc containing event e.
  auto arc_at = [&](std::size_t e) {
    long before = 0;
    for (std::size_t idx : unders)
      before += idx < e;
    return mod(before - 1, m);
  };

  ReducedPresentation rp;
  for (long i = 0; i < m; ++i) {
    const std::size_t start = unders[static_cast<std::size_t>(i)];
    const std::size_t stop = unders[static_cast<std::size_t>(mod(i + 1, m))];
    ReducedRelation rel;
    for (std::size_t k = (start + 1) % n; k != stop; k = (k + 1) % n) {
      if (ev[k].is_cusp())
        (ev[k].dir == CuspDir::Up ? rel.p : rel.q) += 1;
    }
    const Event& cross = ev[stop];
    rel.eps = cross.sign;
    rel.over = arc_at(find_pass(code, cross.crossing, Role::Over));
    rp.relations.push_back(rel);
  }
  return rp;
}

void validate_presentation(const FullPresentation& fp) {
  if (fp.gens < 0)
    throw MalformedPresentation("negative generator count");
  if (fp.relations.size() != static_cast<std::size_t>(fp.gens))
    throw MalformedPresentation("a knot presentation needs one relation per generator (got " +
                                std::to_string(fp.relations.size()) + " relations for " +
                                std::to_string(fp.gens) + " generators)");
  auto in_range = [&](int g) { return g >= 0 && g < fp.gens; };
  std::vector<int> consumer(static_cast<std::size_t>(fp.gens), -1);
  std::vector<int> produced(static_cast<std::size_t>(fp.gens), 0);
  for (std::size_t r = 0; r < fp.relations.size(); ++r) {
    const auto& rel = fp.relations[r];
    int in = input_of(rel), out = output_of(rel);
    if (!in_range(in) || !in_range(out))
      throw MalformedPresentation("relation " + std::to_string(r) + " has a dangling generator index");
    if (const auto* c = std::get_if<CrossRel>(&rel)) {
      if (!in_range(c->over))
        throw MalformedPresentation("relation " + std::to_string(r) + " has a dangling over index");
      if (c->eps != 1 && c->eps != -1)
        throw MalformedPresentation("relation " + std::to_string(r) + " has a bad sign");
    }
    if (consumer[static_cast<std::size_t>(in)] >= 0)
      throw MalformedPresentation("generator " + std::to_string(in) + " enters two relations");
    consumer[static_cast<std::size_t>(in)] = static_cast<int>(r);
    produced[static_cast<std::size_t>(out)] += 1;
  }
  for (int g = 0; g < fp.gens; ++g)
    if (produced[static_cast<std::size_t>(g)] != 1)
      throw MalformedPresentation("generator " + std::to_string(g) + " is not produced exactly once");
  if (fp.gens > 0) {
    int g = 0, steps = 0;
    do {
      g = output_of(fp.relations[static_cast<std::size_t>(consumer[static_cast<std::size_t>(g)])]);
      ++steps;
    } while (g != 0);
    if (steps != fp.gens)
      throw MalformedPresentation("presentation has more than one component");
  }
}

void validate_presentation(const ReducedPresentation& rp) {
  const int m = rp.gens();
  for (std::size_t i = 0; i < rp.relations.size(); ++i) {
    const auto& r = rp.relations[i];
    if (r.over < 0 || r.over >= m)
      throw MalformedPresentation("relation " + std::to_string(i) + " has a dangling over index");
    if (r.p < 0 || r.q < 0)
      throw MalformedPresentation("relation " + std::to_string(i) + " has a negative exponent");
    if (r.eps != 1 && r.eps != -1)
      throw MalformedPresentation("relation " + std::to_string(i) + " has a bad sign");
  }
}

ReducedPresentation reduce(const FullPresentation& fp) {
  validate_presentation(fp);
  std::size_t first = fp.relations.size();
  for (std::size_t r = 0; r < fp.relations.size(); ++r)
    if (std::holds_alternative<CrossRel>(fp.relations[r])) {
      first = r;
      break;
    }
  if (first == fp.relations.size())
    throw NoCrossings("presentation has no crossing relations");

  std::vector<int> consumer(static_cast<std::size_t>(fp.gens), -1);
  for (std::size_t r = 0; r < fp.relations.size(); ++r)
    consumer[static_cast<std::size_t>(input_of(fp.relations[r]))] = static_cast<int>(r);

  std::vector<int> segment(static_cast<std::size_t>(fp.gens), -1);
  std::vector<ReducedRelation> rels;
  std::vector<int> full_over;
  int g = std::get<CrossRel>(fp.relations[first]).under_out;
  ReducedRelation cur;
  int seg = 0;
  while (true) {
    segment[static_cast<std::size_t>(g)] = seg;
    const auto r = static_cast<std::size_t>(consumer[static_cast<std::size_t>(g)]);
    if (const auto* c = std::get_if<CuspRel>(&fp.relations[r])) {
      (c->kind == Shift::U ? cur.p : cur.q) += 1;
      g = c->to;
      continue;
    }
    const auto& x = std::get<CrossRel>(fp.relations[r]);
    cur.eps = x.eps;
    rels.push_back(cur);
    full_over.push_back(x.over);
    cur = ReducedRelation{};
    ++seg;
    g = x.under_out;
    if (r == first)
      break;
  }
  for (std::size_t i = 0; i < rels.size(); ++i)
    rels[i].over = segment[static_cast<std::size_t>(full_over[i])];
  return ReducedPresentation{std::move(rels)};
}

PresentationSummary summarize(const ReducedPresentation& rp) {
  PresentationSummary s;
  for (const auto& r : rp.relations) {
    s.omega += r.eps;
    s.p += r.p;
    s.q += r.q;
  }
  s.gens = rp.gens();
  s.cusps = s.p + s.q;
  return s;
}

PresentationSummary summarize(const FullPresentation& fp) {
  PresentationSummary s;
  for (const auto& rel : fp.relations) {
    if (const auto* c = std::get_if<CuspRel>(&rel)) {
      (c->kind == Shift::U ? s.p : s.q) += 1;
    } else {
      s.omega += std::get<CrossRel>(rel).eps;
      ++s.gens;
    }
  }
  s.cusps = s.p + s.q;
  return s;
}

PresentationSummary summarize(const ReducedPresentation& rp, const FrontCode& source) {
  PresentationSummary s = summarize(rp);
  const auto ci = classical_invariants(source);
  if (s.cusps != ci.up_cusps + ci.down_cusps)
    throw std::logic_error("summary cusp count disagrees with the front code");
  if (s.omega != ci.writhe)
    throw std::logic_error("summary omega disagrees with the front code's writhe");
  return s;
}

std::vector<std::pair<Word, Word>> relation_words(const FullPresentation& fp) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& rel : fp.relations) {
    if (const auto* c = std::get_if<CuspRel>(&rel)) {
      Word a = Word::gen(c->from);
      out.emplace_back(c->kind == Shift::U ? Word::up(std::move(a)) : Word::down(std::move(a)), Word::gen(c->to));
    } else {
      const auto& x = std::get<CrossRel>(rel);
      out.emplace_back(Word::star(Word::gen(x.under_in), Word::gen(x.over), x.eps), Word::gen(x.under_out));
    }
  }
  return out;
}

std::vector<std::pair<Word, Word>> relation_words(const ReducedPresentation& rp) {
  std::vector<std::pair<Word, Word>> out;
  const int m = rp.gens();
  for (int i = 0; i < m; ++i) {
    const auto& r = rp.relations[static_cast<std::size_t>(i)];
    out.emplace_back(Word::star(Word::shifted(Word::gen(i), r.p, r.q), Word::gen(r.over), r.eps),
                     Word::gen((i + 1) % m));
  }
  return out;
}

ReducedPresentation rotate_generators(const ReducedPresentation& rp, int shift) {
  const int m = rp.gens();
  ReducedPresentation out;
  out.relations.resize(rp.relations.size());
  for (int i = 0; i < m; ++i) {
    ReducedRelation r = rp.relations[static_cast<std::size_t>(i)];
    r.over = mod(r.over + shift, m);
    out.relations[static_cast<std::size_t>(mod(i + shift, m))] = r;
  }
  return out;
}

std::string format_relation(const ReducedPresentation& rp, std::size_t i, std::string_view prefix) {
  const auto& r = rp.relations.at(i);
  const int m = rp.gens();
  auto pw = [](char c, int e) {
    if (e == 0)
      return std::string();
    return e == 1 ? std::string(1, c) : std::string(1, c) + "^" + std::to_string(e);
  };
  const std::string name = std::string(prefix) + std::to_string(i + 1);
  const std::string shift = pw('u', r.p) + pw('d', r.q);
  std::string out = shift.empty() ? name : shift + "(" + name + ")";
  out += r.eps > 0 ? " * " : " *^-1 ";
  out += std::string(prefix) + std::to_string(r.over + 1);
  out += " = " + std::string(prefix) + std::to_string(static_cast<int>((i + 1) % static_cast<std::size_t>(m)) + 1);
  return out;
}

namespace {

int parse_sign(const Token& t) {
  if (t.text == "+")
    return 1;
  if (t.text == "-")
    return -1;
  fail_at(t, "expected '+' or '-'");
}

void expect_arity(const TokenLine& l, std::size_t n, const char* shape) {
  if (l.tokens.size() != n)
    fail_at(l.tokens[0], std::string("expected '") + shape + "'");
}

int parse_index(const Token& t, int m) {
  int v = parse_int(t);
  if (v < 0 || v >= m)
    fail_at(t, "generator index out of range 0.." + std::to_string(m - 1));
  return v;
}

} // namespace

Presentation parse_presentation(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty())
    throw ParseError(1, 1, "empty presentation");
  const TokenLine& head = lines[0];
  if (head.tokens[0].text != "gens")
    fail_at(head.tokens[0], "expected 'gens <m>'");
  expect_arity(head, 2, "gens <m>");
  const int m = parse_int(head.tokens[1]);
  if (m < 0)
    fail_at(head.tokens[1], "generator count must be nonnegative");

  std::optional<bool> reduced;
  FullPresentation fp;
  fp.gens = m;
  std::vector<std::optional<ReducedRelation>> rr(static_cast<std::size_t>(m));

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const TokenLine& l = lines[li];
    const Token& kw = l.tokens[0];
    const bool is_reduced = kw.text == "xr";
    if (kw.text != "xr" && kw.text != "cusp" && kw.text != "cross")
      fail_at(kw, "expected 'cusp', 'cross' or 'xr'");
    if (reduced && *reduced != is_reduced)
      fail_at(kw, "cannot mix full and reduced relations");
    reduced = is_reduced;

    if (kw.text == "cusp") {
      expect_arity(l, 4, "cusp <u|d> <from> <to>");
      if (l.tokens[1].text != "u" && l.tokens[1].text != "d")
        fail_at(l.tokens[1], "cusp kind must be 'u' or 'd'");
      fp.relations.push_back(CuspRel{l.tokens[1].text == "u" ? Shift::U : Shift::D, parse_index(l.tokens[2], m),
                                     parse_index(l.tokens[3], m)});
    } else if (kw.text == "cross") {
      expect_arity(l, 5, "cross <+|-> <under_in> <over> <under_out>");
      fp.relations.push_back(CrossRel{parse_sign(l.tokens[1]), parse_index(l.tokens[2], m),
                                      parse_index(l.tokens[3], m), parse_index(l.tokens[4], m)});
    } else {
      expect_arity(l, 6, "xr <i> <p> <q> <+|-> <k>");
      const int i = parse_index(l.tokens[1], m);
      if (rr[static_cast<std::size_t>(i)])
        fail_at(l.tokens[1], "relation " + std::to_string(i) + " given twice");
      ReducedRelation r;
      r.p = parse_int(l.tokens[2]);
      r.q = parse_int(l.tokens[3]);
      if (r.p < 0)
        fail_at(l.tokens[2], "exponent must be nonnegative");
      if (r.q < 0)
        fail_at(l.tokens[3], "exponent must be nonnegative");
      r.eps = parse_sign(l.tokens[4]);
      r.over = parse_index(l.tokens[5], m);
      rr[static_cast<std::size_t>(i)] = r;
    }
  }

  if (!reduced.has_value()) {
    if (m != 0)
      throw ParseError(head.line + 1, 1, "presentation has generators but no relations");
    return ReducedPresentation{};
  }
  if (*reduced) {
    ReducedPresentation rp;
    for (int i = 0; i < m; ++i) {
      if (!rr[static_cast<std::size_t>(i)])
        throw ParseError(lines.back().line + 1, 1, "missing relation xr " + std::to_string(i));
      rp.relations.push_back(*rr[static_cast<std::size_t>(i)]);
    }
    return rp;
  }
  validate_presentation(fp);
  return fp;
}

std::string to_text(const FullPresentation& fp) {
  std::string out = "gens " + std::to_string(fp.gens) + "\n";
  for (const auto& rel : fp.relations) {
    if (const auto* c = std::get_if<CuspRel>(&rel)) {
      out += std::string("cusp ") + (c->kind == Shift::U ? "u " : "d ") + std::to_string(c->from) + " " +
             std::to_string(c->to) + "\n";
    } else {
      const auto& x = std::get<CrossRel>(rel);
      out += std::string("cross ") + (x.eps > 0 ? "+ " : "- ") + std::to_string(x.under_in) + " " +
             std::to_string(x.over) + " " + std::to_string(x.under_out) + "\n";
    }
  }
  return out;
}

std::string to_text(const ReducedPresentation& rp) {
  std::string out = "gens " + std::to_string(rp.gens()) + "\n";
  for (std::size_t i = 0; i < rp.relations.size(); ++i) {
    const auto& r = rp.relations[i];
    out += "xr " + std::to_string(i) + " " + std::to_string(r.p) + " " + std::to_string(r.q) + " " +
           (r.eps > 0 ? "+ " : "- ") + std::to_string(r.over) + "\n";
  }
  return out;
}

std::string to_text(const Presentation& p) {
  return std::visit([](const auto& v) { return to_text(v); }, p);
}

PresentationSummary parse_summary(std::string_view text) {
  auto lines = tokenize_lines(text);
  std::map<std::string, long> seen;
  const std::vector<std::string> keys{"omega", "p", "q", "gens", "cusps"};
  for (const auto& l : lines) {
    std::string key(l.tokens[0].text);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      fail_at(l.tokens[0], "expected one of omega, p, q, gens, cusps");
    if (l.tokens.size() != 2)
      fail_at(l.tokens[0], "expected '" + key + " <integer>'");
    if (seen.count(key))
      fail_at(l.tokens[0], "duplicate '" + key + "'");
    seen[key] = parse_long(l.tokens[1]);
    if (key != "omega" && seen[key] < 0)
      fail_at(l.tokens[1], key + " must be nonnegative");
  }
  for (const char* k : {"omega", "p", "q", "gens"})
    if (!seen.count(k))
      throw ParseError(lines.empty() ? 1 : lines.back().line + 1, 1, std::string("summary is missing '") + k + "'");
  PresentationSummary s{seen["omega"], seen["p"], seen["q"], seen["gens"], seen["p"] + seen["q"]};
  if (seen.count("cusps") && seen["cusps"] != s.cusps)
    throw ParseError(1, 1, "summary cusps must equal p + q");
  return s;
}

std::string to_text(const PresentationSummary& s) {
  return "omega " + std::to_string(s.omega) + "\np " + std::to_string(s.p) + "\nq " + std::to_string(s.q) +
         "\ngens " + std::to_string(s.gens) + "\ncusps " + std::to_string(s.cusps) + "\n";
}

} // namespace glr
