#include "glr/front_code.hpp"

#include "glr/text_io.hpp"

#include <algorithm>
#include <map>

namespace glr {

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
  case Violation::Kind::Empty: return "empty";
  case Violation::Kind::BadCrossingId: return "bad-crossing-id";
  case Violation::Kind::BadSign: return "bad-sign";
  case Violation::Kind::MissingPass: return "missing-pass";
  case Violation::Kind::ExtraPass: return "extra-pass";
  case Violation::Kind::RoleMismatch: return "role-mismatch";
  case Violation::Kind::SignMismatch: return "sign-mismatch";
  case Violation::Kind::OddCusps: return "odd-cusps";
  case Violation::Kind::TooFewCusps: return "too-few-cusps";
  }
  return "unknown";
}

std::vector<Violation> validate(const FrontCode& code) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  if (code.events.empty()) {
    out.push_back({K::Empty, 0, "code has no events"});
    return out;
  }

  std::map<int, std::vector<std::size_t>> passes;
  int cusps = 0;
  for (std::size_t i = 0; i < code.events.size(); ++i) {
    const Event& e = code.events[i];
    if (e.is_cusp()) {
      ++cusps;
      continue;
    }
    if (e.crossing <= 0) {
      out.push_back({K::BadCrossingId, i, "crossing id must be positive"});
      continue;
    }
    if (e.sign != 1 && e.sign != -1)
      out.push_back({K::BadSign, i, "crossing sign must be +1 or -1"});
    passes[e.crossing].push_back(i);
  }

  for (const auto& [id, where] : passes) {
    const std::string tag = "crossing " + std::to_string(id);
    if (where.size() == 1) {
      out.push_back({K::MissingPass, where[0], tag + " is passed only once"});
      continue;
    }
    for (std::size_t j = 2; j < where.size(); ++j)
      out.push_back({K::ExtraPass, where[j], tag + " is passed more than twice"});
    const Event& a = code.events[where[0]];
    const Event& b = code.events[where[1]];
    if (a.role == b.role)
      out.push_back({K::RoleMismatch, where[1], tag + " needs one over and one under pass"});
    if (a.sign != b.sign)
      out.push_back({K::SignMismatch, where[1], tag + " has disagreeing signs"});
  }

  if (cusps % 2 != 0)
    out.push_back({K::OddCusps, 0, "cusp count " + std::to_string(cusps) + " is odd"});
  if (cusps < 2)
    out.push_back({K::TooFewCusps, 0, "a closed front needs at least two cusps"});

  std::stable_sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
    return x.index < y.index;
  });
  return out;
}

namespace {

std::string describe(const std::vector<Violation>& vs) {
  std::string msg = "invalid front code:";
  for (const auto& v : vs)
    msg += " [" + std::string(to_string(v.kind)) + " @" + std::to_string(v.index) + ": " + v.message + "]";
  return msg;
}

} // namespace

InvalidCode::InvalidCode(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

void require_valid(const FrontCode& code) {
  auto vs = validate(code);
  if (!vs.empty())
    throw InvalidCode(std::move(vs));
}

ClassicalInvariants classical_invariants(const FrontCode& code) {
  require_valid(code);
  ClassicalInvariants ci;
  for (const Event& e : code.events) {
    if (e.is_cusp()) {
      (e.dir == CuspDir::Up ? ci.up_cusps : ci.down_cusps) += 1;
    } else if (e.is_under()) {
      ci.writhe += e.sign;  // count each crossing once
    }
  }
  ci.tb = ci.writhe - (ci.up_cusps + ci.down_cusps) / 2;
  ci.rot = (ci.down_cusps - ci.up_cusps) / 2;
  return ci;
}

FrontCode stabilize(const FrontCode& code, Stabilization kind, std::size_t site) {
  require_valid(code);
  if (site > code.events.size())
    throw std::out_of_range("stabilization site " + std::to_string(site) + " out of range [0, " +
                            std::to_string(code.events.size()) + "]");
  const Event cusp = kind == Stabilization::Plus ? Event::down() : Event::up();
  FrontCode out = code;
  out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(site), 2, cusp);
  return out;
}

FrontCode rotate(const FrontCode& code, std::size_t shift) {
  FrontCode out = code;
  if (!out.events.empty())
    std::rotate(out.events.begin(),
                out.events.begin() + static_cast<std::ptrdiff_t>(shift % out.events.size()),
                out.events.end());
  return out;
}

int max_crossing_id(const FrontCode& code) {
  int m = 0;
  for (const Event& e : code.events)
    if (e.is_pass())
      m = std::max(m, e.crossing);
  return m;
}

int crossing_count(const FrontCode& code) {
  return static_cast<int>(std::count_if(code.events.begin(), code.events.end(),
                                        [](const Event& e) { return e.is_under(); }));
}

int cusp_count(const FrontCode& code) {
  return static_cast<int>(std::count_if(code.events.begin(), code.events.end(),
                                        [](const Event& e) { return e.is_cusp(); }));
}

std::size_t find_pass(const FrontCode& code, int crossing, Role role) {
  for (std::size_t i = 0; i < code.events.size(); ++i) {
    const Event& e = code.events[i];
    if (e.is_pass() && e.crossing == crossing && e.role == role)
      return i;
  }
  return std::string::npos;
}

namespace {

Event parse_event(const Token& tok) {
  std::string_view t = tok.text;
  if (t == "cu")
    return Event::up();
  if (t == "cd")
    return Event::down();
  if (t.size() < 4 || t.front() != 'x')
    fail_at(tok, "expected cu, cd or x<id><o|u><+|->, got '" + std::string(t) + "'");

  std::string_view digits = t.substr(1, t.size() - 3);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail_at(tok, "bad crossing id in '" + std::string(t) + "'");
  Token id_tok{digits, tok.line, tok.column + 1};
  int id = parse_int(id_tok);
  if (id <= 0)
    fail_at(id_tok, "crossing id must be positive");

  char role = t[t.size() - 2];
  char sign = t.back();
  if (role != 'o' && role != 'u')
    throw ParseError(tok.line, tok.column + t.size() - 2, "pass role must be 'o' or 'u'");
  if (sign != '+' && sign != '-')
    throw ParseError(tok.line, tok.column + t.size() - 1, "crossing sign must be '+' or '-'");
  return Event::pass(id, role == 'o' ? Role::Over : Role::Under, sign == '+' ? 1 : -1);
}

} // namespace

FrontCode parse_front_code(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty())
    throw ParseError(1, 1, "empty front code");

  FrontCode code;
  const TokenLine& head = lines[0];
  if (head.tokens[0].text != "knot")
    fail_at(head.tokens[0], "expected 'knot <name>'");
  if (head.tokens.size() != 2)
    throw ParseError(head.line, head.tokens.size() > 2 ? head.tokens[2].column : head.tokens[0].column,
                     "expected exactly one name after 'knot'");
  code.name = std::string(head.tokens[1].text);

  if (lines.size() < 2)
    throw ParseError(head.line + 1, 1, "missing 'code' line");
  const TokenLine& body = lines[1];
  if (body.tokens[0].text != "code")
    fail_at(body.tokens[0], "expected 'code <events>'");
  for (std::size_t i = 1; i < body.tokens.size(); ++i)
    code.events.push_back(parse_event(body.tokens[i]));

  if (lines.size() > 2)
    fail_at(lines[2].tokens[0], "unexpected content after 'code' line");
  return code;
}

std::string to_token(const Event& e) {
  if (e.is_cusp())
    return e.dir == CuspDir::Up ? "cu" : "cd";
  std::string s = "x" + std::to_string(e.crossing);
  s += e.role == Role::Over ? 'o' : 'u';
  s += e.sign > 0 ? '+' : '-';
  return s;
}

std::string to_text(const FrontCode& code) {
  std::string out = "knot " + code.name + "\ncode";
  for (const Event& e : code.events) {
    out += ' ';
    out += to_token(e);
  }
  out += '\n';
  return out;
}

} // namespace glr
