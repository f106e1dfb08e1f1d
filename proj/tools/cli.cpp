#include "cli.hpp"

#include "glr/audit.hpp"
#include "glr/coloring.hpp"
#include "glr/corpus.hpp"
#include "glr/enumerate.hpp"
#include "glr/isomorphism.hpp"
#include "glr/moves.hpp"
#include "glr/text_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace glr::cli {

namespace {

class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Kind { Code, Presentation, Rack, Summary };

struct Resource {
  std::string ref;
  std::string text;
  Kind kind;
};

std::string read_text(const std::string& ref, std::istream& in) {
  if (ref.starts_with("corpus:")) {
    auto t = corpus_text(std::string_view(ref).substr(7));
    if (!t)
      throw DomainError("unknown corpus entry '" + ref.substr(7) + "'");
    return std::string(*t);
  }
  if (ref == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(ref);
  if (!f)
    throw DomainError("cannot read '" + ref + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Resource load(const std::string& ref, std::istream& in) {
  Resource r{ref, read_text(ref, in), Kind::Code};
  const auto lines = tokenize_lines(r.text);
  if (lines.empty())
    throw DomainError(ref + ": empty input");
  const std::string head(lines.front().tokens.front().text);
  if (head == "knot")
    r.kind = Kind::Code;
  else if (head == "gens")
    r.kind = Kind::Presentation;
  else if (head == "size")
    r.kind = Kind::Rack;
  else if (head == "omega")
    r.kind = Kind::Summary;
  else
    throw DomainError(ref + ": unrecognized input starting with '" + head + "'");
  return r;
}

FrontCode as_code(const Resource& r) {
  if (r.kind != Kind::Code)
    throw DomainError(r.ref + ": expected a front code");
  return parse_front_code(r.text);
}

// Codes are converted to their reduced presentation, or the full one when
// they have no crossings.
Presentation as_presentation(const Resource& r) {
  if (r.kind == Kind::Presentation)
    return parse_presentation(r.text);
  if (r.kind == Kind::Code) {
    auto code = parse_front_code(r.text);
    require_valid(code);
    if (crossing_count(code) == 0)
      return extract_full(code);
    return extract_reduced(code);
  }
  throw DomainError(r.ref + ": expected a presentation or front code");
}

PresentationSummary as_summary(const Resource& r) {
  switch (r.kind) {
  case Kind::Summary:
    return parse_summary(r.text);
  case Kind::Presentation: {
    auto p = parse_presentation(r.text);
    if (auto* fp = std::get_if<FullPresentation>(&p)) {
      validate_presentation(*fp);
      return summarize(*fp);
    }
    return summarize(std::get<ReducedPresentation>(p));
  }
  case Kind::Code: {
    auto code = parse_front_code(r.text);
    require_valid(code);
    if (crossing_count(code) == 0)
      return summarize(extract_full(code));
    return summarize(extract_reduced(code), code);
  }
  case Kind::Rack:
    break;
  }
  throw DomainError(r.ref + ": expected a summary, presentation or front code");
}

long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos == s.size())
      return v;
  } catch (const std::exception&) {
  }
  throw DomainError("bad " + what + " '" + s + "'");
}

FiniteGLRack as_rack(const std::string& spec, std::istream& in) {
  if (spec.starts_with("perm:")) {
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(5));
    for (std::string part; std::getline(ss, part, ':');)
      parts.push_back(part);
    if (parts.size() != 3)
      throw DomainError("rack shorthand is perm:<k>:<a>:<b>");
    long k = to_long(parts[0], "k");
    if (k < 1 || k > 100000)
      throw DomainError("perm rack order must be in 1..100000");
    return mk_permutation_family(static_cast<int>(k), to_long(parts[1], "a"), to_long(parts[2], "b"));
  }
  if (spec.starts_with("trivial:")) {
    long n = to_long(spec.substr(8), "n");
    if (n < 1 || n > 100000)
      throw DomainError("trivial rack order must be in 1..100000");
    return mk_trivial(static_cast<int>(n));
  }
  auto r = load(spec, in);
  if (r.kind != Kind::Rack)
    throw DomainError(spec + ": expected a GL-rack");
  return parse_glrack(r.text);
}

std::string join(const std::vector<int>& v) { return join_ints(v); }

// Single-line diagnostics.
std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
  return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Legendrian front codes, GL-rack presentations and colorings"};
  app.name("glr");
  app.require_subcommand(1);

  std::string code_ref, pres_ref, rack_ref, rack_ref2, pres_ref2, sign;
  bool full = false, reduced = false, pretty = false, emit = false;
  std::size_t cap = kDefaultColoringCap, site = 0;
  int order = 0, max_order = 0, move_no = 0;
  long slice_genus = -1, k = 0, a = 0, b = 0;
  std::string dir, move_site;

  auto* validate_cmd = app.add_subcommand("validate", "Check a front code and list violations");
  validate_cmd->add_option("code", code_ref, "front code (file, corpus:<name> or -)")->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "Print tb and rot of a front code");
  invariants_cmd->add_option("code", code_ref)->required();

  auto* present_cmd = app.add_subcommand("present", "Extract the fundamental GL-rack presentation");
  present_cmd->add_option("code", code_ref)->required();
  auto* full_flag = present_cmd->add_flag("--full", full, "one generator per arc");
  present_cmd->add_flag("--reduced", reduced, "one generator per under-pass (default)")->excludes(full_flag);
  present_cmd->add_flag("--pretty", pretty, "also print relations as formulas");

  auto* summary_cmd = app.add_subcommand("summary", "Print omega, p, q, gens and cusps");
  summary_cmd->add_option("pres", pres_ref, "presentation or front code")->required();

  auto* color_cmd = app.add_subcommand("color", "Count colorings by a finite GL-rack");
  color_cmd->add_option("pres", pres_ref, "presentation or front code")->required();
  color_cmd->add_option("--rack", rack_ref, "GL-rack file, perm:<k>:<a>:<b> or trivial:<n>")->required();
  color_cmd->add_flag("--emit-colorings", emit, "print colorings, one per line");
  color_cmd->add_option("--cap", cap, "maximum number of colorings printed");

  auto* profile_cmd = app.add_subcommand("profile", "Count colorings by every GL-rack up to an order");
  profile_cmd->add_option("pres", pres_ref)->required();
  profile_cmd->add_option("--max-order", max_order)->required()->check(CLI::Range(1, kDefaultEnumerationBound));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List GL-racks of an order up to isomorphism");
  enumerate_cmd->add_option("--order", order)->required()->check(CLI::Range(1, kDefaultEnumerationBound));

  auto* iso_cmd = app.add_subcommand("iso", "Test two GL-racks for isomorphism");
  iso_cmd->add_option("rack1", rack_ref)->required();
  iso_cmd->add_option("rack2", rack_ref2)->required();

  auto* gate_cmd = app.add_subcommand("gate", "Compare two knots by the tb/rot necessary condition");
  gate_cmd->add_option("pres1", pres_ref, "summary, presentation or front code")->required();
  gate_cmd->add_option("pres2", pres_ref2)->required();
  gate_cmd->add_option("--slice-genus", slice_genus, "slice genus of the knot type")->check(CLI::NonNegativeNumber);

  auto* stabilize_cmd = app.add_subcommand("stabilize", "Insert a stabilization");
  stabilize_cmd->add_option("code", code_ref)->required();
  stabilize_cmd->add_option("kind", sign, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));
  stabilize_cmd->add_option("--site", site, "event index, 0..length")->required();

  auto* move_cmd = app.add_subcommand("move", "Apply a Legendrian Reidemeister move");
  move_cmd->add_option("code", code_ref)->required();
  move_cmd->add_option("--move", move_no)->required()->check(CLI::Range(1, 3));
  move_cmd->add_option("--dir", dir)->required()->check(CLI::IsMember({"fwd", "bwd"}));
  move_cmd->add_option("--site", move_site, "site spec, see docs/conventions.md")->required();

  auto* oracle_cmd = app.add_subcommand("oracle-color", "Closed-form count for a permutation GL-rack");
  oracle_cmd->add_option("input", pres_ref, "summary, presentation or front code")->required();
  oracle_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--a", a)->required();
  oracle_cmd->add_option("--b", b)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "glr: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      auto code = as_code(load(code_ref, in));
      auto violations = validate(code);
      if (violations.empty()) {
        out << "valid\n";
        return 0;
      }
      for (const auto& v : violations)
        out << "violation " << to_string(v.kind) << " " << v.index << " " << v.message << "\n";
      err << "glr: " << violations.size() << " violation(s)\n";
      return 1;
    }
    if (invariants_cmd->parsed()) {
      auto ci = classical_invariants(as_code(load(code_ref, in)));
      out << "tb " << ci.tb << "\nrot " << ci.rot << "\n";
      return 0;
    }
    if (present_cmd->parsed()) {
      auto code = as_code(load(code_ref, in));
      require_valid(code);
      if (full) {
        auto fp = extract_full(code);
        out << to_text(fp);
        if (pretty)
          for (const auto& [lhs, rhs] : relation_words(fp))
            out << "# " << to_string(lhs) << " = " << to_string(rhs) << "\n";
      } else {
        if (crossing_count(code) == 0)
          throw DomainError("code has no crossings; use --full");
        auto rp = extract_reduced(code);
        out << to_text(rp);
        if (pretty)
          for (std::size_t i = 0; i < rp.relations.size(); ++i)
            out << "# " << format_relation(rp, i) << "\n";
      }
      return 0;
    }
    if (summary_cmd->parsed()) {
      out << to_text(as_summary(load(pres_ref, in)));
      return 0;
    }
    if (color_cmd->parsed()) {
      auto pres = as_presentation(load(pres_ref, in));
      auto rack = as_rack(rack_ref, in);
      auto res = count_colorings(pres, rack, ColoringOptions{emit, cap});
      out << res.count << "\n";
      for (const auto& c : res.colorings)
        out << join(c) << "\n";
      return 0;
    }
    if (profile_cmd->parsed()) {
      auto pres = as_presentation(load(pres_ref, in));
      auto racks = enumerate_glracks_upto(max_order);
      auto counts = coloring_profile(pres, racks);
      // One line per rack: order, index within that order, count.
      int prev = 0, idx = 0;
      for (std::size_t i = 0; i < racks.size(); ++i) {
        idx = racks[i].size() == prev ? idx + 1 : 0;
        prev = racks[i].size();
        out << prev << " " << idx << " " << counts[i] << "\n";
      }
      return 0;
    }
    if (enumerate_cmd->parsed()) {
      auto racks = enumerate_glracks(order);
      out << "classes " << racks.size() << "\n";
      for (const auto& x : racks)
        out << "\n" << to_text(x);
      return 0;
    }
    if (iso_cmd->parsed()) {
      auto x = as_rack(rack_ref, in);
      auto y = as_rack(rack_ref2, in);
      if (auto f = is_isomorphic(x, y))
        out << "isomorphic\nmap " << join(*f) << "\n";
      else
        out << "not-isomorphic\n";
      return 0;
    }
    if (gate_cmd->parsed()) {
      auto s1 = as_summary(load(pres_ref, in));
      auto s2 = as_summary(load(pres_ref2, in));
      auto report = slice_genus >= 0 ? corollary_gate(s1, s2, slice_genus) : theorem1_gate(s1, s2);
      out << to_text(report);
      return 0;
    }
    if (stabilize_cmd->parsed()) {
      auto code = as_code(load(code_ref, in));
      require_valid(code);
      if (site > code.events.size())
        throw DomainError("site " + std::to_string(site) + " out of range 0.." + std::to_string(code.events.size()));
      out << to_text(stabilize(code, sign == "+" ? Stabilization::Plus : Stabilization::Minus, site));
      return 0;
    }
    if (move_cmd->parsed()) {
      auto code = as_code(load(code_ref, in));
      require_valid(code);
      const Move m = move_no == 1 ? Move::LR1 : move_no == 2 ? Move::LR2 : Move::LR3;
      out << to_text(apply_move(code, m, dir == "fwd" ? Direction::Forward : Direction::Backward, move_site));
      return 0;
    }
    if (oracle_cmd->parsed()) {
      auto s = as_summary(load(pres_ref, in));
      out << closed_form_permutation(s, k, a, b) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "glr: " << one_line(e.what()) << "\n";
    return 1;
  }
  return 2;
}

} // namespace glr::cli
