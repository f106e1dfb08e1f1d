#include "glr/corpus.hpp"
#include "glr/front_code.hpp"
#include "glr/text_io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glr;

namespace {

FrontCode code_of(std::string_view events) { return parse_front_code("knot t\ncode " + std::string(events) + "\n"); }

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

} // namespace

TEST_CASE("unknot is valid with tb -1 and rot 0") {
  auto c = code_of("cd cu");
  CHECK(validate(c).empty());
  auto ci = classical_invariants(c);
  CHECK(ci.writhe == 0);
  CHECK(ci.tb == -1);
  CHECK(ci.rot == 0);
}

TEST_CASE("violations are reported with indices") {
  auto missing = validate(code_of("x1o+ cd cu"));
  REQUIRE(!missing.empty());
  CHECK(has_kind(missing, Violation::Kind::MissingPass));

  auto odd = validate(code_of("cd cu cu"));
  CHECK(has_kind(odd, Violation::Kind::OddCusps));

  CHECK(has_kind(validate(FrontCode{"e", {}}), Violation::Kind::Empty));
  CHECK(has_kind(validate(code_of("x1o+ x1u+")), Violation::Kind::TooFewCusps));
  CHECK(has_kind(validate(code_of("x1o+ x1u- cd cu")), Violation::Kind::SignMismatch));
  CHECK(has_kind(validate(code_of("x1o+ x1o+ cd cu")), Violation::Kind::RoleMismatch));
  CHECK(has_kind(validate(code_of("x1o+ x1u+ x1o+ cd cu")), Violation::Kind::ExtraPass));

  auto vs = validate(code_of("x2o+ cd cu x3u-"));
  for (std::size_t i = 1; i < vs.size(); ++i)
    CHECK(vs[i - 1].index <= vs[i].index);
  CHECK_THROWS_AS(classical_invariants(code_of("x1o+ cd cu")), InvalidCode);
}

TEST_CASE("corpus invariants") {
  auto tb_rot = [](std::string_view n) {
    auto ci = classical_invariants(corpus_code(n));
    return std::pair<long, long>{ci.tb, ci.rot};
  };
  CHECK(tb_rot("K3") == std::pair{1L, 0L});
  CHECK(tb_rot("K4") == std::pair{1L, 0L});
  CHECK(tb_rot("K1").first == -10);
  CHECK(tb_rot("K2").first == -10);
  CHECK(std::abs(tb_rot("K1").second) == 3);
  CHECK(std::abs(tb_rot("K2").second) == 1);
  CHECK(tb_rot("trefoil") == std::pair{1L, 0L});
  CHECK(tb_rot("fig8") == std::pair{-3L, 0L});
  for (auto n : corpus_code_names())
    CHECK_MESSAGE(validate(corpus_code(n)).empty(), n);
}

TEST_CASE("stabilization") {
  auto u = corpus_code("unknot");
  auto sp = classical_invariants(stabilize(u, Stabilization::Plus, 0));
  CHECK(sp.tb == -2);
  CHECK(sp.rot == 1);
  CHECK(stabilize(u, Stabilization::Plus, 0).events == corpus_code("unknot-splus").events);
  auto a = classical_invariants(stabilize(stabilize(u, Stabilization::Plus, 1), Stabilization::Minus, 0));
  auto b = classical_invariants(stabilize(stabilize(u, Stabilization::Minus, 2), Stabilization::Plus, 3));
  CHECK(a.tb == -3);
  CHECK(a.rot == 0);
  CHECK(a.tb == b.tb);
  CHECK(a.rot == b.rot);
  CHECK_THROWS_AS(stabilize(u, Stabilization::Plus, 3), std::out_of_range);
  CHECK(classical_invariants(corpus_code("unknot-splus")).rot == 1);
  CHECK(classical_invariants(corpus_code("unknot-sminus")).rot == -1);
}

TEST_CASE("random codes: formula identity, stabilization and rotation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = test::random_code(rng);
    REQUIRE(validate(c).empty());
    auto ci = classical_invariants(c);
    CHECK(ci.tb + (ci.up_cusps + ci.down_cusps) / 2 == ci.writhe);
    CHECK(2 * ci.rot == ci.down_cusps - ci.up_cusps);
    for (std::size_t site = 0; site <= c.size(); site += 3) {
      auto p = classical_invariants(stabilize(c, Stabilization::Plus, site));
      auto m = classical_invariants(stabilize(c, Stabilization::Minus, site));
      CHECK(p.tb == ci.tb - 1);
      CHECK(p.rot == ci.rot + 1);
      CHECK(m.tb == ci.tb - 1);
      CHECK(m.rot == ci.rot - 1);
    }
    auto r = classical_invariants(rotate(c, trial % c.size()));
    CHECK(r.tb == ci.tb);
    CHECK(r.rot == ci.rot);
    CHECK(r.writhe == ci.writhe);
  }
}

TEST_CASE("text round trip and parse errors") {
  for (auto n : corpus_code_names()) {
    auto c = corpus_code(n);
    CHECK(parse_front_code(to_text(c)) == c);
  }
  CHECK(to_text(code_of("x3u- cd cu x3o-")) == "knot t\ncode x3u- cd cu x3o-\n");
  CHECK_THROWS_AS(parse_front_code("knot a\ncode cd cx\n"), ParseError);
  CHECK_THROWS_AS(parse_front_code("knot a\ncode x1o cd cu\n"), ParseError);
  CHECK_THROWS_AS(parse_front_code("code cd cu\n"), ParseError);
  try {
    parse_front_code("knot a\ncode cd cu x0u+\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).starts_with("2:"));
  }
}
