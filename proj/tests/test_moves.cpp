#include "glr/coloring.hpp"
#include "glr/corpus.hpp"
#include "glr/enumerate.hpp"
#include "glr/moves.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glr;

namespace {

FrontCode code_of(std::string_view events) { return parse_front_code("knot t\ncode " + std::string(events) + "\n"); }

std::pair<long, long> tb_rot(const FrontCode& c) {
  auto ci = classical_invariants(c);
  return std::pair<long, long>{ci.tb, ci.rot};
}

std::vector<std::uint64_t> counts(const FrontCode& c, const std::vector<FiniteGLRack>& racks) {
  std::vector<std::uint64_t> out;
  auto fp = extract_full(c);
  for (const auto& x : racks)
    out.push_back(count_colorings(fp, x).count);
  return out;
}

} // namespace

TEST_CASE("LR1 forward then backward restores the code") {
  auto c = corpus_code("trefoil");
  for (std::size_t g = 0; g <= c.size(); ++g)
    for (Role r : {Role::Over, Role::Under}) {
      auto k = apply_move(c, Lr1Insert{g, r});
      CHECK(k.size() == c.size() + 4);
      CHECK(tb_rot(k) == tb_rot(c));
      CHECK(apply_move(k, Lr1Remove{g}) == c);
    }
  CHECK(apply_move(corpus_code("kinked-unknot"), Lr1Remove{0}).events == code_of("cd cu").events);
}

TEST_CASE("LR1 mismatch names the expected pattern") {
  auto c = corpus_code("trefoil");
  try {
    apply_move(c, Lr1Remove{1});
    FAIL("expected a mismatch");
  } catch (const MoveMismatch& e) {
    CHECK(e.expected().find("x<c>") != std::string::npos);
  }
  CHECK_THROWS_AS(apply_move(c, Move::LR1, Direction::Backward, "0"), MoveMismatch);
}

TEST_CASE("LR2 forward then backward restores the code") {
  auto c = corpus_code("fig8");
  int checked = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c.events[i].is_cusp())
      continue;
    for (std::size_t g = 0; g <= c.size(); ++g)
      for (Role r : {Role::Over, Role::Under})
        for (int s : {1, -1}) {
          auto m = apply_move(c, Lr2Insert{i, g, r, s});
          CHECK(tb_rot(m) == tb_rot(c));
          // The cusp moves right by one, plus two more if B landed before it.
          const std::size_t cusp = i + 1 + (g <= i ? 2 : 0);
          REQUIRE(m.events[cusp].is_cusp());
          CHECK(apply_move(m, Lr2Remove{cusp}) == c);
          ++checked;
        }
  }
  CHECK(checked > 0);
  CHECK_THROWS_AS(apply_move(c, Lr2Remove{1}), MoveMismatch);
}

TEST_CASE("LR3 is self-inverse and preserves invariants") {
  auto c = corpus_code("lr3-demo");
  auto s = apply_move(c, Lr3Swap{{1, 2, 3}});
  CHECK(s != c);
  CHECK(tb_rot(s) == tb_rot(c));
  CHECK(validate(s).empty());
  CHECK(apply_move(s, Lr3Swap{{3, 1, 2}}) == c);
  CHECK(apply_move(c, Move::LR3, Direction::Forward, "1,2,3") == s);
  CHECK_THROWS_AS(apply_move(corpus_code("trefoil"), Lr3Swap{{1, 2, 3}}), MoveMismatch);
  CHECK_THROWS_AS(apply_move(c, Lr3Swap{{1, 1, 2}}), MoveMismatch);
  // A sign flip on one crossing breaks the triangle condition.
  CHECK_THROWS_AS(apply_move(code_of("x1o- x2o+ cd x1u- x3o+ cu x2u+ x3u+ cd cu"), Lr3Swap{{1, 2, 3}}),
                  MoveMismatch);
}

TEST_CASE("site specs") {
  CHECK(parse_move_site(Move::LR1, Direction::Forward, "3:u") == MoveSite{Lr1Insert{3, Role::Under}});
  CHECK(parse_move_site(Move::LR1, Direction::Forward, "3") == MoveSite{Lr1Insert{3, Role::Over}});
  CHECK(parse_move_site(Move::LR2, Direction::Forward, "1,4,o,-") == MoveSite{Lr2Insert{1, 4, Role::Over, -1}});
  CHECK(parse_move_site(Move::LR2, Direction::Backward, "2") == MoveSite{Lr2Remove{2}});
  CHECK(parse_move_site(Move::LR3, Direction::Backward, "4,5,6") == MoveSite{Lr3Swap{{4, 5, 6}}});
  CHECK_THROWS_AS(parse_move_site(Move::LR1, Direction::Forward, "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move_site(Move::LR2, Direction::Forward, "1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move_site(Move::LR3, Direction::Forward, "1,2"), std::invalid_argument);
}

TEST_CASE("moves preserve colorings on small codes") {
  auto racks = enumerate_glracks_upto(3);
  racks.push_back(mk_permutation_family(9, 1, 0));
  for (auto name : {"unknot", "trefoil", "lr3-demo"}) {
    auto c = corpus_code(name);
    const auto base = counts(c, racks);
    for (const auto& site : applicable_moves(c)) {
      auto m = apply_move(c, site);
      CHECK_MESSAGE(tb_rot(m) == tb_rot(c), describe(site));
      CHECK_MESSAGE(counts(m, racks) == base, name, " ", describe(site));
    }
  }
}

TEST_CASE("random codes: applied moves keep the code valid and tb/rot fixed") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = test::random_code(rng, 5, 6);
    for (const auto& site : applicable_moves(c)) {
      auto m = apply_move(c, site);
      CHECK(validate(m).empty());
      CHECK(tb_rot(m) == tb_rot(c));
    }
  }
}
