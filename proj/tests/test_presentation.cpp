#include "glr/corpus.hpp"
#include "glr/enumerate.hpp"
#include "glr/presentation.hpp"
#include "glr/text_io.hpp"
#include "glr/word.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glr;

namespace {

ReducedPresentation pres(std::string_view name) { return std::get<ReducedPresentation>(corpus_presentation(name)); }

} // namespace

TEST_CASE("word evaluation identities hold in every small GL-rack") {
  const Word g = Word::gen(0), h = Word::gen(1);
  for (const auto& x : enumerate_glracks_upto(4)) {
    const int n = x.size();
    for (int a = 0; a < n; ++a) {
      std::vector<int> one{a};
      CHECK(eval_word(Word::up(Word::down(Word::star(g, g))), x, one) == a);
      CHECK(eval_word(Word::down(Word::up(Word::star(g, g))), x, one) == a);
      for (int b = 0; b < n; ++b) {
        std::vector<int> two{a, b};
        CHECK(eval_word(Word::star_inv(Word::star(g, h), h), x, two) == a);
        CHECK(eval_word(Word::star(Word::star_inv(g, h), h), x, two) == a);
        CHECK(eval_word(Word::star(g, Word::up(h)), x, two) == eval_word(Word::star(g, h), x, two));
        CHECK(eval_word(Word::star(g, Word::down(h)), x, two) == eval_word(Word::star(g, h), x, two));
        CHECK(eval_word(Word::up(Word::star(g, h)), x, two) == eval_word(Word::star(Word::up(g), h), x, two));
      }
    }
  }
  std::vector<int> partial{0, -1};
  CHECK_THROWS_AS(eval_word(Word::star(g, h), mk_trivial(2), partial), UnassignedGenerator);
  CHECK(to_string(Word::up(Word::down(Word::star(g, g)))) == "u(d(x1 * x1))");
}

TEST_CASE("eval_word commutes with homomorphisms") {
  auto x = mk_permutation_family(6, 1, 0);
  auto y = mk_permutation_family(3, 1, 0);
  std::vector<int> f(6);
  for (int i = 0; i < 6; ++i)
    f[i] = i % 3;
  REQUIRE(is_homomorphism(f, x, y));
  const Word w = Word::star_inv(Word::up(Word::star(Word::gen(0), Word::gen(1))), Word::down(Word::gen(2)));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        std::vector<int> ax{a, b, c}, ay{f[a], f[b], f[c]};
        CHECK(f[eval_word(w, x, ax)] == eval_word(w, y, ay));
      }
}

TEST_CASE("full presentation of the unknot") {
  auto fp = extract_full(corpus_code("unknot"));
  CHECK(fp.gens == 2);
  REQUIRE(fp.relations.size() == 2);
  CHECK(fp.relations[0] == FullRelation{CuspRel{Shift::D, 0, 1}});
  CHECK(fp.relations[1] == FullRelation{CuspRel{Shift::U, 1, 0}});
  CHECK_THROWS_AS(extract_reduced(corpus_code("unknot")), NoCrossings);
  CHECK_THROWS_AS(reduce(fp), NoCrossings);
}

TEST_CASE("corpus codes reproduce the reference relation lists") {
  for (auto n : {"K1", "K2", "K3", "K4"}) {
    auto rp = extract_reduced(corpus_code(n));
    CHECK_MESSAGE(rp == pres(std::string(n) + ".pres"), n);
  }
  auto k3 = extract_reduced(corpus_code("K3"));
  CHECK(format_relation(k3, 0) == "u^2d(x1) * x4 = x2");
  auto k1 = extract_reduced(corpus_code("K1"));
  CHECK(k1.gens() == 5);
  for (const auto& r : k1.relations)
    CHECK(r.eps == -1);
  CHECK(format_relation(k1, 0) == "ud(x1) *^-1 x4 = x2");
  auto k2 = reduce(extract_full(corpus_code("K2")));
  CHECK(k2.gens() == 8);
  CHECK(format_relation(k2, 0, "y") == "u(y1) *^-1 y7 = y2");
}

TEST_CASE("summaries") {
  CHECK(summarize(pres("K1.pres")) == PresentationSummary{-5, 2, 8, 5, 10});
  CHECK(summarize(pres("K2.pres")) == PresentationSummary{-8, 1, 3, 8, 4});
  CHECK(summarize(pres("K3.pres")) == PresentationSummary{6, 5, 5, 6, 10});
  CHECK(summarize(pres("K4.pres")) == PresentationSummary{6, 5, 5, 6, 10});
  CHECK(summarize(ReducedPresentation{}) == PresentationSummary{});
  CHECK_THROWS_AS(summarize(pres("K1.pres"), corpus_code("K2")), std::logic_error);
  auto s = summarize(pres("K3.pres"));
  CHECK(parse_summary(to_text(s)) == s);
}

TEST_CASE("random codes: extraction properties") {
  std::mt19937 rng(17);
  int with_crossings = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto c = test::random_code(rng);
    auto ci = classical_invariants(c);
    auto fp = extract_full(c);
    CHECK(fp.relations.size() == static_cast<std::size_t>(crossing_count(c) + cusp_count(c)));
    CHECK_NOTHROW(validate_presentation(fp));
    CHECK(summarize(fp).cusps == ci.up_cusps + ci.down_cusps);
    if (crossing_count(c) == 0)
      continue;
    ++with_crossings;
    auto rp = extract_reduced(c);
    CHECK_NOTHROW(validate_presentation(rp));
    CHECK(rp.gens() == crossing_count(c));
    CHECK(reduce(fp) == rp);
    CHECK(summarize(fp) == summarize(rp));
    auto s = summarize(rp, c);
    CHECK(s.omega == ci.writhe);
    CHECK(s.p + s.q == ci.up_cusps + ci.down_cusps);
    CHECK(ci.tb == s.omega - (s.p + s.q) / 2);
    CHECK(2 * ci.rot == s.q - s.p);

    // Base-point independence: some cyclic relabeling matches.
    const std::size_t shift = static_cast<std::size_t>(trial) % c.size();
    auto rr = extract_reduced(rotate(c, shift));
    bool matched = false;
    for (int k = 0; k < rp.gens() && !matched; ++k)
      matched = rotate_generators(rp, k) == rr;
    CHECK(matched);
    CHECK(summarize(rr) == s);
  }
  CHECK(with_crossings > 150);
}

TEST_CASE("presentation text round trip and errors") {
  for (auto n : corpus_presentation_names()) {
    auto p = corpus_presentation(n);
    CHECK(parse_presentation(to_text(p)) == p);
  }
  for (auto n : corpus_code_names()) {
    auto fp = extract_full(corpus_code(n));
    CHECK(parse_presentation(to_text(fp)) == Presentation{fp});
  }
  CHECK_THROWS_AS(parse_presentation("gens 2\nxr 0 0 0 + 5\nxr 1 0 0 + 0\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 2\ncusp u 0 0\ncusp d 1 1\n"), MalformedPresentation);
  CHECK_THROWS_AS(parse_presentation("gens 2\nxr 0 0 0 + 1\ncusp u 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 2\nxr 0 0 0 * 1\nxr 1 0 0 + 0\n"), ParseError);
  CHECK_THROWS_AS(validate_presentation(FullPresentation{2, {CuspRel{Shift::U, 0, 0}, CuspRel{Shift::D, 1, 1}}}),
                  MalformedPresentation);
  CHECK(parse_presentation("gens 0\n") == Presentation{ReducedPresentation{}});
}
