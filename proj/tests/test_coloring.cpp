#include "glr/coloring.hpp"
#include "glr/corpus.hpp"
#include "glr/enumerate.hpp"
#include "glr/isomorphism.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glr;

namespace {

constexpr std::pair<long, long> kFamilies[] = {{1, 0}, {0, 1}, {2, -1}};

ReducedPresentation pres(std::string_view name) { return std::get<ReducedPresentation>(corpus_presentation(name)); }

std::vector<Presentation> corpus_presentations() {
  std::vector<Presentation> out;
  for (auto n : corpus_presentation_names())
    out.push_back(corpus_presentation(n));
  for (auto n : corpus_code_names()) {
    auto c = corpus_code(n);
    out.push_back(extract_full(c));
    if (crossing_count(c) > 0)
      out.push_back(extract_reduced(c));
  }
  return out;
}

std::uint64_t oracle(const Presentation& p, const FiniteGLRack& x) {
  return std::visit([&](const auto& q) { return test::oracle_count(q, x); }, p);
}

int gens_of(const Presentation& p) {
  if (auto* fp = std::get_if<FullPresentation>(&p))
    return fp->gens;
  return std::get<ReducedPresentation>(p).gens();
}

} // namespace

TEST_CASE("Z9 counts for the 5_1 pair") {
  auto z9 = mk_permutation_family(9, 1, 0);
  CHECK(count_colorings(pres("K2.pres"), z9).count == 9);
  CHECK(count_colorings(pres("K1.pres"), z9).count == 0);
  CHECK(count_colorings(extract_full(corpus_code("K2")), z9).count == 9);
  CHECK(count_colorings(extract_full(corpus_code("K1")), z9).count == 0);
}

TEST_CASE("trivial GL-racks give constant colorings only") {
  for (const auto& p : corpus_presentations())
    for (int n = 1; n <= 4; ++n)
      CHECK(count_colorings(p, mk_trivial(n)).count == static_cast<std::uint64_t>(n));
}

TEST_CASE("brute force examples") {
  auto fp = extract_full(corpus_code("unknot"));
  auto z2 = mk_permutation(2, cycle_perm(2), inverse(cycle_perm(2)), identity_perm(2));
  CHECK(count_bruteforce(fp, z2).count == 0);
  CHECK(count_bruteforce(fp, mk_trivial(3)).count == 3);
  CHECK_THROWS_AS(count_bruteforce(pres("K2.pres"), mk_trivial(9), 1000), BudgetExceeded);
}

TEST_CASE("search equals brute force and the raw-table oracle") {
  auto racks = enumerate_glracks_upto(4);
  for (const auto& p : corpus_presentations()) {
    if (gens_of(p) > 8)
      continue;
    for (const auto& x : racks) {
      const auto fast = count_colorings(p, x).count;
      const auto bf = count_bruteforce(p, x).count;
      CHECK(fast == bf);
      if (x.size() <= 3)
        CHECK(fast == oracle(p, x));
    }
  }
}

TEST_CASE("parallel and serial search agree, including emitted colorings") {
  auto racks = enumerate_glracks_upto(3);
  racks.push_back(mk_permutation_family(9, 1, 0));
  for (auto n : {"K1", "K2", "K3", "trefoil", "fig8"}) {
    auto c = corpus_code(n);
    auto rp = extract_reduced(c);
    auto fp = extract_full(c);
    for (const auto& x : racks) {
      ColoringOptions opt{true, 50};
      auto a = count_colorings(rp, x, opt);
      auto b = count_colorings_serial(rp, x, opt);
      CHECK(a.count == b.count);
      CHECK(a.colorings == b.colorings);
      CHECK(count_colorings(fp, x).count == count_colorings_serial(fp, x).count);
      CHECK(count_colorings(fp, x).count == a.count);
      for (const auto& col : a.colorings)
        CHECK(satisfies(rp, x, col));
      CHECK(a.colorings.size() == std::min<std::uint64_t>(a.count, 50));
      CHECK(std::is_sorted(a.colorings.begin(), a.colorings.end()));
    }
  }
}

TEST_CASE("closed form matches the engine on the permutation family") {
  for (auto n : corpus_presentation_names()) {
    auto rp = pres(n);
    auto s = summarize(rp);
    for (int k = 1; k <= 12; ++k)
      for (auto [a, b] : kFamilies)
        CHECK(count_colorings(rp, mk_permutation_family(k, a, b)).count == closed_form_permutation(s, k, a, b));
  }
  // Crossingless codes: the full presentation's summary drives the same formula.
  for (auto n : {"unknot", "unknot-splus", "unknot-sminus"}) {
    auto fp = extract_full(corpus_code(n));
    for (int k = 1; k <= 6; ++k)
      for (auto [a, b] : kFamilies)
        CHECK(count_colorings(fp, mk_permutation_family(k, a, b)).count ==
              closed_form_permutation(summarize(fp), k, a, b));
  }
  auto k2 = summarize(pres("K2.pres"));
  CHECK(closed_form_permutation(k2, 9, 1, 0) == 9);
  CHECK(closed_form_permutation(summarize(pres("K1.pres")), 9, 1, 0) == 0);
  CHECK(closed_form_permutation(k2, 1, 2, -1) == 1);
  CHECK_THROWS_AS(closed_form_permutation(k2, 5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_permutation(k2, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("profiles") {
  auto racks = enumerate_glracks_upto(3);
  CHECK(coloring_profile(corpus_presentation("K3.pres"), racks) ==
        coloring_profile(corpus_presentation("K4.pres"), racks));
  std::vector<FiniteGLRack> one{mk_trivial(1)};
  CHECK(coloring_profile(corpus_presentation("K1.pres"), one) == std::vector<std::uint64_t>{1});

  // Isomorphic targets give equal profiles.
  std::mt19937 rng(2);
  for (const auto& x : racks) {
    Perm p = identity_perm(x.size());
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<FiniteGLRack> a{x}, b{relabel(x, p)};
    REQUIRE(is_isomorphic(a[0], b[0]));
    CHECK(coloring_profile(corpus_presentation("K3.pres"), a) == coloring_profile(corpus_presentation("K3.pres"), b));
  }
}

TEST_CASE("random codes: full and reduced presentations give equal counts") {
  std::mt19937 rng(23);
  auto racks = enumerate_glracks_upto(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = test::random_code(rng, 6, 6);
    if (crossing_count(c) == 0)
      continue;
    auto fp = extract_full(c);
    auto rp = extract_reduced(c);
    for (const auto& x : racks)
      CHECK(count_colorings(fp, x).count == count_colorings(rp, x).count);
  }
}
