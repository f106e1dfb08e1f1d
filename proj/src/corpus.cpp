#include "glr/corpus.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace glr {

namespace {

constexpr std::array<CorpusEntry, 15> kCorpus{{
    {"unknot", "knot unknot\ncode cd cu\n"},
    {"unknot-splus", "knot unknot-splus\ncode cd cd cd cu\n"},
    {"unknot-sminus", "knot unknot-sminus\ncode cu cu cd cu\n"},
    {"kinked-unknot", "knot kinked-unknot\ncode x1o+ cd cu x1u+ cd cu\n"},
    {"trefoil", "knot trefoil\ncode x1o+ cd x2u+ x3o+ cu x1u+ x2o+ cd x3u+ cu\n"},
    {"fig8", "knot fig8\ncode x1o- cu x2u+ x3o- cd x4u+ cu x2o+ x1u- cd x4o+ cu x3u- cd\n"},
    {"lr3-demo", "knot lr3-demo\ncode x1o+ x2o+ cd x1u+ x3o+ cu x2u+ x3u+ cd cu\n"},
    {"K1", "knot K1\ncode x5u- cd cu x3o- x1u- cd cd x4o- x2u- cd cu x5o- x3u- cd cd x1o- x4u- cd cd x2o-\n"},
    {"K2", "knot K2\ncode x8u- cu x4o- x7o- x1u- x2u- cd x3u- x2o- x6o- x4u- cd x8o- x5u- x6u- cd x1o- x3o- "
           "x5o- x7u-\n"},
    {"K3", "knot K3\ncode x6u+ cd cu cu x2o+ x4o+ x1u+ x2u+ cd cd x6o+ x3u+ cd cu cu x1o+ x5o+ x4u+ cd x5u+ cu "
           "x3o+\n"},
    {"K4", "knot K4\ncode x6u+ cd cu cu x2o+ x4o+ x1u+ x2u+ cd x6o+ x3u+ cu cu x1o+ x5o+ x4u+ cd x5u+ cd cd cu "
           "x3o+\n"},
    // ud(x1) *^-1 x4 = x2, d^2(x2) *^-1 x5 = x3, ud(x3) *^-1 x1 = x4,
    // d^2(x4) *^-1 x2 = x5, d^2(x5) *^-1 x3 = x1
    {"K1.pres", "gens 5\n"
                "xr 0 1 1 - 3\n"
                "xr 1 0 2 - 4\n"
                "xr 2 1 1 - 0\n"
                "xr 3 0 2 - 1\n"
                "xr 4 0 2 - 2\n"},
    // u(y1) *^-1 y7 = y2, y2 *^-1 y4 = y3, d(y3) *^-1 y7 = y4, y4 *^-1 y1 = y5,
    // d(y5) *^-1 y7 = y6, y6 *^-1 y4 = y7, d(y7) *^-1 y1 = y8, y8 *^-1 y5 = y1
    {"K2.pres", "gens 8\n"
                "xr 0 1 0 - 6\n"
                "xr 1 0 0 - 3\n"
                "xr 2 0 1 - 6\n"
                "xr 3 0 0 - 0\n"
                "xr 4 0 1 - 6\n"
                "xr 5 0 0 - 3\n"
                "xr 6 0 1 - 0\n"
                "xr 7 0 0 - 4\n"},
    // u^2d(x1) * x4 = x2, x2 * x1 = x3, d^2(x3) * x6 = x4,
    // u^2d(x4) * x1 = x5, d(x5) * x4 = x6, u(x6) * x3 = x1
    {"K3.pres", "gens 6\n"
                "xr 0 2 1 + 3\n"
                "xr 1 0 0 + 0\n"
                "xr 2 0 2 + 5\n"
                "xr 3 2 1 + 0\n"
                "xr 4 0 1 + 3\n"
                "xr 5 1 0 + 2\n"},
    // u^2d(y1) * y4 = y2, y2 * y1 = y3, d(y3) * y6 = y4,
    // u^2(y4) * y1 = y5, d(y5) * y4 = y6, ud^2(y6) * y3 = y1
    {"K4.pres", "gens 6\n"
                "xr 0 2 1 + 3\n"
                "xr 1 0 0 + 0\n"
                "xr 2 0 1 + 5\n"
                "xr 3 2 0 + 0\n"
                "xr 4 0 1 + 3\n"
                "xr 5 1 2 + 2\n"},
}};

bool is_pres(std::string_view name) { return name.size() > 5 && name.substr(name.size() - 5) == ".pres"; }

} // namespace

std::span<const CorpusEntry> corpus() { return kCorpus; }

std::optional<std::string_view> corpus_text(std::string_view name) {
  for (const auto& e : kCorpus)
    if (e.name == name)
      return e.text;
  return std::nullopt;
}

std::vector<std::string_view> corpus_code_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kCorpus)
    if (!is_pres(e.name))
      out.push_back(e.name);
  return out;
}

std::vector<std::string_view> corpus_presentation_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kCorpus)
    if (is_pres(e.name))
      out.push_back(e.name);
  return out;
}

FrontCode corpus_code(std::string_view name) {
  auto t = corpus_text(name);
  if (!t || is_pres(name))
    throw std::out_of_range("no corpus front code named '" + std::string(name) + "'");
  return parse_front_code(*t);
}

Presentation corpus_presentation(std::string_view name) {
  auto t = corpus_text(name);
  if (!t || !is_pres(name))
    throw std::out_of_range("no corpus presentation named '" + std::string(name) + "'");
  return parse_presentation(*t);
}

} // namespace glr
