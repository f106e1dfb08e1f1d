#pragma once

// Embedded front codes and presentations, addressable as `corpus:<name>`.
//
// K1/K2 are the two 5_1 fronts and K3/K4 the Chekanov-Eliashberg pair. Their
// `.pres` entries are the reference reduced relation lists with generators
// renumbered from 0; the codes are built so that extract_reduced reproduces
// those lists exactly. Each code is oriented so that its first under-pass is
// the crossing whose relation produces generator 0.

#include "glr/front_code.hpp"
#include "glr/presentation.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace glr {

struct CorpusEntry {
  std::string_view name;
  std::string_view text;
};

std::span<const CorpusEntry> corpus();
std::optional<std::string_view> corpus_text(std::string_view name);

/// Names of the front code entries (no `.pres` suffix), in corpus order.
std::vector<std::string_view> corpus_code_names();
/// Names of the reference presentation entries.
std::vector<std::string_view> corpus_presentation_names();

FrontCode corpus_code(std::string_view name);
Presentation corpus_presentation(std::string_view name);

} // namespace glr
