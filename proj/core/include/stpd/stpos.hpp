#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stpd/general_locator.hpp"
#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

// Occurrence with the smallest / largest start position; delegates to the
// general locating mechanism with the position priority and its dual.
std::optional<pos_t> leftmost_occurrence(const Text& t, std::span<const sym_t> pattern);
std::optional<pos_t> rightmost_occurrence(const Text& t, std::span<const sym_t> pattern);
std::optional<pos_t> leftmost_occurrence(const GeneralLocator& pos_locator, std::span<const sym_t> pattern);
std::optional<pos_t> rightmost_occurrence(const GeneralLocator& pos_dual_locator, std::span<const sym_t> pattern);

// Encodes a strictly monotonic positive integer sequence x_1..x_p as the
// string 0^{x_1} 1 0^{x_2} 2 ... 0^{x_p} p over the alphabet {0..p}; its
// position-priority path decomposition has exactly p+1 distinct paths.
// Throws std::invalid_argument when the sequence is empty, contains 0, or is
// not strictly monotonic.
std::vector<sym_t> worst_case_string(std::span<const pos_t> xs);

// Number of escape symbols emitted by unbounded-context prediction by
// partial matching: position 1 always escapes; position j > 1 escapes when
// the longest context T[i',j-1] already seen in T[1,j-2] is never followed
// by T[j] there. Literal simulation with naive substring search.
pos_t ppm_escape_count(std::span<const sym_t> s);

}  // namespace stpd
