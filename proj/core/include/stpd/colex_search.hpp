#pragma once

#include <optional>
#include <span>

#include "stpd/types.hpp"

namespace stpd {

// Ordering of a text prefix T[1,p] relative to a needle string in the
// colexicographic order: Less / Greater when the prefix is not suffixed by
// the needle and sorts left / right of everything that is; Suffixed when the
// needle is a suffix of the prefix.
enum class ColexCmp { Less, Suffixed, Greater };

// Needle = T[ctx_begin, ctx_end] followed by `extra` if present. An empty
// context is expressed as ctx_end = ctx_begin - 1. p may be 0 (empty prefix).
ColexCmp colex_compare(std::span<const sym_t> text, pos_t p, pos_t ctx_begin, pos_t ctx_end,
                       std::optional<sym_t> extra);

// Colexicographic "T[1,a] < T[1,b]" for prefix end positions (0 = empty).
bool colex_prefix_less(std::span<const sym_t> text, pos_t a, pos_t b);

struct RowRange {
  pos_t b = 0;
  pos_t e = 0;  // 1-based inclusive rows
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

// Maximal row range of prefix_ends (colex-sorted prefix end positions) whose
// prefixes are suffixed by the needle; nullopt when no row matches.
std::optional<RowRange> suffix_search(std::span<const sym_t> text, std::span<const pos_t> prefix_ends,
                                      pos_t ctx_begin, pos_t ctx_end, std::optional<sym_t> extra);

}  // namespace stpd
