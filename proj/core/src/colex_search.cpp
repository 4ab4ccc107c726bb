#include "stpd/colex_search.hpp"

#include <algorithm>
#include <cassert>

namespace stpd {

ColexCmp colex_compare(std::span<const sym_t> text, pos_t p, pos_t ctx_begin, pos_t ctx_end,
                       std::optional<sym_t> extra) {
  assert(p <= text.size());
  pos_t cur = p;
  auto step = [&](sym_t needle_sym) -> std::optional<ColexCmp> {
    if (cur == 0) return ColexCmp::Less;  // prefix exhausted: proper suffix of the needle
    const sym_t c = text[cur - 1];
    if (c != needle_sym) return c < needle_sym ? ColexCmp::Less : ColexCmp::Greater;
    --cur;
    return std::nullopt;
  };
  if (extra) {
    if (auto r = step(*extra)) return *r;
  }
  if (ctx_end >= ctx_begin && ctx_begin >= 1) {
    for (pos_t k = ctx_end;; --k) {
      if (auto r = step(text[k - 1])) return *r;
      if (k == ctx_begin) break;
    }
  }
  return ColexCmp::Suffixed;
}

bool colex_prefix_less(std::span<const sym_t> text, pos_t a, pos_t b) {
  pos_t k = 0;
  const pos_t lim = std::min(a, b);
  while (k < lim) {
    const sym_t ca = text[a - k - 1];
    const sym_t cb = text[b - k - 1];
    if (ca != cb) return ca < cb;
    ++k;
  }
  return a < b;  // the shorter prefix is a proper suffix of the longer
}

std::optional<RowRange> suffix_search(std::span<const sym_t> text, std::span<const pos_t> prefix_ends,
                                      pos_t ctx_begin, pos_t ctx_end, std::optional<sym_t> extra) {
  const std::size_t k = prefix_ends.size();
  auto cmp_at = [&](std::size_t idx) {
    return colex_compare(text, prefix_ends[idx], ctx_begin, ctx_end, extra);
  };
  // First row that is not Less.
  std::size_t lo = 0, hi = k;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cmp_at(mid) == ColexCmp::Less) lo = mid + 1;
    else hi = mid;
  }
  const std::size_t first = lo;
  // First row that is Greater.
  hi = k;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cmp_at(mid) != ColexCmp::Greater) lo = mid + 1;
    else hi = mid;
  }
  const std::size_t last = lo;
  if (first >= last) return std::nullopt;
  return RowRange{first + 1, last};
}

}  // namespace stpd
