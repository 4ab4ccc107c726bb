#pragma once

#include <cassert>
#include <span>

#include "stpd/types.hpp"

namespace stpd {

// Longest common prefix of the suffixes starting at i and j (1-based).
inline pos_t rlce_scan(std::span<const sym_t> s, pos_t i, pos_t j) {
  const pos_t n = s.size();
  assert(i >= 1 && i <= n && j >= 1 && j <= n);
  pos_t k = 0;
  while (i + k <= n && j + k <= n && s[i + k - 1] == s[j + k - 1]) ++k;
  return k;
}

// Longest common suffix of the prefixes ending at i and j (1-based).
// i or j may be 0, denoting the empty prefix.
inline pos_t llce_scan(std::span<const sym_t> s, pos_t i, pos_t j) {
  assert(i <= s.size() && j <= s.size());
  pos_t k = 0;
  while (k < i && k < j && s[i - k - 1] == s[j - k - 1]) ++k;
  return k;
}

}  // namespace stpd
