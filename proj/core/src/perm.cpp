#include "stpd/perm.hpp"

#include <stdexcept>

namespace stpd {

pos_t perm_eval(PermKind kind, const IndexPermutation& sa, const IndexPermutation& pa, pos_t i) {
  const pos_t n = (kind == PermKind::COLEX || kind == PermKind::COLEX_DUAL) ? pa.size() : sa.size();
  if (i < 1 || i > n) throw std::out_of_range("perm_eval: position out of range");
  switch (kind) {
    case PermKind::LEX: return sa.rank(i);
    case PermKind::LEX_DUAL: return n - sa.rank(i) + 1;
    case PermKind::COLEX: return pa.rank(i);
    case PermKind::COLEX_DUAL: return n - pa.rank(i) + 1;
    case PermKind::POS: return i;
    case PermKind::POS_DUAL: return n - i + 1;
  }
  throw std::invalid_argument("perm_eval: unknown kind");
}

std::vector<pos_t> perm_ranks(PermKind kind, const IndexPermutation& sa, const IndexPermutation& pa) {
  const pos_t n = (kind == PermKind::COLEX || kind == PermKind::COLEX_DUAL) ? pa.size() : sa.size();
  std::vector<pos_t> out(n);
  for (pos_t i = 1; i <= n; ++i) out[i - 1] = perm_eval(kind, sa, pa, i);
  return out;
}

bool check_order_preserving(std::span<const pos_t> ranks, std::span<const sym_t> text) {
  const std::size_t n = ranks.size();
  if (n != text.size()) throw std::invalid_argument("check_order_preserving: size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (pos_t r : ranks) {
    if (r < 1 || r > n || seen[r]) throw std::invalid_argument("check_order_preserving: not a permutation");
    seen[r] = true;
  }
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    for (std::size_t j = 1; j + 1 <= n; ++j) {
      if (ranks[i - 1] < ranks[j - 1] && text[i - 1] == text[j - 1] && text[i] == text[j] &&
          !(ranks[i] < ranks[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace stpd
