#include "stpd/stpos.hpp"

#include <algorithm>
#include <stdexcept>

namespace stpd {

std::optional<pos_t> leftmost_occurrence(const Text& t, std::span<const sym_t> pattern) {
  return GeneralLocator::build(t, PermKind::POS).locate_primary(pattern);
}

std::optional<pos_t> rightmost_occurrence(const Text& t, std::span<const sym_t> pattern) {
  return GeneralLocator::build(t, PermKind::POS_DUAL).locate_primary(pattern);
}

std::optional<pos_t> leftmost_occurrence(const GeneralLocator& pos_locator, std::span<const sym_t> pattern) {
  if (pos_locator.kind() != PermKind::POS) throw std::invalid_argument("leftmost_occurrence: wrong priority kind");
  return pos_locator.locate_primary(pattern);
}

std::optional<pos_t> rightmost_occurrence(const GeneralLocator& pos_dual_locator, std::span<const sym_t> pattern) {
  if (pos_dual_locator.kind() != PermKind::POS_DUAL) throw std::invalid_argument("rightmost_occurrence: wrong priority kind");
  return pos_dual_locator.locate_primary(pattern);
}

std::vector<sym_t> worst_case_string(std::span<const pos_t> xs) {
  if (xs.empty()) throw std::invalid_argument("worst_case_string: empty spec");
  bool increasing = true, decreasing = true;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] == 0) throw std::invalid_argument("worst_case_string: entries must be positive");
    if (k > 0) {
      increasing &= xs[k - 1] < xs[k];
      decreasing &= xs[k - 1] > xs[k];
    }
  }
  if (!increasing && !decreasing) throw std::invalid_argument("worst_case_string: not strictly monotonic");

  std::vector<sym_t> s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    s.insert(s.end(), xs[k], sym_t{0});
    s.push_back(static_cast<sym_t>(k + 1));
  }
  return s;
}

namespace {

bool occurs_in(std::span<const sym_t> hay, std::span<const sym_t> needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

pos_t ppm_escape_count(std::span<const sym_t> s) {
  if (s.empty()) throw std::invalid_argument("ppm_escape_count: empty string");
  const pos_t n = s.size();
  pos_t escapes = 1;  // the first symbol always escapes
  for (pos_t j = 2; j <= n; ++j) {
    // Longest context T[i', j-1] occurring inside T[1, j-2]; the empty
    // context (i' = j) always qualifies.
    pos_t ctx = j;
    for (pos_t cand = 1; cand < j; ++cand) {
      if (occurs_in(s.subspan(0, j - 2), s.subspan(cand - 1, j - cand))) {
        ctx = cand;
        break;
      }
    }
    const std::size_t ext_begin = (ctx == j) ? j - 1 : ctx - 1;
    if (!occurs_in(s.subspan(0, j - 1), s.subspan(ext_begin, j - ext_begin))) ++escapes;
  }
  return escapes;
}

}  // namespace stpd
