#include "stpd/compress.hpp"

#include <algorithm>
#include <stdexcept>

#include "stpd/lce.hpp"

namespace stpd {

CompressedText compress(const Text& t, PermKind kind) {
  const pos_t n = t.size();
  auto s = t.symbols();
  IndexPermutation sa = build_sa(t);
  IndexPermutation pa = build_pa(t);
  std::vector<pos_t> pi = perm_ranks(kind, sa, pa);

  LpfArray lpf{lpf_values(s, pi, sa.ranks), kind};

  CompressedText ct;
  ct.n = n;
  ct.sigma = t.sigma();
  ct.kind = kind;
  for (pos_t i : irreducible_positions(lpf)) {
    const pos_t len = lpf.at(i);
    pos_t source = 1;
    if (len > 0) {
      pos_t best_rank = n + 1;
      for (pos_t j = 1; j <= n; ++j) {
        if (pi[j - 1] < pi[i - 1] && pi[j - 1] < best_rank && rlce_scan(s, j, i) >= len) {
          best_rank = pi[j - 1];
          source = j;
        }
      }
    }
    ct.quads.push_back({i, len, source, t.at(i + len)});
  }
  return ct;
}

sym_t extract_char(const CompressedText& ct, pos_t j) {
  if (j < 1 || j > ct.n) throw std::out_of_range("extract_char: position out of range");
  for (pos_t steps = 0; steps <= ct.n; ++steps) {
    // Last quadruple with start <= j; the phrase starting there covers j.
    auto it = std::upper_bound(ct.quads.begin(), ct.quads.end(), j,
                               [](pos_t v, const CompressedText::Quad& q) { return v < q.start; });
    if (it == ct.quads.begin()) throw CorruptionError("extract_char: no covering quadruple");
    const auto& q = *std::prev(it);
    if (j == q.start + q.len) return q.next_sym;
    if (j < q.start + q.len) {
      j = q.source + (j - q.start);
      continue;
    }
    throw CorruptionError("extract_char: no covering quadruple");
  }
  throw CorruptionError("extract_char: source chain exceeds text length");
}

}  // namespace stpd
