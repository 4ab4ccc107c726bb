#include "stpd/lpf.hpp"

#include <algorithm>
#include <set>

#include "stpd/colex_search.hpp"
#include "stpd/lce.hpp"

namespace stpd {

namespace {

struct RankPair {
  std::vector<pos_t> pi;
  std::vector<pos_t> lex;
};

RankPair ranks_for(std::span<const sym_t> s, PermKind kind) {
  const pos_t n = s.size();
  RankPair out;
  out.lex = sort_suffixes(s).ranks;
  switch (kind) {
    case PermKind::LEX:
      out.pi = out.lex;
      break;
    case PermKind::LEX_DUAL:
      out.pi.resize(n);
      for (pos_t i = 0; i < n; ++i) out.pi[i] = n - out.lex[i] + 1;
      break;
    case PermKind::COLEX:
      out.pi = sort_prefixes(s).ranks;
      break;
    case PermKind::COLEX_DUAL: {
      std::vector<pos_t> ipa = sort_prefixes(s).ranks;
      out.pi.resize(n);
      for (pos_t i = 0; i < n; ++i) out.pi[i] = n - ipa[i] + 1;
      break;
    }
    case PermKind::POS:
    case PermKind::POS_DUAL:
      out.pi.resize(n);
      for (pos_t i = 1; i <= n; ++i) out.pi[i - 1] = kind == PermKind::POS ? i : n - i + 1;
      break;
  }
  return out;
}

}  // namespace

std::vector<pos_t> lpf_values(std::span<const sym_t> s, std::span<const pos_t> pi_ranks,
                              std::span<const pos_t> lex_ranks) {
  const pos_t n = s.size();
  assert(pi_ranks.size() == n && lex_ranks.size() == n);

  std::vector<pos_t> order(n);  // order[r-1] = position with pi rank r
  for (pos_t i = 1; i <= n; ++i) order[pi_ranks[i - 1] - 1] = i;

  auto lex_less = [&](pos_t a, pos_t b) { return lex_ranks[a - 1] < lex_ranks[b - 1]; };
  std::set<pos_t, decltype(lex_less)> inserted(lex_less);

  std::vector<pos_t> lpf(n, 0);
  for (pos_t r = 1; r <= n; ++r) {
    const pos_t i = order[r - 1];
    if (r > 1) {
      pos_t best = 0;
      auto it = inserted.lower_bound(i);
      if (it != inserted.end()) best = std::max(best, rlce_scan(s, i, *it));
      if (it != inserted.begin()) best = std::max(best, rlce_scan(s, i, *std::prev(it)));
      lpf[i - 1] = best;
    }
    inserted.insert(i);
  }
  return lpf;
}

LpfArray build_lpf(std::span<const sym_t> s, PermKind kind) {
  RankPair ranks = ranks_for(s, kind);
  return LpfArray{lpf_values(s, ranks.pi, ranks.lex), kind};
}

LpfArray build_lpf(const Text& t, PermKind kind) { return build_lpf(t.symbols(), kind); }

std::vector<pos_t> irreducible_positions(const LpfArray& lpf) {
  std::vector<pos_t> out;
  for (pos_t i = 1; i <= lpf.size(); ++i) {
    if (i == 1 || lpf.at(i) + 1 != lpf.at(i - 1)) out.push_back(i);
  }
  return out;
}

PdaArray build_pda_from_lpf(const Text& t, const LpfArray& lpf) {
  std::vector<pos_t> ends;
  ends.reserve(lpf.size());
  for (pos_t i = 1; i <= lpf.size(); ++i) ends.push_back(i + lpf.at(i));
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  auto text = t.symbols();
  std::sort(ends.begin(), ends.end(),
            [&](pos_t a, pos_t b) { return colex_prefix_less(text, a, b); });
  return PdaArray{std::move(ends), lpf.kind};
}

PdaArray build_pda(const Text& t, PermKind kind) {
  return build_pda_from_lpf(t, build_lpf(t, kind));
}

pos_t pda_size(std::span<const sym_t> s, PermKind kind) {
  const LpfArray lpf = build_lpf(s, kind);
  const pos_t n = lpf.size();
  pos_t count = 0;
  for (pos_t i : irreducible_positions(lpf)) {
    if (i + lpf.at(i) <= n) ++count;
  }
  return count;
}

}  // namespace stpd
