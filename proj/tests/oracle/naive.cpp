#include "oracle/naive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace stpd::oracle {

namespace {

bool suffix_less(std::span<const sym_t> s, pos_t a, pos_t b) {
  const pos_t n = s.size();
  std::vector<sym_t> sa(s.begin() + (a - 1), s.end());
  std::vector<sym_t> sb(s.begin() + (b - 1), s.end());
  (void)n;
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

bool prefix_colex_less(std::span<const sym_t> s, pos_t a, pos_t b) {
  std::vector<sym_t> ra(s.begin(), s.begin() + a);
  std::vector<sym_t> rb(s.begin(), s.begin() + b);
  std::reverse(ra.begin(), ra.end());
  std::reverse(rb.begin(), rb.end());
  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
}

std::vector<pos_t> ranks_from_order(const std::vector<pos_t>& order) {
  std::vector<pos_t> ranks(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r] - 1] = r + 1;
  return ranks;
}

}  // namespace

std::vector<pos_t> naive_sa(std::span<const sym_t> s) {
  std::vector<pos_t> order(s.size());
  std::iota(order.begin(), order.end(), pos_t{1});
  std::sort(order.begin(), order.end(), [&](pos_t a, pos_t b) { return suffix_less(s, a, b); });
  return order;
}

std::vector<pos_t> naive_pa(std::span<const sym_t> s) {
  std::vector<pos_t> order(s.size());
  std::iota(order.begin(), order.end(), pos_t{1});
  std::sort(order.begin(), order.end(), [&](pos_t a, pos_t b) { return prefix_colex_less(s, a, b); });
  return order;
}

std::vector<pos_t> naive_suffix_ranks(std::span<const sym_t> s) { return ranks_from_order(naive_sa(s)); }

std::vector<pos_t> naive_prefix_ranks(std::span<const sym_t> s) { return ranks_from_order(naive_pa(s)); }

std::vector<pos_t> naive_perm_ranks(std::span<const sym_t> s, PermKind kind) {
  const pos_t n = s.size();
  std::vector<pos_t> base;
  switch (kind) {
    case PermKind::LEX:
    case PermKind::LEX_DUAL:
      base = naive_suffix_ranks(s);
      break;
    case PermKind::COLEX:
    case PermKind::COLEX_DUAL:
      base = naive_prefix_ranks(s);
      break;
    case PermKind::POS:
    case PermKind::POS_DUAL:
      base.resize(n);
      std::iota(base.begin(), base.end(), pos_t{1});
      break;
  }
  const bool dual = kind == PermKind::LEX_DUAL || kind == PermKind::COLEX_DUAL || kind == PermKind::POS_DUAL;
  if (dual) {
    for (auto& r : base) r = n - r + 1;
  }
  return base;
}

std::vector<sym_t> rotation_bwt(std::span<const sym_t> s) {
  const pos_t n = s.size();
  std::vector<std::vector<sym_t>> rots;
  rots.reserve(n);
  for (pos_t i = 0; i < n; ++i) {
    std::vector<sym_t> rot(s.begin() + i, s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + i);
    rots.push_back(std::move(rot));
  }
  std::sort(rots.begin(), rots.end());
  std::vector<sym_t> out(n);
  for (pos_t i = 0; i < n; ++i) out[i] = rots[i].back();
  return out;
}

std::vector<pos_t> naive_locate_all(std::span<const sym_t> text, std::span<const sym_t> pattern) {
  std::vector<pos_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  for (pos_t i = 0; i + pattern.size() <= text.size(); ++i) {
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + i)) out.push_back(i + 1);
  }
  return out;
}

std::vector<pos_t> brute_lpf(std::span<const sym_t> s, PermKind kind) {
  const pos_t n = s.size();
  std::vector<pos_t> pi = naive_perm_ranks(s, kind);
  std::vector<pos_t> lpf(n, 0);
  for (pos_t i = 1; i <= n; ++i) {
    if (pi[i - 1] == 1) continue;
    pos_t best = 0;
    for (pos_t j = 1; j <= n; ++j) {
      if (pi[j - 1] >= pi[i - 1]) continue;
      pos_t k = 0;
      while (i + k <= n && j + k <= n && s[i + k - 1] == s[j + k - 1]) ++k;
      best = std::max(best, k);
    }
    lpf[i - 1] = best;
  }
  return lpf;
}

std::vector<pos_t> brute_pda(std::span<const sym_t> s, PermKind kind) {
  std::vector<pos_t> lpf = brute_lpf(s, kind);
  std::set<pos_t> ends;
  for (pos_t i = 1; i <= lpf.size(); ++i) ends.insert(i + lpf[i - 1]);
  std::vector<pos_t> out(ends.begin(), ends.end());
  std::sort(out.begin(), out.end(), [&](pos_t a, pos_t b) { return prefix_colex_less(s, a, b); });
  return out;
}

std::vector<std::vector<sym_t>> brute_right_maximal(std::span<const sym_t> s) {
  const pos_t n = s.size();
  std::set<std::vector<sym_t>> result;
  std::set<std::vector<sym_t>> suffixes;
  for (pos_t i = 1; i <= n; ++i) suffixes.insert({s.begin() + (i - 1), s.end()});

  std::map<std::vector<sym_t>, std::set<sym_t>> extensions;
  extensions[{}] = std::set<sym_t>(s.begin(), s.end());
  for (pos_t i = 1; i <= n; ++i) {
    for (pos_t j = i; j <= n; ++j) {
      std::vector<sym_t> sub(s.begin() + (i - 1), s.begin() + j);
      auto& ext = extensions[sub];
      if (j < n) ext.insert(s[j]);
    }
  }
  for (auto& [sub, ext] : extensions) {
    const bool is_suffix = sub.empty() ? true : suffixes.count(sub) > 0;
    if (ext.size() >= 2 || is_suffix) result.insert(sub);
  }
  return {result.begin(), result.end()};
}

pos_t naive_run_count(std::span<const sym_t> seq) {
  pos_t runs = seq.empty() ? 0 : 1;
  for (std::size_t i = 1; i < seq.size(); ++i) runs += seq[i] != seq[i - 1];
  return runs;
}

}  // namespace stpd::oracle
