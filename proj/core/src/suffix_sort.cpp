#include "stpd/suffix_sort.hpp"

#include <algorithm>
#include <numeric>

namespace stpd {

namespace {

// Prefix doubling. Ranks past the end of the string compare smaller than any
// real rank, which makes a proper prefix sort before its extensions.
std::vector<pos_t> suffix_order(std::span<const sym_t> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint64_t> rank(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = s[i];

  for (std::size_t k = 1;; k *= 2) {
    auto key = [&](std::size_t i) {
      std::uint64_t second = (i + k < n) ? rank[i + k] + 1 : 0;
      return std::pair<std::uint64_t, std::uint64_t>(rank[i], second);
    };
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    tmp[idx[0]] = 0;
    bool all_distinct = true;
    for (std::size_t i = 1; i < n; ++i) {
      const bool equal = key(idx[i]) == key(idx[i - 1]);
      tmp[idx[i]] = tmp[idx[i - 1]] + (equal ? 0 : 1);
      all_distinct &= !equal;
    }
    rank.swap(tmp);
    if (all_distinct || k >= n) break;
  }

  std::vector<pos_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[rank[i]] = i + 1;
  return order;
}

IndexPermutation from_order(std::vector<pos_t> order) {
  IndexPermutation p;
  p.positions = std::move(order);
  p.ranks.resize(p.positions.size());
  for (std::size_t r = 0; r < p.positions.size(); ++r) p.ranks[p.positions[r] - 1] = r + 1;
  return p;
}

}  // namespace

IndexPermutation sort_suffixes(std::span<const sym_t> s) {
  return from_order(suffix_order(s));
}

IndexPermutation sort_prefixes(std::span<const sym_t> s) {
  const std::size_t n = s.size();
  std::vector<sym_t> rev(s.rbegin(), s.rend());
  std::vector<pos_t> rev_order = suffix_order(rev);
  // Suffix rev[k, n] is the reverse of prefix s[1, n-k+1].
  std::vector<pos_t> order(n);
  for (std::size_t r = 0; r < n; ++r) order[r] = n - rev_order[r] + 1;
  return from_order(std::move(order));
}

IndexPermutation build_sa(const Text& t) { return sort_suffixes(t.symbols()); }

IndexPermutation build_pa(const Text& t) { return sort_prefixes(t.symbols()); }

}  // namespace stpd
