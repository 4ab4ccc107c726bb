#include "stpd/phi.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "stpd/bwt.hpp"

namespace stpd {

PhiStructure PhiStructure::build(const Text& t, PhiVariant variant) {
  if (variant == PhiVariant::SA) {
    IndexPermutation sa = build_sa(t);
    std::vector<sym_t> seq = bwt(t, sa);
    return build(t, variant, sa, seq);
  }
  IndexPermutation pa = build_pa(t);
  std::vector<sym_t> seq = cobwt(t, pa);
  return build(t, variant, pa, seq);
}

PhiStructure PhiStructure::build(const Text& t, PhiVariant variant, const IndexPermutation& perm,
                                 std::span<const sym_t> run_seq) {
  const pos_t n = t.size();
  // Positions whose rank row ends an equal-letter run of the BWT variant.
  std::vector<pos_t> run_end_pos;
  for (pos_t row = 1; row <= n; ++row) {
    if (row == n || run_seq[row - 1] != run_seq[row]) run_end_pos.push_back(perm.pos(row));
  }

  // The copy relation breaks exactly next to a run-end position: sample
  // k-1 (SA variant, ascending chains) or k+1 (PA variant, descending
  // chains), plus the chain boundary n resp. 1.
  std::vector<pos_t> keys;
  if (variant == PhiVariant::SA) {
    for (pos_t k : run_end_pos) {
      if (k >= 2) keys.push_back(k - 1);
    }
    keys.push_back(n);
  } else {
    for (pos_t k : run_end_pos) {
      if (k <= n - 1) keys.push_back(k + 1);
    }
    keys.push_back(1);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  PhiStructure ps;
  ps.variant_ = variant;
  ps.n_ = n;
  ps.keys_ = std::move(keys);
  ps.targets_.reserve(ps.keys_.size());
  ps.wraps_.reserve(ps.keys_.size());
  for (pos_t k : ps.keys_) {
    const pos_t row = perm.rank(k);
    if (row == n) {
      ps.targets_.push_back(perm.pos(1));
      ps.wraps_.push_back(1);
    } else {
      ps.targets_.push_back(perm.pos(row + 1));
      ps.wraps_.push_back(0);
    }
  }
  return ps;
}

PhiStructure PhiStructure::from_parts(PhiVariant variant, pos_t n, std::vector<pos_t> keys,
                                      std::vector<pos_t> targets, std::vector<std::uint8_t> wraps) {
  if (keys.size() != targets.size() || keys.size() != wraps.size() || keys.empty()) {
    throw CorruptionError("PhiStructure: inconsistent sample arrays");
  }
  if (!std::is_sorted(keys.begin(), keys.end())) throw CorruptionError("PhiStructure: keys not sorted");
  PhiStructure ps;
  ps.variant_ = variant;
  ps.n_ = n;
  ps.keys_ = std::move(keys);
  ps.targets_ = std::move(targets);
  ps.wraps_ = std::move(wraps);
  return ps;
}

PhiStep PhiStructure::next(pos_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("PhiStructure::next");
  if (variant_ == PhiVariant::SA) {
    // Successor sample k >= i; phi(i) = phi(k) - (k - i).
    auto it = std::lower_bound(keys_.begin(), keys_.end(), i);
    const std::size_t idx = it - keys_.begin();
    const pos_t k = keys_[idx];
    if (wraps_[idx]) {
      assert(k == i);  // the position left of a wrap sample is itself sampled
      return {targets_[idx], true};
    }
    return {targets_[idx] - (k - i), false};
  }
  // Predecessor sample k <= i; phi(i) = phi(k) + (i - k).
  auto it = std::upper_bound(keys_.begin(), keys_.end(), i);
  const std::size_t idx = (it - keys_.begin()) - 1;
  const pos_t k = keys_[idx];
  if (wraps_[idx]) {
    assert(k == i);
    return {targets_[idx], true};
  }
  return {targets_[idx] + (i - k), false};
}

}  // namespace stpd
