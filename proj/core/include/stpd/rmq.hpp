#pragma once

#include <bit>
#include <cassert>
#include <span>
#include <vector>

#include "stpd/types.hpp"

namespace stpd {

// Sparse-table range minimum/maximum over a fixed array; query returns the
// 1-based index of the extreme value (leftmost on ties).
class SparseTableRmq {
 public:
  enum class Mode { Min, Max };

  SparseTableRmq() = default;

  SparseTableRmq(std::span<const pos_t> values, Mode mode) : mode_(mode), values_(values.begin(), values.end()) {
    const std::size_t n = values_.size();
    if (n == 0) return;
    const std::size_t levels = std::bit_width(n);
    table_.assign(levels, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
    for (std::size_t l = 1; l < levels; ++l) {
      const std::size_t half = std::size_t(1) << (l - 1);
      for (std::size_t i = 0; i + (std::size_t(1) << l) <= n; ++i) {
        table_[l][i] = pick(table_[l - 1][i], table_[l - 1][i + half]);
      }
    }
  }

  // Inclusive 1-based range [b, e].
  pos_t query(pos_t b, pos_t e) const {
    assert(b >= 1 && b <= e && e <= values_.size());
    const std::size_t len = e - b + 1;
    const std::size_t l = std::bit_width(len) - 1;
    const std::size_t i = b - 1;
    const std::size_t j = e - (std::size_t(1) << l);
    return pick(table_[l][i], table_[l][static_cast<std::size_t>(j)]) + 1;
  }

  pos_t size() const { return values_.size(); }

 private:
  std::uint32_t pick(std::uint32_t a, std::uint32_t b) const {
    if (mode_ == Mode::Min) return values_[b] < values_[a] ? b : a;
    return values_[b] > values_[a] ? b : a;
  }

  Mode mode_ = Mode::Min;
  std::vector<pos_t> values_;
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace stpd
