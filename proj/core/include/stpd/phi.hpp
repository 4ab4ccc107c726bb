#pragma once

#include <span>
#include <vector>

#include "stpd/suffix_sort.hpp"
#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

enum class PhiVariant : std::uint8_t { SA = 0, PA = 1 };

struct PhiStep {
  pos_t value = 0;
  bool wrapped = false;  // the queried position had the last rank; value is A[1]
  friend bool operator==(const PhiStep&, const PhiStep&) = default;
};

// The successor function over SA or PA order: phi_next(i) = A[inv(i)+1],
// wrapping to A[1] when inv(i) = n. Stored as run-length samples at the text
// positions where the copy relation phi(i +- 1) = phi(i) -+ 1 breaks (one per
// run of the corresponding BWT variant, plus a sentinel), answered by
// predecessor/successor binary search in O(log r).
class PhiStructure {
 public:
  PhiStructure() = default;

  static PhiStructure build(const Text& t, PhiVariant variant);
  static PhiStructure build(const Text& t, PhiVariant variant, const IndexPermutation& perm,
                            std::span<const sym_t> run_seq);

  static PhiStructure from_parts(PhiVariant variant, pos_t n, std::vector<pos_t> keys,
                                 std::vector<pos_t> targets, std::vector<std::uint8_t> wraps);

  // Throws std::out_of_range for i outside [1,n].
  PhiStep next(pos_t i) const;

  PhiVariant variant() const { return variant_; }
  pos_t size() const { return n_; }
  pos_t sample_count() const { return keys_.size(); }

  const std::vector<pos_t>& keys() const { return keys_; }
  const std::vector<pos_t>& targets() const { return targets_; }
  const std::vector<std::uint8_t>& wraps() const { return wraps_; }

 private:
  PhiVariant variant_ = PhiVariant::SA;
  pos_t n_ = 0;
  std::vector<pos_t> keys_;            // sampled positions, ascending
  std::vector<pos_t> targets_;         // phi_next at each key
  std::vector<std::uint8_t> wraps_;    // wrap flag per key
};

}  // namespace stpd
