#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

// A pair of mutually inverse bijections on [1,n]: ranks[i-1] is the rank of
// position i (ISA / IPA) and positions[r-1] is the position of rank r
// (SA / PA).
struct IndexPermutation {
  std::vector<pos_t> ranks;
  std::vector<pos_t> positions;

  pos_t size() const { return ranks.size(); }

  pos_t rank(pos_t i) const {
    assert(i >= 1 && i <= ranks.size());
    return ranks[i - 1];
  }
  pos_t pos(pos_t r) const {
    assert(r >= 1 && r <= positions.size());
    return positions[r - 1];
  }
};

// Sorts all suffixes of an arbitrary string by prefix doubling; a suffix that
// is a proper prefix of another sorts first. Works without a terminator.
IndexPermutation sort_suffixes(std::span<const sym_t> s);

// Sorts all prefixes of an arbitrary string colexicographically (a proper
// suffix sorts first). positions[r-1] is the end position of the r-th
// smallest prefix.
IndexPermutation sort_prefixes(std::span<const sym_t> s);

// forward = ISA, inverse = SA.
IndexPermutation build_sa(const Text& t);

// forward = IPA, inverse = PA.
IndexPermutation build_pa(const Text& t);

}  // namespace stpd
