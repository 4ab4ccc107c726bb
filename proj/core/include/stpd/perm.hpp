#pragma once

#include <span>
#include <vector>

#include "stpd/suffix_sort.hpp"
#include "stpd/types.hpp"

namespace stpd {

// pi(i) for one position; throws std::out_of_range for i outside [1,n].
// LEX kinds read sa, COLEX kinds read pa, POS kinds read neither.
pos_t perm_eval(PermKind kind, const IndexPermutation& sa, const IndexPermutation& pa, pos_t i);

// Materializes the whole rank array of pi: result[i-1] = pi(i).
std::vector<pos_t> perm_ranks(PermKind kind, const IndexPermutation& sa, const IndexPermutation& pa);

// Brute-force test of the order-preserving property: for all i,j in [1,n-1],
// pi(i) < pi(j) and T[i,i+1] = T[j,j+1] imply pi(i+1) < pi(j+1). Throws
// std::invalid_argument if ranks is not a permutation of [1,n].
bool check_order_preserving(std::span<const pos_t> ranks, std::span<const sym_t> text);

}  // namespace stpd
