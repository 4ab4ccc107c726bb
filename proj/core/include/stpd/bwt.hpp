#pragma once

#include <span>
#include <vector>

#include "stpd/suffix_sort.hpp"
#include "stpd/text.hpp"

namespace stpd {

// bwt[i] = T[SA[i]-1] with T[0] := T[n].
std::vector<sym_t> bwt(const Text& t, const IndexPermutation& sa);
std::vector<sym_t> bwt(const Text& t);

// cobwt[i] = T[PA[i]+1] with T[n+1] := T[1].
std::vector<sym_t> cobwt(const Text& t, const IndexPermutation& pa);
std::vector<sym_t> cobwt(const Text& t);

// Number of maximal equal-letter runs; throws std::invalid_argument on an
// empty sequence.
pos_t count_runs(std::span<const sym_t> seq);

}  // namespace stpd
