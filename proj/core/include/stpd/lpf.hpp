#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "stpd/perm.hpp"
#include "stpd/suffix_sort.hpp"
#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

// Generalized longest-previous-factor values for an order-preserving pi:
// values[i-1] = 0 if pi(i) = 1, else max over pi(j) < pi(i) of rlce(j, i).
struct LpfArray {
  std::vector<pos_t> values;
  PermKind kind = PermKind::LEX;

  pos_t size() const { return values.size(); }
  pos_t at(pos_t i) const {
    assert(i >= 1 && i <= values.size());
    return values[i - 1];
  }
};

// Distinct path-start positions {i + LPF_pi[i]}, sorted colexicographically
// by the prefixes they end.
struct PdaArray {
  std::vector<pos_t> positions;
  PermKind kind = PermKind::LEX;

  pos_t size() const { return positions.size(); }
  pos_t at(pos_t r) const {
    assert(r >= 1 && r <= positions.size());
    return positions[r - 1];
  }
};

// Core construction over an arbitrary string: suffixes are inserted in
// increasing pi order into a set ordered by lexicographic suffix rank; the
// longest previous factor is realized at one of the two lexicographic
// neighbors among the already-inserted suffixes.
std::vector<pos_t> lpf_values(std::span<const sym_t> s, std::span<const pos_t> pi_ranks,
                              std::span<const pos_t> lex_ranks);

LpfArray build_lpf(const Text& t, PermKind kind);
LpfArray build_lpf(std::span<const sym_t> s, PermKind kind);  // terminator-free strings allowed

// Ascending positions i with i = 1 or LPF[i] != LPF[i-1] - 1.
std::vector<pos_t> irreducible_positions(const LpfArray& lpf);

PdaArray build_pda(const Text& t, PermKind kind);
PdaArray build_pda_from_lpf(const Text& t, const LpfArray& lpf);

// |PDA_pi| of an arbitrary string: the number of distinct path starts
// {i + LPF_pi[i]} that are prefix end positions (<= n). On a text this equals
// the number of irreducible LPF_pi positions; on a terminator-free string, a
// suffix fully matching an earlier-priority occurrence contributes the empty
// path start n+1, which ends no prefix and is not a PDA member.
pos_t pda_size(std::span<const sym_t> s, PermKind kind);

}  // namespace stpd
