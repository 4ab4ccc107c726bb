#pragma once

#include <vector>

#include "stpd/lpf.hpp"
#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

// Self-referential compressed form of a text: one quadruple per irreducible
// LPF_pi position i, storing (i, LPF_pi[i], source, T[i + LPF_pi[i]]). For a
// quadruple with len > 0, pi(source) < pi(i) and
// T[source, source+len-1] = T[i, i+len-1].
struct CompressedText {
  struct Quad {
    pos_t start = 0;
    pos_t len = 0;
    pos_t source = 0;
    sym_t next_sym = 0;
    friend bool operator==(const Quad&, const Quad&) = default;
  };

  std::vector<Quad> quads;  // ascending start
  pos_t n = 0;
  sym_t sigma = 0;
  PermKind kind = PermKind::LEX;
};

// The source of each quadruple is the position minimizing pi among the
// rlce maximizers (source = 1 when len = 0).
CompressedText compress(const Text& t, PermKind kind);

// Reconstructs T[j] by following sources until a stored symbol is reached.
// Throws CorruptionError when no quadruple covers a visited position or the
// chain exceeds n steps; std::out_of_range for j outside [1,n].
sym_t extract_char(const CompressedText& ct, pos_t j);

}  // namespace stpd
