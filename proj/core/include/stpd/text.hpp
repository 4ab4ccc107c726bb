#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "stpd/types.hpp"

namespace stpd {

// A terminated string over an integer alphabet, addressed 1-based.
// Invariants: n >= 1, the last symbol is the unique minimum symbol of the
// text (the terminator), and every symbol is < sigma.
class Text {
 public:
  Text() = default;

  // Builds a text from raw bytes. Unless raw_terminator is set, the input
  // may not contain byte 0 and a 0 terminator is appended. With
  // raw_terminator, the input must already end with its unique minimum byte.
  static Text from_bytes(std::span<const std::uint8_t> bytes, bool raw_terminator = false);

  // Takes ownership of a symbol sequence that already satisfies the Text
  // invariants; throws std::invalid_argument otherwise.
  static Text from_symbols(std::vector<sym_t> syms);

  pos_t size() const { return syms_.size(); }
  sym_t sigma() const { return sigma_; }
  sym_t terminator() const { return syms_.back(); }

  sym_t at(pos_t i) const {
    assert(i >= 1 && i <= syms_.size());
    return syms_[i - 1];
  }

  std::span<const sym_t> symbols() const { return syms_; }

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<sym_t> syms_;
  sym_t sigma_ = 0;
};

}  // namespace stpd
