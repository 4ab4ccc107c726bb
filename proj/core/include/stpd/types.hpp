#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stpd {

// 1-based text positions and ranks. 0 is reserved for "no position" /
// the empty prefix in colexicographic arrays.
using pos_t = std::uint64_t;

// Integer alphabet symbol. The terminator is the unique minimum symbol
// of a text and usually has value 0.
using sym_t = std::uint32_t;

// A structurally inconsistent serialized or derived structure.
class CorruptionError : public std::runtime_error {
 public:
  explicit CorruptionError(const std::string& what) : std::runtime_error(what) {}
};

// The six order-preserving suffix priorities supported by the library:
// rank of the suffix in lexicographic order (LEX), rank of the prefix in
// colexicographic order (COLEX), the position itself (POS), and their
// duals pi'(i) = n - pi(i) + 1.
enum class PermKind : std::uint8_t {
  LEX = 0,
  LEX_DUAL = 1,
  COLEX = 2,
  COLEX_DUAL = 3,
  POS = 4,
  POS_DUAL = 5,
};

inline constexpr int kPermKindCount = 6;

inline const char* to_string(PermKind k) {
  switch (k) {
    case PermKind::LEX: return "lex";
    case PermKind::LEX_DUAL: return "lex-dual";
    case PermKind::COLEX: return "colex";
    case PermKind::COLEX_DUAL: return "colex-dual";
    case PermKind::POS: return "pos";
    case PermKind::POS_DUAL: return "pos-dual";
  }
  return "?";
}

}  // namespace stpd
