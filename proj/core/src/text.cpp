#include "stpd/text.hpp"

#include <algorithm>
#include <stdexcept>

namespace stpd {

Text Text::from_bytes(std::span<const std::uint8_t> bytes, bool raw_terminator) {
  if (bytes.empty()) throw std::invalid_argument("empty input");
  std::vector<sym_t> syms;
  syms.reserve(bytes.size() + 1);
  for (std::uint8_t b : bytes) syms.push_back(b);
  if (!raw_terminator) {
    for (sym_t s : syms) {
      if (s == 0) {
        throw std::invalid_argument("input contains byte 0; pass raw_terminator if it ends with a unique minimal byte");
      }
    }
    syms.push_back(0);
  }
  return from_symbols(std::move(syms));
}

Text Text::from_symbols(std::vector<sym_t> syms) {
  if (syms.empty()) throw std::invalid_argument("empty text");
  const sym_t last = syms.back();
  sym_t max = 0;
  for (std::size_t k = 0; k + 1 < syms.size(); ++k) {
    if (syms[k] <= last) throw std::invalid_argument("terminator is not the unique minimum symbol");
    max = std::max(max, syms[k]);
  }
  max = std::max(max, last);
  Text t;
  t.syms_ = std::move(syms);
  t.sigma_ = max + 1;
  return t;
}

}  // namespace stpd
