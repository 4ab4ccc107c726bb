#pragma once

#include <random>
#include <vector>

#include "stpd/text.hpp"

namespace stpd::bench {

// Repetitive input: a random root repeated with sparse point mutations, as in
// collections of related sequences.
inline Text make_input(pos_t n, sym_t sigma = 5, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<sym_t> dist(1, sigma - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<sym_t> root(256);
  for (auto& c : root) c = dist(rng);
  std::vector<sym_t> syms(n);
  for (pos_t i = 0; i + 1 < n; ++i) {
    syms[i] = root[i % root.size()];
    if (coin(rng) < 0.02) syms[i] = dist(rng);
  }
  syms[n - 1] = 0;
  return Text::from_symbols(std::move(syms));
}

inline std::vector<sym_t> sample_pattern(const Text& t, pos_t m, std::mt19937_64& rng) {
  const pos_t at = 1 + rng() % (t.size() - m);
  auto s = t.symbols();
  return {s.begin() + (at - 1), s.begin() + (at - 1 + m)};
}

}  // namespace stpd::bench
