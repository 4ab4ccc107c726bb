#pragma once

// Shared helpers for the test suites.

#include <algorithm>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd::testing {

// The running example used across the suites: AACGCGCGAA$ with $ < A < C < G.
inline Text example_text() {
  const std::string s = "AACGCGCGAA$";
  return Text::from_bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()},
                          /*raw_terminator=*/true);
}

inline std::vector<sym_t> syms_of(const std::string& s) {
  std::vector<sym_t> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<sym_t>(static_cast<unsigned char>(c)));
  return out;
}

inline Text text_of(const std::string& s) {
  return Text::from_bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()},
                          /*raw_terminator=*/true);
}

// Random text of total length n (terminator included), body symbols 1..sigma-1.
inline Text random_text(std::mt19937_64& rng, pos_t n, sym_t sigma) {
  std::uniform_int_distribution<sym_t> dist(1, sigma - 1);
  std::vector<sym_t> syms(n);
  for (pos_t i = 0; i + 1 < n; ++i) syms[i] = dist(rng);
  syms[n - 1] = 0;
  return Text::from_symbols(std::move(syms));
}

// Random terminator-free string over symbols 0..sigma-1.
inline std::vector<sym_t> random_string(std::mt19937_64& rng, pos_t n, sym_t sigma) {
  std::uniform_int_distribution<sym_t> dist(0, sigma - 1);
  std::vector<sym_t> s(n);
  for (auto& c : s) c = dist(rng);
  return s;
}

// Highly repetitive text: a short random root repeated up to length n, with
// point mutations at the given rate, then terminated.
inline Text repetitive_text(std::mt19937_64& rng, pos_t n, sym_t sigma, pos_t root_len,
                            double mutation_rate) {
  std::uniform_int_distribution<sym_t> dist(1, sigma - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<sym_t> root(root_len);
  for (auto& c : root) c = dist(rng);
  std::vector<sym_t> syms(n);
  for (pos_t i = 0; i + 1 < n; ++i) {
    syms[i] = root[i % root_len];
    if (coin(rng) < mutation_rate) syms[i] = dist(rng);
  }
  syms[n - 1] = 0;
  return Text::from_symbols(std::move(syms));
}

// All distinct substrings of the text, as symbol vectors.
inline std::vector<std::vector<sym_t>> distinct_substrings(std::span<const sym_t> s) {
  std::vector<std::vector<sym_t>> subs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j <= s.size(); ++j) {
      subs.emplace_back(s.begin() + i, s.begin() + j);
    }
  }
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  return subs;
}

}  // namespace stpd::testing
