#include "stpd/text_oracle.hpp"

#include <random>
#include <stdexcept>

#include "stpd/lce.hpp"

namespace stpd {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t(1) << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kMod) s -= kMod;
  return s;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= kMod) s -= kMod;
  return s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return mod_add(a, kMod - b); }

}  // namespace

TextOracle::TextOracle(Text text, std::uint64_t seed) : text_(std::move(text)), seed_(seed) {
  std::mt19937_64 rng(seed_);
  std::uniform_int_distribution<std::uint64_t> dist(1u << 16, kMod - 2);
  base_ = dist(rng);
  const pos_t n = text_.size();
  prefix_.resize(n + 1);
  power_.resize(n + 1);
  prefix_[0] = 0;
  power_[0] = 1;
  for (pos_t k = 1; k <= n; ++k) {
    prefix_[k] = mod_add(mod_mul(prefix_[k - 1], base_), text_.at(k) + 1);
    power_[k] = mod_mul(power_[k - 1], base_);
  }
}

sym_t TextOracle::access(pos_t i) const {
  if (i < 1 || i > size()) throw std::out_of_range("TextOracle::access");
  return text_.at(i);
}

std::vector<sym_t> TextOracle::extract(pos_t i, pos_t j) const {
  if (i < 1 || j > size() || i > j) throw std::out_of_range("TextOracle::extract");
  auto s = text_.symbols();
  return std::vector<sym_t>(s.begin() + (i - 1), s.begin() + j);
}

pos_t TextOracle::rlce(pos_t i, pos_t j) const {
  if (i < 1 || i > size() || j < 1 || j > size()) throw std::out_of_range("TextOracle::rlce");
  return rlce_scan(text_.symbols(), i, j);
}

pos_t TextOracle::llce(pos_t i, pos_t j) const {
  if (i < 1 || i > size() || j < 1 || j > size()) throw std::out_of_range("TextOracle::llce");
  return llce_scan(text_.symbols(), i, j);
}

std::uint64_t TextOracle::fingerprint(pos_t i, pos_t j) const {
  if (i < 1 || j > size() || i > j) throw std::out_of_range("TextOracle::fingerprint");
  return mod_sub(prefix_[j], mod_mul(prefix_[i - 1], power_[j - i + 1]));
}

}  // namespace stpd
