#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

inline constexpr std::uint64_t kDefaultFingerprintSeed = 0x53545044u;  // arbitrary fixed default

// Random access, substring extraction, longest common extensions and
// Karp-Rabin fingerprinting over a text. The fingerprint uses a modular
// polynomial hash with the 61-bit Mersenne prime modulus and a base drawn
// from a seeded RNG, so equal substrings always hash equally and runs are
// reproducible. LCE queries are plain symbol scans; the interface admits
// faster oracles behind the same contract.
class TextOracle {
 public:
  TextOracle() = default;
  explicit TextOracle(Text text, std::uint64_t seed = kDefaultFingerprintSeed);

  const Text& text() const { return text_; }
  pos_t size() const { return text_.size(); }
  std::uint64_t seed() const { return seed_; }

  sym_t access(pos_t i) const;                        // T[i]
  std::vector<sym_t> extract(pos_t i, pos_t j) const; // T[i,j]
  pos_t rlce(pos_t i, pos_t j) const;                 // lcp(T[i,n], T[j,n])
  pos_t llce(pos_t i, pos_t j) const;                 // lcs(T[1,i], T[1,j])
  std::uint64_t fingerprint(pos_t i, pos_t j) const;  // hash of T[i,j], O(1)

 private:
  Text text_;
  std::uint64_t seed_ = 0;
  std::uint64_t base_ = 0;
  std::vector<std::uint64_t> prefix_;  // prefix_[k] = hash of T[1,k]
  std::vector<std::uint64_t> power_;   // base^k mod p
};

}  // namespace stpd
