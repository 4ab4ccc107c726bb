#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stpd/colex_search.hpp"
#include "stpd/phi.hpp"
#include "stpd/text_oracle.hpp"
#include "stpd/types.hpp"

namespace stpd {

// Pattern-matching index over PDA_colex: binary-search suffix searches on the
// sampled prefix ends locate the colexicographically smallest text prefix
// suffixed by the pattern (the primary occurrence); the remaining occurrences
// are enumerated blockwise through the prefix-array successor function.
class StColexIndex {
 public:
  struct Config {
    pos_t block_words = 64;  // B: prefix-array entries per extracted block unit
    pos_t kmax_cap = 12;     // upper bound for the short-context table
    std::uint64_t fingerprint_seed = kDefaultFingerprintSeed;
  };

  struct LocateStats {
    pos_t phi_calls = 0;
    pos_t occurrences = 0;
  };

  StColexIndex() = default;

  static StColexIndex build(Text text) { return build(std::move(text), Config{}); }
  static StColexIndex build(Text text, Config cfg);
  static StColexIndex from_parts(Text text, std::vector<pos_t> pda, PhiStructure phi_pa) {
    return from_parts(std::move(text), std::move(pda), std::move(phi_pa), Config{});
  }
  static StColexIndex from_parts(Text text, std::vector<pos_t> pda, PhiStructure phi_pa,
                                 Config cfg);

  // Maximal pda row range [b,e] whose prefixes are suffixed by T[i,j]*c;
  // j = i-1 denotes the empty context. nullopt when no sampled prefix matches.
  std::optional<RowRange> sufsearch(pos_t i, pos_t j, sym_t c) const;

  // Start of the occurrence whose end position has the smallest
  // colexicographic prefix rank; nullopt when the pattern does not occur.
  std::optional<pos_t> locate_primary(std::span<const sym_t> pattern) const;

  // All occurrence start positions, each exactly once (unordered).
  std::vector<pos_t> locate_all(std::span<const sym_t> pattern, LocateStats* stats = nullptr) const;

  const Text& text() const { return oracle_.text(); }
  const TextOracle& oracle() const { return oracle_; }
  const std::vector<pos_t>& pda() const { return pda_; }
  const PhiStructure& phi() const { return phi_pa_; }
  pos_t kmax() const { return kmax_eff_; }
  const Config& config() const { return cfg_; }

 private:
  struct TableEntry {
    RowRange range;   // sufsearch range of the context (b = 0 when empty)
    pos_t state = 0;  // search state after matching the context: end + 1
  };

  void build_kmer_table();
  static std::string pack_key(std::span<const sym_t> s);

  TextOracle oracle_;
  std::vector<pos_t> pda_;
  PhiStructure phi_pa_;
  Config cfg_;
  pos_t kmax_eff_ = 0;
  std::unordered_map<std::string, TableEntry> kmer_;
};

}  // namespace stpd
