#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "stpd/general_locator.hpp"
#include "stpd/phi.hpp"
#include "stpd/stcolex_index.hpp"
#include "stpd/stlex_tree.hpp"
#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

// On-disk index bundle: magic "STPD1", an endianness tag, a format version,
// the text payload, the six path decomposition arrays, the phi samples of
// both variants, the stlex components and the query configuration. All
// multi-byte integers are 64-bit little-endian. Loading a mismatching magic,
// tag or version throws CorruptionError; re-serializing a loaded archive is
// byte-identical.
struct IndexArchive {
  static constexpr std::uint32_t kVersion = 1;

  Text text;
  std::uint64_t fingerprint_seed = kDefaultFingerprintSeed;
  std::uint64_t block_words = 64;
  std::uint64_t kmax_cap = 12;
  std::array<std::vector<pos_t>, kPermKindCount> pda;  // indexed by PermKind
  PhiStructure phi_sa;
  PhiStructure phi_pa;
  std::vector<pos_t> stlex;
  pos_t istar = 0;

  static IndexArchive build(Text text, std::uint64_t block_words = 64, std::uint64_t kmax_cap = 12,
                            std::uint64_t fingerprint_seed = kDefaultFingerprintSeed);

  void save(std::ostream& out) const;
  static IndexArchive load(std::istream& in);

  // Query engines reconstructed from the stored parts.
  StLexTree make_stlex_tree() const;
  StColexIndex make_stcolex_index() const;
  GeneralLocator make_general_locator(PermKind kind) const;
};

}  // namespace stpd
