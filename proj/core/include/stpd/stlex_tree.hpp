#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stpd/phi.hpp"
#include "stpd/rmq.hpp"
#include "stpd/suffix_sort.hpp"
#include "stpd/text_oracle.hpp"
#include "stpd/types.hpp"

namespace stpd {

// Constant-size representation of an explicit suffix tree node locus(alpha):
// stlex[b,e] is the colexicographic range of alpha among the sampled prefix
// ends, T[i_min,n] / T[i_max,n] are the lexicographically smallest / largest
// suffixes prefixed by alpha, and depth = |alpha|. The null node is all-zero.
struct NodeRep {
  pos_t b = 0;
  pos_t e = 0;
  pos_t i_min = 0;
  pos_t i_max = 0;
  pos_t depth = 0;

  bool is_null() const { return b == 0; }
  friend bool operator==(const NodeRep&, const NodeRep&) = default;
};

// Compressed suffix tree over the sampled prefix-end array
// stlex = colex-sorted { i-1 : i in PDA_lex U PDA_lex_dual U {n+1} },
// with the successor-symbol sequence L, its sorted copy F, LF/FL mapping via
// per-symbol row lists, and range-min/max structures over the suffix ranks
// of the sampled positions. All navigation operations work on NodeRep values.
class StLexTree {
 public:
  struct Config {
    std::uint64_t fingerprint_seed = kDefaultFingerprintSeed;
  };

  StLexTree() = default;

  static StLexTree build(Text text) { return build(std::move(text), Config{}); }
  static StLexTree build(Text text, Config cfg);

  // Rebuilds the derived structures from the serialized core parts.
  static StLexTree from_parts(Text text, std::vector<pos_t> stlex, pos_t istar, PhiStructure phi_sa) {
    return from_parts(std::move(text), std::move(stlex), istar, std::move(phi_sa), Config{});
  }
  static StLexTree from_parts(Text text, std::vector<pos_t> stlex, pos_t istar, PhiStructure phi_sa,
                              Config cfg);

  NodeRep root() const;
  NodeRep child(const NodeRep& u, sym_t a) const;
  std::optional<sym_t> first(const NodeRep& u) const;
  std::optional<sym_t> succ(const NodeRep& u, sym_t a) const;
  std::pair<pos_t, pos_t> label(const NodeRep& u, const NodeRep& v) const;
  std::pair<NodeRep, NodeRep> leaves(const NodeRep& u) const;  // (lleaf, rleaf)
  std::optional<NodeRep> next(const NodeRep& leaf) const;      // nullopt on the lex-last leaf
  bool ancestor(const NodeRep& u, const NodeRep& v) const;

  static pos_t sdepth(const NodeRep& u) { return u.depth; }
  static bool isleaf(const NodeRep& u) { return !u.is_null() && u.i_min == u.i_max; }
  static pos_t locate_leaf(const NodeRep& u);

  // All occurrence start positions of the pattern (unordered). Descends via
  // child + edge-label comparison, then walks the leaf range via next().
  std::vector<pos_t> locate_all(std::span<const sym_t> pattern) const;

  const Text& text() const { return oracle_.text(); }
  const TextOracle& oracle() const { return oracle_; }
  const PhiStructure& phi() const { return phi_sa_; }
  const std::vector<pos_t>& stlex() const { return stlex_; }
  pos_t istar() const { return istar_; }
  std::span<const sym_t> l_sequence() const { return L_; }
  std::span<const sym_t> f_sequence() const { return F_; }

 private:
  void finish_build();  // derives L, F, row lists, RMQs from text + stlex
  NodeRep leaf_rep(pos_t i) const;
  pos_t fl(pos_t j) const;  // F row -> L row
  std::optional<std::pair<pos_t, pos_t>> l_range(sym_t a, pos_t b, pos_t e) const;

  TextOracle oracle_;
  IndexPermutation sa_;
  PhiStructure phi_sa_;
  std::vector<pos_t> stlex_;
  pos_t istar_ = 0;
  std::vector<sym_t> L_;
  std::vector<sym_t> F_;
  std::vector<std::vector<pos_t>> l_rows_;  // per symbol, ascending L rows
  std::vector<pos_t> f_first_;              // per symbol, first F row
  SparseTableRmq rmq_min_;
  SparseTableRmq rmq_max_;
};

}  // namespace stpd
