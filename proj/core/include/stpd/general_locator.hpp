#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "stpd/colex_search.hpp"
#include "stpd/lpf.hpp"
#include "stpd/rmq.hpp"
#include "stpd/text_oracle.hpp"
#include "stpd/types.hpp"

namespace stpd {

// Overlapping bidirectional parse induced by LPF_pi: a one-character type-1
// phrase at every position with LPF_pi = 0, and a type-2 phrase
// T[i, i+LPF_pi[i]-1] at every irreducible position with LPF_pi[i] > 0.
struct PhraseCover {
  struct Type2 {
    pos_t start = 0;
    pos_t len = 0;       // LPF_pi[start]
    pos_t source = 0;    // leftmost j with pi(j) < pi(start) matching the phrase
    pos_t red_len = 0;   // length of the reducible prefix, in [1, len]
    friend bool operator==(const Type2&, const Type2&) = default;
  };

  std::vector<pos_t> type1;
  std::vector<Type2> type2;
};

// Axis-parallel rectangle [x_lo,x_hi] x [y_lo,y_hi] labeled with the phrase
// start; x_lo = y_lo = source and x_hi <= y_hi by construction.
struct Rectangle {
  pos_t x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  pos_t label = 0;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

PhraseCover build_cover(const Text& t, PermKind kind);

std::vector<Rectangle> make_rectangles(const PhraseCover& cover);

// Locating machinery for any order-preserving priority: the primary
// occurrence (the unique one with LPF_pi[start] < |P|, minimizing pi) is found
// by suffix searches over PDA_pi with a range-minimum structure over pi(PDA);
// secondary occurrences follow by stabbing the phrase rectangles from a stack
// of discovered occurrences.
class GeneralLocator {
 public:
  struct Config {
    std::uint64_t fingerprint_seed = kDefaultFingerprintSeed;
  };

  GeneralLocator();
  ~GeneralLocator();
  GeneralLocator(GeneralLocator&&) noexcept;
  GeneralLocator& operator=(GeneralLocator&&) noexcept;

  static GeneralLocator build(Text text, PermKind kind) {
    return build(std::move(text), kind, Config{});
  }
  static GeneralLocator build(Text text, PermKind kind, Config cfg);
  static GeneralLocator build(Text text, PermKind kind, std::vector<pos_t> pda, Config cfg);

  // All rectangles containing the point (x, y); 1 <= x <= y <= n.
  std::vector<Rectangle> stab(pos_t x, pos_t y) const;

  std::optional<pos_t> locate_primary(std::span<const sym_t> pattern) const;
  std::vector<pos_t> locate_all(std::span<const sym_t> pattern) const;

  PermKind kind() const { return kind_; }
  const Text& text() const { return oracle_.text(); }
  const std::vector<pos_t>& pda() const { return pda_; }
  const PhraseCover& cover() const { return cover_; }
  const std::vector<Rectangle>& rectangles() const { return rects_; }

 private:
  struct IntervalNode;

  TextOracle oracle_;
  PermKind kind_ = PermKind::POS;
  std::vector<pos_t> pi_;  // materialized ranks, pi_[i-1] = pi(i)
  pos_t pi_inv1_ = 0;      // position with rank 1
  std::vector<pos_t> pda_;
  SparseTableRmq rmq_;     // over pi(pda)
  PhraseCover cover_;
  std::vector<Rectangle> rects_;
  std::unique_ptr<IntervalNode> tree_;
};

}  // namespace stpd
