#include "stpd/stlex_tree.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "stpd/bwt.hpp"
#include "stpd/colex_search.hpp"
#include "stpd/lce.hpp"
#include "stpd/lpf.hpp"

namespace stpd {

StLexTree StLexTree::build(Text text, Config cfg) {
  IndexPermutation sa = build_sa(text);
  std::vector<sym_t> bwt_seq = bwt(text, sa);

  LpfArray lpf_minus{lpf_values(text.symbols(), sa.ranks, sa.ranks), PermKind::LEX};
  std::vector<pos_t> dual = perm_ranks(PermKind::LEX_DUAL, sa, sa);
  LpfArray lpf_plus{lpf_values(text.symbols(), dual, sa.ranks), PermKind::LEX_DUAL};

  const pos_t n = text.size();
  std::set<pos_t> starts;
  for (pos_t i = 1; i <= n; ++i) {
    starts.insert(i + lpf_minus.at(i));
    starts.insert(i + lpf_plus.at(i));
  }
  starts.insert(n + 1);

  std::vector<pos_t> stlex;
  stlex.reserve(starts.size());
  for (pos_t v : starts) stlex.push_back(v - 1);
  std::sort(stlex.begin(), stlex.end(), [&](pos_t a, pos_t b) {
    return colex_prefix_less(text.symbols(), a, b);
  });

  const pos_t r = count_runs(bwt_seq);
  if (stlex.size() > 2 * r + 1) throw std::logic_error("stlex exceeds 2r+1 entries");

  StLexTree t;
  t.oracle_ = TextOracle(std::move(text), cfg.fingerprint_seed);
  t.sa_ = std::move(sa);
  t.phi_sa_ = PhiStructure::build(t.oracle_.text(), PhiVariant::SA, t.sa_, bwt_seq);
  t.stlex_ = std::move(stlex);
  t.finish_build();
  return t;
}

StLexTree StLexTree::from_parts(Text text, std::vector<pos_t> stlex, pos_t istar, PhiStructure phi_sa,
                                Config cfg) {
  StLexTree t;
  t.sa_ = build_sa(text);
  t.oracle_ = TextOracle(std::move(text), cfg.fingerprint_seed);
  t.phi_sa_ = std::move(phi_sa);
  t.stlex_ = std::move(stlex);
  t.finish_build();
  if (istar != t.istar_) throw CorruptionError("stlex: istar does not match the sampled array");
  return t;
}

void StLexTree::finish_build() {
  const Text& text = oracle_.text();
  const pos_t n = text.size();
  const sym_t hash_sym = text.sigma();  // '#', larger than every alphabet symbol
  const pos_t k = stlex_.size();

  istar_ = 0;
  L_.assign(k, 0);
  for (pos_t row = 1; row <= k; ++row) {
    const pos_t v = stlex_[row - 1];
    if (v > n) throw CorruptionError("stlex: entry out of range");
    if (v == n) {
      L_[row - 1] = hash_sym;
      istar_ = row;
    } else {
      L_[row - 1] = text.at(v + 1);
    }
  }
  if (istar_ != 1 && istar_ != 2) throw CorruptionError("stlex: full-text entry not at index 1 or 2");

  F_ = L_;
  std::sort(F_.begin(), F_.end());

  l_rows_.assign(hash_sym + 1, {});
  for (pos_t row = 1; row <= k; ++row) l_rows_[L_[row - 1]].push_back(row);
  f_first_.assign(hash_sym + 2, 0);
  {
    pos_t acc = 1;
    for (sym_t c = 0; c <= hash_sym; ++c) {
      f_first_[c] = acc;
      acc += l_rows_[c].size();
    }
    f_first_[hash_sym + 1] = acc;
  }

  // Rank of the suffix that follows each sampled prefix, in F row order.
  // Ranking by ISA[v+1] instead of ISA[v] handles the empty-prefix entry
  // (v = 0) and is equivalent under the order-preserving property. The row
  // of the full-text entry ('#') is never queried; it gets a sentinel.
  std::vector<pos_t> rank_min(k), rank_max(k);
  for (pos_t j = 1; j <= k; ++j) {
    const pos_t v = stlex_[fl(j) - 1];
    if (v == n) {
      rank_min[j - 1] = std::numeric_limits<pos_t>::max();
      rank_max[j - 1] = 0;
    } else {
      const pos_t rank = sa_.rank(v + 1);
      rank_min[j - 1] = rank;
      rank_max[j - 1] = rank;
    }
  }
  rmq_min_ = SparseTableRmq(rank_min, SparseTableRmq::Mode::Min);
  rmq_max_ = SparseTableRmq(rank_max, SparseTableRmq::Mode::Max);
}

pos_t StLexTree::fl(pos_t j) const {
  const sym_t c = F_[j - 1];
  return l_rows_[c][j - f_first_[c]];
}

std::optional<std::pair<pos_t, pos_t>> StLexTree::l_range(sym_t a, pos_t b, pos_t e) const {
  if (a >= l_rows_.size()) return std::nullopt;
  const auto& rows = l_rows_[a];
  auto lo = std::lower_bound(rows.begin(), rows.end(), b);
  if (lo == rows.end() || *lo > e) return std::nullopt;
  auto hi = std::upper_bound(lo, rows.end(), e);
  return std::make_pair(static_cast<pos_t>(lo - rows.begin()), static_cast<pos_t>(hi - rows.begin() - 1));
}

NodeRep StLexTree::leaf_rep(pos_t i) const {
  const pos_t n = oracle_.size();
  return NodeRep{istar_, istar_, i, i, n - i + 1};
}

NodeRep StLexTree::root() const {
  const pos_t n = oracle_.size();
  return NodeRep{1, static_cast<pos_t>(stlex_.size()), sa_.pos(1), sa_.pos(n), 0};
}

NodeRep StLexTree::child(const NodeRep& u, sym_t a) const {
  if (u.is_null() || u.b > u.e || u.e > stlex_.size()) {
    throw std::invalid_argument("child: malformed node representation");
  }
  const sym_t hash_sym = oracle_.text().sigma();
  if (a >= hash_sym) return {};
  auto arange = l_range(a, u.b, u.e);
  if (!arange) return {};

  // Smallest / largest ordinary outgoing labels decide cases (i)-(iii).
  std::optional<sym_t> amin = first(u);
  std::optional<sym_t> amax;
  for (sym_t c = hash_sym; c-- > 0;) {
    if (l_range(c, u.b, u.e)) {
      amax = c;
      break;
    }
  }

  pos_t cand_min = 0, cand_max = 0;
  const auto [lo_idx, hi_idx] = *arange;
  const pos_t fb = f_first_[a] + lo_idx;
  const pos_t fe = f_first_[a] + hi_idx;
  if (amin && a == *amin) {
    cand_min = u.i_min;
  } else {
    const pos_t j = rmq_min_.query(fb, fe);
    cand_min = stlex_[fl(j) - 1] - u.depth + 1;
  }
  if (amax && a == *amax) {
    cand_max = u.i_max;
  } else {
    const pos_t j = rmq_max_.query(fb, fe);
    cand_max = stlex_[fl(j) - 1] - u.depth + 1;
  }

  if (cand_min == cand_max) return leaf_rep(cand_min);

  const pos_t depth = oracle_.rlce(cand_min, cand_max);
  auto range = suffix_search(oracle_.text().symbols(), stlex_, cand_min, cand_min + depth - 1,
                             std::nullopt);
  if (!range) throw CorruptionError("child: explicit node has no sampled prefix");
  return NodeRep{range->b, range->e, cand_min, cand_max, depth};
}

std::optional<sym_t> StLexTree::first(const NodeRep& u) const {
  const sym_t hash_sym = oracle_.text().sigma();
  for (sym_t c = 0; c < hash_sym; ++c) {
    if (l_range(c, u.b, u.e)) return c;
  }
  return std::nullopt;
}

std::optional<sym_t> StLexTree::succ(const NodeRep& u, sym_t a) const {
  const sym_t hash_sym = oracle_.text().sigma();
  for (sym_t c = a + 1; c < hash_sym; ++c) {
    if (l_range(c, u.b, u.e)) return c;
  }
  return std::nullopt;
}

std::pair<pos_t, pos_t> StLexTree::label(const NodeRep& u, const NodeRep& v) const {
  return {v.i_min + u.depth, v.i_min + v.depth - 1};
}

std::pair<NodeRep, NodeRep> StLexTree::leaves(const NodeRep& u) const {
  return {leaf_rep(u.i_min), leaf_rep(u.i_max)};
}

std::optional<NodeRep> StLexTree::next(const NodeRep& leaf) const {
  assert(isleaf(leaf));
  const PhiStep step = phi_sa_.next(leaf.i_min);
  if (step.wrapped) return std::nullopt;
  return leaf_rep(step.value);
}

bool StLexTree::ancestor(const NodeRep& u, const NodeRep& v) const {
  if (u.depth > v.depth) return false;
  if (u.i_min == v.i_min) return true;
  return oracle_.rlce(u.i_min, v.i_min) >= u.depth;
}

pos_t StLexTree::locate_leaf(const NodeRep& u) {
  if (!isleaf(u)) throw std::logic_error("locate_leaf: not a leaf");
  return u.i_min;
}

std::vector<pos_t> StLexTree::locate_all(std::span<const sym_t> pattern) const {
  if (pattern.empty()) throw std::invalid_argument("locate_all: empty pattern");
  const Text& text = oracle_.text();
  const pos_t n = text.size();
  const pos_t m = pattern.size();

  NodeRep u = root();
  pos_t matched = 0;
  while (matched < m) {
    const NodeRep v = child(u, pattern[matched]);
    if (v.is_null()) return {};
    const auto [lb, le] = label(u, v);
    const pos_t take = std::min<pos_t>(le - lb + 1, m - matched);
    for (pos_t k = 0; k < take; ++k) {
      if (lb + k > n || text.at(lb + k) != pattern[matched + k]) return {};
    }
    matched += take;
    u = v;
  }

  std::vector<pos_t> out;
  auto [left, right] = leaves(u);
  NodeRep cur = left;
  while (true) {
    out.push_back(locate_leaf(cur));
    if (cur.i_min == right.i_min) break;
    auto nxt = next(cur);
    if (!nxt) throw CorruptionError("locate_all: leaf walk ran off the array");
    cur = *nxt;
  }
  return out;
}

}  // namespace stpd
