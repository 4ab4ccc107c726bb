#include "stpd/general_locator.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "stpd/lce.hpp"

namespace stpd {

namespace {

std::vector<pos_t> ranks_for_text(const Text& t, PermKind kind) {
  switch (kind) {
    case PermKind::LEX:
    case PermKind::LEX_DUAL: {
      IndexPermutation sa = build_sa(t);
      return perm_ranks(kind, sa, sa);
    }
    case PermKind::COLEX:
    case PermKind::COLEX_DUAL: {
      IndexPermutation pa = build_pa(t);
      return perm_ranks(kind, pa, pa);
    }
    default: {
      const pos_t n = t.size();
      std::vector<pos_t> r(n);
      for (pos_t i = 1; i <= n; ++i) r[i - 1] = (kind == PermKind::POS) ? i : n - i + 1;
      return r;
    }
  }
}

}  // namespace

PhraseCover build_cover(const Text& t, PermKind kind) {
  auto s = t.symbols();
  const pos_t n = t.size();
  std::vector<pos_t> pi = ranks_for_text(t, kind);
  LpfArray lpf = build_lpf(t, kind);

  PhraseCover cover;
  for (pos_t i : irreducible_positions(lpf)) {
    const pos_t len = lpf.at(i);
    if (len == 0) continue;
    // Leftmost source with a smaller priority and a full-length match.
    pos_t source = 0;
    for (pos_t j = 1; j <= n; ++j) {
      if (pi[j - 1] < pi[i - 1] && rlce_scan(s, j, i) >= len) {
        source = j;
        break;
      }
    }
    assert(source != 0);
    pos_t red = 1;
    while (red < len && i + red <= n && lpf.at(i + red) + 1 == lpf.at(i + red - 1)) ++red;
    cover.type2.push_back({i, len, source, red});
  }
  for (pos_t i = 1; i <= n; ++i) {
    if (lpf.at(i) == 0) cover.type1.push_back(i);
  }
  return cover;
}

std::vector<Rectangle> make_rectangles(const PhraseCover& cover) {
  std::vector<Rectangle> rects;
  rects.reserve(cover.type2.size());
  for (const auto& p : cover.type2) {
    rects.push_back({p.source, p.source + p.red_len - 1, p.source, p.source + p.len - 1, p.start});
  }
  return rects;
}

// Static centered interval tree over the rectangle x-intervals. Each node
// keeps its crossing rectangles sorted by y_hi descending, so a stab scan
// stops as soon as y_hi < y; x containment is then checked per candidate.
struct GeneralLocator::IntervalNode {
  pos_t center = 0;
  std::vector<Rectangle> by_yhi;
  std::unique_ptr<IntervalNode> left;
  std::unique_ptr<IntervalNode> right;

  static std::unique_ptr<IntervalNode> build(std::vector<Rectangle> rects) {
    if (rects.empty()) return nullptr;
    std::vector<pos_t> xs;
    xs.reserve(rects.size() * 2);
    for (const auto& r : rects) {
      xs.push_back(r.x_lo);
      xs.push_back(r.x_hi);
    }
    std::nth_element(xs.begin(), xs.begin() + xs.size() / 2, xs.end());
    const pos_t center = xs[xs.size() / 2];

    auto node = std::make_unique<IntervalNode>();
    node->center = center;
    std::vector<Rectangle> lo, hi;
    for (auto& r : rects) {
      if (r.x_hi < center) lo.push_back(r);
      else if (r.x_lo > center) hi.push_back(r);
      else node->by_yhi.push_back(r);
    }
    std::sort(node->by_yhi.begin(), node->by_yhi.end(),
              [](const Rectangle& a, const Rectangle& b) { return a.y_hi > b.y_hi; });
    node->left = build(std::move(lo));
    node->right = build(std::move(hi));
    return node;
  }

  void stab(pos_t x, pos_t y, std::vector<Rectangle>& out) const {
    for (const auto& r : by_yhi) {
      if (r.y_hi < y) break;
      if (r.x_lo <= x && x <= r.x_hi && r.y_lo <= y) out.push_back(r);
    }
    if (x < center && left) left->stab(x, y, out);
    if (x > center && right) right->stab(x, y, out);
  }
};

GeneralLocator::GeneralLocator() = default;
GeneralLocator::~GeneralLocator() = default;
GeneralLocator::GeneralLocator(GeneralLocator&&) noexcept = default;
GeneralLocator& GeneralLocator::operator=(GeneralLocator&&) noexcept = default;

GeneralLocator GeneralLocator::build(Text text, PermKind kind, Config cfg) {
  PdaArray pda = build_pda(text, kind);
  return build(std::move(text), kind, std::move(pda.positions), cfg);
}

GeneralLocator GeneralLocator::build(Text text, PermKind kind, std::vector<pos_t> pda, Config cfg) {
  GeneralLocator g;
  g.kind_ = kind;
  g.pi_ = ranks_for_text(text, kind);
  for (pos_t i = 1; i <= text.size(); ++i) {
    if (g.pi_[i - 1] == 1) g.pi_inv1_ = i;
  }
  g.pda_ = std::move(pda);
  std::vector<pos_t> pda_ranks(g.pda_.size());
  for (std::size_t k = 0; k < g.pda_.size(); ++k) pda_ranks[k] = g.pi_[g.pda_[k] - 1];
  g.rmq_ = SparseTableRmq(pda_ranks, SparseTableRmq::Mode::Min);
  g.cover_ = build_cover(text, kind);
  g.rects_ = make_rectangles(g.cover_);
  if (g.rects_.size() > g.pda_.size()) throw std::logic_error("more rectangles than sampled prefixes");
  g.tree_ = IntervalNode::build(g.rects_);
  g.oracle_ = TextOracle(std::move(text), cfg.fingerprint_seed);
  return g;
}

std::vector<Rectangle> GeneralLocator::stab(pos_t x, pos_t y) const {
  if (x < 1 || x > y || y > oracle_.size()) throw std::out_of_range("stab: point out of range");
  std::vector<Rectangle> out;
  if (tree_) tree_->stab(x, y, out);
  return out;
}

std::optional<pos_t> GeneralLocator::locate_primary(std::span<const sym_t> pattern) const {
  if (pattern.empty()) throw std::invalid_argument("locate_primary: empty pattern");
  const Text& text = oracle_.text();
  const pos_t n = text.size();
  const pos_t m = pattern.size();

  pos_t i = pi_inv1_;
  pos_t j = 1;
  while (j <= m) {
    if (i > n || text.at(i) != pattern[j - 1]) {
      auto range = suffix_search(text.symbols(), pda_, i - j + 1, i - 1, pattern[j - 1]);
      if (!range) return std::nullopt;
      i = pda_[rmq_.query(range->b, range->e) - 1];
    }
    ++i;
    ++j;
  }
  assert(i >= m + 1);
  const pos_t start = i - m;
  for (pos_t k = 0; k < m; ++k) {
    if (text.at(start + k) != pattern[k]) return std::nullopt;
  }
  return start;
}

std::vector<pos_t> GeneralLocator::locate_all(std::span<const sym_t> pattern) const {
  auto primary = locate_primary(pattern);
  if (!primary) return {};
  const pos_t m = pattern.size();

  std::vector<pos_t> out;
  std::vector<pos_t> stack{*primary};
  while (!stack.empty()) {
    const pos_t x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (const auto& r : stab(x, x + m - 1)) {
      stack.push_back(r.label + (x - r.x_lo));
    }
  }
  return out;
}

}  // namespace stpd
