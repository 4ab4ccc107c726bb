#include "stpd/stcolex_index.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>

#include "stpd/bwt.hpp"
#include "stpd/lpf.hpp"

namespace stpd {

StColexIndex StColexIndex::build(Text text, Config cfg) {
  IndexPermutation pa = build_pa(text);
  std::vector<sym_t> cobwt_seq = cobwt(text, pa);

  LpfArray lpf = build_lpf(text, PermKind::COLEX);
  PdaArray pda = build_pda_from_lpf(text, lpf);

  const pos_t rbar = count_runs(cobwt_seq);
  if (pda.positions.size() > rbar) throw std::logic_error("pda_colex exceeds the run bound");
  for (std::size_t k = 1; k < pda.positions.size(); ++k) {
    if (pa.rank(pda.positions[k - 1]) >= pa.rank(pda.positions[k])) {
      throw std::logic_error("pi(pda_colex) is not strictly increasing");
    }
  }

  StColexIndex idx;
  idx.cfg_ = cfg;
  idx.phi_pa_ = PhiStructure::build(text, PhiVariant::PA, pa, cobwt_seq);
  idx.pda_ = std::move(pda.positions);
  idx.oracle_ = TextOracle(std::move(text), cfg.fingerprint_seed);
  idx.build_kmer_table();
  return idx;
}

StColexIndex StColexIndex::from_parts(Text text, std::vector<pos_t> pda, PhiStructure phi_pa,
                                      Config cfg) {
  StColexIndex idx;
  idx.cfg_ = cfg;
  idx.pda_ = std::move(pda);
  idx.phi_pa_ = std::move(phi_pa);
  idx.oracle_ = TextOracle(std::move(text), cfg.fingerprint_seed);
  idx.build_kmer_table();
  return idx;
}

std::string StColexIndex::pack_key(std::span<const sym_t> s) {
  std::string key(s.size() * sizeof(sym_t), '\0');
  std::memcpy(key.data(), s.data(), key.size());
  return key;
}

void StColexIndex::build_kmer_table() {
  kmer_.clear();
  kmax_eff_ = 0;
  const Text& text = oracle_.text();
  const pos_t n = text.size();

  std::vector<bool> seen_sym(text.sigma(), false);
  pos_t distinct = 0;
  for (pos_t i = 1; i + 1 <= n; ++i) {  // body symbols, terminator excluded
    if (!seen_sym[text.at(i)]) {
      seen_sym[text.at(i)] = true;
      ++distinct;
    }
  }
  if (distinct < 4 || cfg_.kmax_cap == 0) return;

  // Contexts are inserted in colexicographic end order, so the first state
  // recorded for a context is the one minimizing the prefix rank.
  IndexPermutation pa = build_pa(text);

  const std::size_t base_bytes = pda_.size() * sizeof(pos_t) +
                                 phi_pa_.sample_count() * (2 * sizeof(pos_t) + 1) + n;
  const std::size_t budget = base_bytes / 2;
  std::size_t used = 0;

  for (pos_t k = 1; k <= cfg_.kmax_cap; ++k) {
    std::unordered_map<std::string, TableEntry> level;
    std::size_t level_bytes = 0;
    for (pos_t r = 1; r <= n; ++r) {
      const pos_t end = pa.pos(r);
      if (end < k) continue;
      std::string key = pack_key(text.symbols().subspan(end - k, k));
      auto [it, inserted] = level.try_emplace(std::move(key));
      if (inserted) {
        it->second.state = end + 1;
        auto range = suffix_search(text.symbols(), pda_, end - k + 1, end, std::nullopt);
        it->second.range = range ? *range : RowRange{};
        level_bytes += k * sizeof(sym_t) + sizeof(TableEntry);
      }
    }
    if (used + level_bytes > budget) break;
    used += level_bytes;
    kmer_.merge(level);
    kmax_eff_ = k;
  }
}

std::optional<RowRange> StColexIndex::sufsearch(pos_t i, pos_t j, sym_t c) const {
  return suffix_search(oracle_.text().symbols(), pda_, i, j, c);
}

std::optional<pos_t> StColexIndex::locate_primary(std::span<const sym_t> pattern) const {
  if (pattern.empty()) throw std::invalid_argument("locate_primary: empty pattern");
  const Text& text = oracle_.text();
  const pos_t n = text.size();
  const pos_t m = pattern.size();

  pos_t i = n;  // the terminated prefix is colexicographically smallest: pi^-1(1) = n
  pos_t j = 1;
  if (kmax_eff_ > 0 && m > kmax_eff_) {
    auto it = kmer_.find(pack_key(pattern.subspan(0, kmax_eff_)));
    if (it == kmer_.end()) return std::nullopt;  // the k-length prefix does not occur
    i = it->second.state;
    j = kmax_eff_ + 1;
  }

  while (j <= m) {
    if (i > n || text.at(i) != pattern[j - 1]) {
      auto range = sufsearch(i - j + 1, i - 1, pattern[j - 1]);
      if (!range) return std::nullopt;
      i = pda_[range->b - 1];  // pi(pda) is increasing: argmin is the first row
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

std::vector<pos_t> StColexIndex::locate_all(std::span<const sym_t> pattern, LocateStats* stats) const {
  auto primary = locate_primary(pattern);
  if (stats) *stats = {};
  if (!primary) return {};

  const Text& text = oracle_.text();
  const pos_t m = pattern.size();
  auto is_occurrence_end = [&](pos_t end) {
    if (end < m) return false;
    for (pos_t k = 0; k < m; ++k) {
      if (text.at(end - m + 1 + k) != pattern[k]) return false;
    }
    return true;
  };

  const pos_t block = (m + cfg_.block_words - 1) / cfg_.block_words;  // Q = ceil(m/B)
  std::vector<pos_t> out;
  out.push_back(*primary);

  pos_t phi_calls = 0;
  pos_t cur = *primary + m - 1;  // prefix-array entry of the primary occurrence
  std::vector<pos_t> buf;
  buf.reserve(block);
  bool done = false;
  while (!done) {
    buf.clear();
    bool wrapped = false;
    for (pos_t k = 0; k < block; ++k) {
      const PhiStep step = phi_pa_.next(cur);
      ++phi_calls;
      if (step.wrapped) {
        wrapped = true;
        break;
      }
      buf.push_back(step.value);
      cur = step.value;
    }
    if (buf.empty()) break;
    if (!wrapped && is_occurrence_end(buf.back())) {
      for (pos_t end : buf) out.push_back(end - m + 1);
      continue;
    }
    // The range boundary lies inside this block: membership is monotone in
    // row order, so binary search for the first non-member.
    auto it = std::partition_point(buf.begin(), buf.end(),
                                   [&](pos_t end) { return is_occurrence_end(end); });
    for (auto p = buf.begin(); p != it; ++p) out.push_back(*p - m + 1);
    done = true;
  }

  if (stats) {
    stats->phi_calls = phi_calls;
    stats->occurrences = out.size();
  }
  return out;
}

}  // namespace stpd
