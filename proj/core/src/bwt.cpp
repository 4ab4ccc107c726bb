#include "stpd/bwt.hpp"

#include <stdexcept>

namespace stpd {

std::vector<sym_t> bwt(const Text& t, const IndexPermutation& sa) {
  const pos_t n = t.size();
  std::vector<sym_t> out(n);
  for (pos_t r = 1; r <= n; ++r) {
    const pos_t p = sa.pos(r);
    out[r - 1] = (p == 1) ? t.at(n) : t.at(p - 1);
  }
  return out;
}

std::vector<sym_t> bwt(const Text& t) { return bwt(t, build_sa(t)); }

std::vector<sym_t> cobwt(const Text& t, const IndexPermutation& pa) {
  const pos_t n = t.size();
  std::vector<sym_t> out(n);
  for (pos_t r = 1; r <= n; ++r) {
    const pos_t p = pa.pos(r);
    out[r - 1] = (p == n) ? t.at(1) : t.at(p + 1);
  }
  return out;
}

std::vector<sym_t> cobwt(const Text& t) { return cobwt(t, build_pa(t)); }

pos_t count_runs(std::span<const sym_t> seq) {
  if (seq.empty()) throw std::invalid_argument("count_runs: empty sequence");
  pos_t runs = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) runs += seq[i] != seq[i - 1];
  return runs;
}

}  // namespace stpd
