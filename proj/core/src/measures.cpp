#include "stpd/measures.hpp"

#include <sstream>

#include "stpd/bwt.hpp"
#include "stpd/lpf.hpp"

namespace stpd {

MeasureRow compute_measures(const Text& t) {
  MeasureRow row;
  row.n = t.size();
  row.stlex_minus = pda_size(t.symbols(), PermKind::LEX);
  row.stcolex_minus = pda_size(t.symbols(), PermKind::COLEX);
  row.stpos_minus = pda_size(t.symbols(), PermKind::POS);
  row.r = count_runs(bwt(t));
  row.rbar = count_runs(cobwt(t));
  return row;
}

std::string measures_tsv_header() { return "n\tstlex-\tstcolex-\tstpos-\tr\trbar"; }

std::string measures_tsv_row(const MeasureRow& row) {
  std::ostringstream out;
  out << row.n << '\t' << row.stlex_minus << '\t' << row.stcolex_minus << '\t' << row.stpos_minus
      << '\t' << row.r << '\t' << row.rbar;
  return out.str();
}

std::string measures_summary(const MeasureRow& row) {
  std::ostringstream out;
  out << "n=" << row.n << " r=" << row.r << " rbar=" << row.rbar << " stlex-=" << row.stlex_minus
      << " stcolex-=" << row.stcolex_minus << " stpos-=" << row.stpos_minus;
  return out.str();
}

}  // namespace stpd
