#pragma once

#include <string>

#include "stpd/text.hpp"
#include "stpd/types.hpp"

namespace stpd {

// Repetitiveness measures of one text: the path decomposition array sizes for
// the lex, colex and position priorities, and the run counts of both BWT
// variants.
struct MeasureRow {
  pos_t n = 0;
  pos_t stlex_minus = 0;
  pos_t stcolex_minus = 0;
  pos_t stpos_minus = 0;
  pos_t r = 0;
  pos_t rbar = 0;
};

MeasureRow compute_measures(const Text& t);

std::string measures_tsv_header();
std::string measures_tsv_row(const MeasureRow& row);

// One-line summary in "k=v" form, printed by index construction.
std::string measures_summary(const MeasureRow& row);

}  // namespace stpd
