#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle/naive.hpp"
#include "stpd/lpf.hpp"
#include "stpd/stpos.hpp"
#include "support.hpp"

using namespace stpd;
using stpd::testing::example_text;
using stpd::testing::random_text;
using stpd::testing::syms_of;

TEST_CASE("leftmost and rightmost occurrences") {
  const Text t = example_text();
  CHECK(leftmost_occurrence(t, syms_of("CG")) == 3);
  CHECK(rightmost_occurrence(t, syms_of("CG")) == 7);
  CHECK(leftmost_occurrence(t, syms_of("AA")) == 1);
  CHECK(rightmost_occurrence(t, syms_of("AA")) == 9);
  CHECK(leftmost_occurrence(t, syms_of("$")) == 11);
  CHECK(rightmost_occurrence(t, syms_of("$")) == 11);
  const GeneralLocator pos = GeneralLocator::build(t, PermKind::POS);
  CHECK(leftmost_occurrence(pos, syms_of("CG")) == 3);
  CHECK_THROWS_AS(rightmost_occurrence(pos, syms_of("CG")), std::invalid_argument);
}

TEST_CASE("worst-case family strings") {
  const pos_t spec1[] = {3, 1};
  CHECK(worst_case_string(spec1) == std::vector<sym_t>{0, 0, 0, 1, 0, 2});
  CHECK(pda_size(worst_case_string(spec1), PermKind::POS) == 3);

  const pos_t spec2[] = {1};
  CHECK(worst_case_string(spec2) == std::vector<sym_t>{0, 1});
  CHECK(pda_size(worst_case_string(spec2), PermKind::POS) == 2);

  const pos_t spec3[] = {64};
  CHECK(worst_case_string(spec3).size() == 65);

  const pos_t bad1[] = {3, 3};
  CHECK_THROWS_AS(worst_case_string(bad1), std::invalid_argument);
  const pos_t bad2[] = {2, 0};
  CHECK_THROWS_AS(worst_case_string(bad2), std::invalid_argument);
  CHECK_THROWS_AS(worst_case_string({}), std::invalid_argument);
}

TEST_CASE("escape counting") {
  CHECK(ppm_escape_count(stpd::testing::text_of("aa$").symbols()) == 2);
  const std::vector<sym_t> single{'a'};
  CHECK(ppm_escape_count(single) == 1);
  const Text t = example_text();
  CHECK(ppm_escape_count(t.symbols()) >= pda_size(t.symbols(), PermKind::POS));
  CHECK(pda_size(t.symbols(), PermKind::POS) == 5);
}

TEST_CASE("path count is bounded by the escape count") {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 60; ++it) {
    const auto s = stpd::testing::random_string(rng, 1 + rng() % 64, 2 + rng() % 3);
    CHECK(pda_size(s, PermKind::POS) <= ppm_escape_count(s));
  }
}

TEST_CASE("worst-case family has exactly p plus one paths") {
  std::mt19937_64 rng(72);
  for (int it = 0; it < 40; ++it) {
    const pos_t p = 1 + rng() % 16;
    std::vector<pos_t> xs;
    {
      std::set<pos_t> pick;
      while (pick.size() < p) pick.insert(1 + rng() % 64);
      xs.assign(pick.rbegin(), pick.rend());  // strictly decreasing
    }
    CHECK(pda_size(worst_case_string(xs), PermKind::POS) == p + 1);
    std::reverse(xs.begin(), xs.end());  // strictly increasing: the dual family
    CHECK(pda_size(worst_case_string(xs), PermKind::POS_DUAL) == p + 1);
  }
}

TEST_CASE("delegated extremes agree with naive scans") {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 8; ++it) {
    const Text t = random_text(rng, 2 + rng() % 40, 2 + rng() % 3);
    const GeneralLocator pos = GeneralLocator::build(t, PermKind::POS);
    const GeneralLocator pos_dual = GeneralLocator::build(t, PermKind::POS_DUAL);
    for (const auto& pattern : stpd::testing::distinct_substrings(t.symbols())) {
      const auto occs = oracle::naive_locate_all(t.symbols(), pattern);
      CHECK(leftmost_occurrence(pos, pattern) == occs.front());
      CHECK(rightmost_occurrence(pos_dual, pattern) == occs.back());
    }
  }
}
