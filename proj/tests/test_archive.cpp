#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracle/naive.hpp"
#include "stpd/archive.hpp"
#include "stpd/measures.hpp"
#include "support.hpp"

using namespace stpd;
using stpd::testing::example_text;
using stpd::testing::random_text;
using stpd::testing::syms_of;

namespace {

std::vector<pos_t> sorted(std::vector<pos_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string save_to_string(const IndexArchive& a) {
  std::ostringstream out;
  a.save(out);
  return out.str();
}

}  // namespace

TEST_CASE("measures of the running example") {
  const MeasureRow row = compute_measures(example_text());
  CHECK(row.n == 11);
  CHECK(row.r == 7);
  CHECK(row.rbar == 7);
  CHECK(row.stlex_minus == 5);
  CHECK(row.stcolex_minus == 5);
  CHECK(row.stpos_minus == 5);
  CHECK(measures_summary(row) == "n=11 r=7 rbar=7 stlex-=5 stcolex-=5 stpos-=5");
  CHECK(measures_tsv_header() == "n\tstlex-\tstcolex-\tstpos-\tr\trbar");
  CHECK(measures_tsv_row(row) == "11\t5\t5\t5\t7\t7");
}

TEST_CASE("archive round trip is byte-identical") {
  const IndexArchive a = IndexArchive::build(example_text());
  const std::string bytes = save_to_string(a);
  std::istringstream in(bytes);
  const IndexArchive b = IndexArchive::load(in);
  CHECK(save_to_string(b) == bytes);
  CHECK(b.text == a.text);
  CHECK(b.stlex == a.stlex);
  CHECK(b.pda == a.pda);
}

TEST_CASE("building twice yields identical bytes") {
  std::mt19937_64 rng(82);
  const Text t = random_text(rng, 200, 4);
  CHECK(save_to_string(IndexArchive::build(t)) == save_to_string(IndexArchive::build(t)));
}

TEST_CASE("format violations are rejected") {
  const IndexArchive a = IndexArchive::build(example_text());
  std::string bytes = save_to_string(a);

  {
    std::string bad = bytes;
    bad[0] = 'X';
    std::istringstream in(bad);
    CHECK_THROWS_AS(IndexArchive::load(in), CorruptionError);
  }
  {
    std::string bad = bytes;
    bad[9] = 9;  // version field
    std::istringstream in(bad);
    CHECK_THROWS_AS(IndexArchive::load(in), CorruptionError);
  }
  {
    std::string truncated = bytes.substr(0, bytes.size() / 2);
    std::istringstream in(truncated);
    CHECK_THROWS_AS(IndexArchive::load(in), CorruptionError);
  }
}

TEST_CASE("engines rebuilt from an archive answer like freshly built ones") {
  std::mt19937_64 rng(81);
  for (int it = 0; it < 6; ++it) {
    const Text t = random_text(rng, 2 + rng() % 96, 2 + rng() % 3);
    const IndexArchive a = IndexArchive::build(t);
    std::istringstream in(save_to_string(a));
    const IndexArchive b = IndexArchive::load(in);

    const StLexTree tree = b.make_stlex_tree();
    const StColexIndex colex = b.make_stcolex_index();
    const GeneralLocator pos = b.make_general_locator(PermKind::POS);
    for (const auto& pattern : stpd::testing::distinct_substrings(t.symbols())) {
      const auto expect = oracle::naive_locate_all(t.symbols(), pattern);
      CHECK(sorted(tree.locate_all(pattern)) == expect);
      CHECK(sorted(colex.locate_all(pattern)) == expect);
      CHECK(sorted(pos.locate_all(pattern)) == expect);
    }
  }
}

TEST_CASE("non-byte alphabets are not serializable") {
  std::vector<sym_t> syms{300, 301, 0};
  IndexArchive a = IndexArchive::build(Text::from_symbols(std::move(syms)));
  std::ostringstream out;
  CHECK_THROWS_AS(a.save(out), std::invalid_argument);
}
