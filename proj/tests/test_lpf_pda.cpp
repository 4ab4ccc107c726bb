#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracle/naive.hpp"
#include "stpd/bwt.hpp"
#include "stpd/compress.hpp"
#include "stpd/lce.hpp"
#include "stpd/lpf.hpp"
#include "support.hpp"

using namespace stpd;
using stpd::testing::example_text;
using stpd::testing::random_text;
using stpd::testing::text_of;

TEST_CASE("longest previous factors of the running example") {
  const Text t = example_text();
  CHECK(build_lpf(t, PermKind::LEX).values ==
        std::vector<pos_t>{2, 1, 4, 3, 2, 1, 0, 0, 1, 0, 0});
  CHECK(build_lpf(t, PermKind::COLEX).values ==
        std::vector<pos_t>{0, 1, 0, 0, 4, 3, 2, 1, 2, 1, 0});
  CHECK(build_lpf(t, PermKind::POS).values == oracle::brute_lpf(t.symbols(), PermKind::POS));
  CHECK(build_lpf(t, PermKind::POS).values ==
        std::vector<pos_t>{0, 1, 0, 0, 4, 3, 2, 1, 2, 1, 0});
}

TEST_CASE("irreducible positions") {
  const Text t = example_text();
  CHECK(irreducible_positions(build_lpf(t, PermKind::POS)) == std::vector<pos_t>{1, 2, 4, 5, 9});

  const LpfArray lex = build_lpf(t, PermKind::LEX);
  std::set<pos_t> starts;
  for (pos_t i : irreducible_positions(lex)) starts.insert(i + lex.at(i));
  CHECK(starts == std::set<pos_t>{3, 7, 8, 10, 11});

  const LpfArray zeros{std::vector<pos_t>{0, 0, 0}, PermKind::POS};
  CHECK(irreducible_positions(zeros) == std::vector<pos_t>{1, 2, 3});
}

TEST_CASE("path decomposition arrays of the running example") {
  const Text t = example_text();
  CHECK(build_pda(t, PermKind::LEX).positions == std::vector<pos_t>{11, 10, 3, 7, 8});
  CHECK(build_pda(t, PermKind::COLEX).positions == std::vector<pos_t>{11, 1, 9, 3, 4});
  CHECK(build_pda(t, PermKind::LEX_DUAL).positions == std::vector<pos_t>{11, 2, 9, 3, 4});
}

TEST_CASE("compressed form of the running example under the position priority") {
  const Text t = example_text();
  const CompressedText ct = compress(t, PermKind::POS);
  REQUIRE(ct.quads.size() == 5);
  CHECK(ct.quads[0] == CompressedText::Quad{1, 0, 1, 'A'});
  CHECK(ct.quads[1] == CompressedText::Quad{2, 1, 1, 'C'});
  CHECK(ct.quads[2] == CompressedText::Quad{4, 0, 1, 'G'});
  CHECK(ct.quads[3] == CompressedText::Quad{5, 4, 3, 'A'});
  CHECK(ct.quads[4] == CompressedText::Quad{9, 2, 1, '$'});

  CHECK(compress(t, PermKind::LEX).quads.size() == 5);
  CHECK(compress(text_of("a$"), PermKind::POS).quads.size() == 2);
}

TEST_CASE("character extraction from the compressed form") {
  const Text t = example_text();
  const CompressedText ct = compress(t, PermKind::POS);
  CHECK(extract_char(ct, 6) == 'G');   // via the copy chain 6 -> 4
  CHECK(extract_char(ct, 9) == 'A');   // stored directly by the quadruple at 5
  CHECK(extract_char(compress(text_of("a$"), PermKind::POS), 1) == 'a');
  CHECK_THROWS_AS(extract_char(ct, 0), std::out_of_range);
  CHECK_THROWS_AS(extract_char(ct, 12), std::out_of_range);
}

TEST_CASE("extraction rejects structurally broken input") {
  CompressedText bad;
  bad.n = 4;
  bad.sigma = 3;
  bad.quads = {{2, 1, 1, 1}};  // position 1 has no covering quadruple
  CHECK_THROWS_AS(extract_char(bad, 1), CorruptionError);

  CompressedText cyc;
  cyc.n = 3;
  cyc.sigma = 2;
  cyc.quads = {{1, 2, 1, 1}};  // self-referential source never terminates
  CHECK_THROWS_AS(extract_char(cyc, 2), CorruptionError);
}

TEST_CASE("factor values are almost nondecreasing for every kind") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 40; ++it) {
    const Text t = random_text(rng, 2 + rng() % 63, 2 + rng() % 3);
    for (int k = 0; k < kPermKindCount; ++k) {
      const LpfArray lpf = build_lpf(t, static_cast<PermKind>(k));
      for (pos_t i = 2; i <= lpf.size(); ++i) {
        CHECK(lpf.at(i) + 1 >= lpf.at(i - 1));
      }
    }
  }
}

TEST_CASE("path array sizes respect the run bounds") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 40; ++it) {
    const Text t = random_text(rng, 2 + rng() % 127, 2 + rng() % 3);
    const pos_t r = count_runs(bwt(t));
    const pos_t rbar = count_runs(cobwt(t));
    CHECK(build_pda(t, PermKind::LEX).size() <= r);
    CHECK(build_pda(t, PermKind::LEX_DUAL).size() <= r);
    CHECK(build_pda(t, PermKind::COLEX).size() <= rbar);
    CHECK(build_pda(t, PermKind::COLEX_DUAL).size() <= rbar);
  }
}

TEST_CASE("preceding symbols differ at irreducible positions") {
  // For irreducible i > 1 and any j > 1 with pi(j-1) < pi(i-1) and
  // rlce(i,j) = LPF[i], the symbols before i and j differ.
  std::mt19937_64 rng(23);
  for (int it = 0; it < 25; ++it) {
    const Text t = random_text(rng, 2 + rng() % 40, 2 + rng() % 3);
    const auto s = t.symbols();
    for (int k = 0; k < kPermKindCount; ++k) {
      const PermKind kind = static_cast<PermKind>(k);
      const auto pi = oracle::naive_perm_ranks(s, kind);
      const LpfArray lpf = build_lpf(t, kind);
      for (pos_t i : irreducible_positions(lpf)) {
        if (i == 1) continue;
        for (pos_t j = 2; j <= t.size(); ++j) {
          if (pi[j - 2] < pi[i - 2] && rlce_scan(s, i, j) == lpf.at(i)) {
            CHECK(t.at(i - 1) != t.at(j - 1));
          }
        }
      }
    }
  }
}

TEST_CASE("sampled prefixes cover ordered right extensions") {
  // For right-maximal alpha and extensions a, b with pi(alpha a) < pi(alpha b),
  // some sampled prefix ends with alpha b.
  std::mt19937_64 rng(24);
  for (int it = 0; it < 12; ++it) {
    const Text t = random_text(rng, 2 + rng() % 24, 2 + rng() % 3);
    const auto s = t.symbols();
    const pos_t n = t.size();
    for (int k = 0; k < kPermKindCount; ++k) {
      const PermKind kind = static_cast<PermKind>(k);
      const auto pi = oracle::naive_perm_ranks(s, kind);
      const auto pda = oracle::brute_pda(s, kind);
      for (const auto& alpha : oracle::brute_right_maximal(s)) {
        // pi(alpha.c) = min pi(i-1) over prefixes T[1,i] suffixed by alpha.c;
        // i = 1 contributes nothing since pi(0) is undefined.
        std::map<sym_t, pos_t> ext_rank;
        const pos_t al = alpha.size();
        for (pos_t i = std::max<pos_t>(al + 1, 2); i <= n; ++i) {
          if (!std::equal(alpha.begin(), alpha.end(), s.begin() + (i - 1 - al))) continue;
          const sym_t c = s[i - 1];
          const pos_t rank = pi[i - 2];
          auto [it2, ins] = ext_rank.try_emplace(c, rank);
          if (!ins) it2->second = std::min(it2->second, rank);
        }
        for (const auto& [a, ra] : ext_rank) {
          for (const auto& [b, rb] : ext_rank) {
            if (ra >= rb) continue;
            bool covered = false;
            for (pos_t end : pda) {
              if (end < al + 1) continue;
              if (s[end - 1] == b &&
                  std::equal(alpha.begin(), alpha.end(), s.begin() + (end - 1 - al))) {
                covered = true;
                break;
              }
            }
            CHECK(covered);
          }
        }
      }
    }
  }
}

TEST_CASE("extraction inverts compression on random texts") {
  std::mt19937_64 rng(25);
  for (int it = 0; it < 20; ++it) {
    const Text t = random_text(rng, 2 + rng() % 63, 2 + rng() % 3);
    for (int k = 0; k < kPermKindCount; ++k) {
      const PermKind kind = static_cast<PermKind>(k);
      const CompressedText ct = compress(t, kind);
      for (pos_t j = 1; j <= t.size(); ++j) CHECK(extract_char(ct, j) == t.at(j));

      // Source validity: smaller priority and a full-length match.
      const auto pi = oracle::naive_perm_ranks(t.symbols(), kind);
      CHECK(ct.quads.size() == build_pda(t, kind).size());
      for (const auto& q : ct.quads) {
        if (q.len == 0) continue;
        CHECK(pi[q.source - 1] < pi[q.start - 1]);
        CHECK(rlce_scan(t.symbols(), q.source, q.start) >= q.len);
      }
    }
  }
}

TEST_CASE("construction agrees with the literal quadratic evaluation") {
  std::mt19937_64 rng(26);
  for (int it = 0; it < 30; ++it) {
    const Text t = random_text(rng, 2 + rng() % 63, 2 + rng() % 3);
    for (int k = 0; k < kPermKindCount; ++k) {
      const PermKind kind = static_cast<PermKind>(k);
      CHECK(build_lpf(t, kind).values == oracle::brute_lpf(t.symbols(), kind));
      CHECK(build_pda(t, kind).positions == oracle::brute_pda(t.symbols(), kind));
    }
  }
}

TEST_CASE("path array contents equal the irreducible path starts") {
  std::mt19937_64 rng(27);
  for (int it = 0; it < 20; ++it) {
    const Text t = random_text(rng, 2 + rng() % 63, 2 + rng() % 3);
    for (int k = 0; k < kPermKindCount; ++k) {
      const PermKind kind = static_cast<PermKind>(k);
      const LpfArray lpf = build_lpf(t, kind);
      std::set<pos_t> expected;
      for (pos_t i : irreducible_positions(lpf)) expected.insert(i + lpf.at(i));
      const PdaArray pda = build_pda_from_lpf(t, lpf);
      std::set<pos_t> got(pda.positions.begin(), pda.positions.end());
      CHECK(got == expected);
      CHECK(pda.positions.size() == got.size());
    }
  }
}
