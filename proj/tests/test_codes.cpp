#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "opst/codes.hpp"
#include "opst/rand.hpp"

using namespace opst;

namespace {
std::vector<Letter> L(std::initializer_list<int> xs) {
  return std::vector<Letter>(xs.begin(), xs.end());
}
}  // namespace

TEST_CASE("last code of a worked example") {
  // w = 5 2 6 5 1 4: predecessor of the final 4 is the single 2 at position
  // 1; its successor is the 5 whose rightmost occurrence is position 3.
  const auto w = L({5, 2, 6, 5, 1, 4});
  CHECK(last_code_of<Letter>(w) == CodePair{1, 3});
}

TEST_CASE("last code absent sides") {
  CHECK(last_code_of<Letter>(L({7})) == CodePair{-1, -1});
  // Strictly increasing: nothing at or above the last letter before it.
  CHECK(last_code_of<Letter>(L({1, 2, 3})) == CodePair{1, -1});
  // Strictly decreasing: nothing at or below.
  CHECK(last_code_of<Letter>(L({3, 2, 1})) == CodePair{-1, 1});
  // Constant: both sides hit the rightmost previous position.
  CHECK(last_code_of<Letter>(L({4, 4, 4})) == CodePair{1, 1});
}

TEST_CASE("last code rightmost tie-break") {
  // Two occurrences of the predecessor value: position 3 wins over 0.
  CHECK(last_code_of<Letter>(L({2, 5, 9, 2, 3})) == CodePair{3, 1});
  // Two occurrences of the successor value 5: position 3 wins over 0.
  CHECK(last_code_of<Letter>(L({5, 2, 6, 5, 1, 4})).succ == 3);
}

TEST_CASE("prefix code sequence of a worked example") {
  const auto w = L({4, 2, 5, 5, 1});
  const PrefCode pc = pref_code_of<Letter>(w);
  CHECK(pc.str() == "(-1,-1)(-1,0)(0,-1)(2,2)(-1,1)");
  CHECK(pc.size() == 5);
  CHECK(pc[0] == CodePair{-1, -1});
  CHECK(pc[4] == CodePair{-1, 1});
}

TEST_CASE("rank patterns") {
  CHECK(rank_pattern_of<Letter>(L({4, 2, 5, 5, 1})) == RankSeq{3, 2, 4, 4, 1});
  CHECK(rank_pattern_of<Letter>(L({56, 57, 62, 59, 58})) == RankSeq{1, 2, 5, 4, 3});
  // The same five letters with one prepended or appended change every rank.
  CHECK(rank_pattern_of<Letter>(L({57, 56, 57, 62, 59, 58})) ==
        RankSeq{2, 1, 2, 5, 4, 3});
  CHECK(rank_pattern_of<Letter>(L({58, 63, 64, 68, 67, 66})) ==
        RankSeq{1, 2, 3, 6, 5, 4});
  CHECK(rank_pattern_of<Letter>(L({56, 57, 62, 59, 58, 60})) ==
        RankSeq{1, 2, 6, 4, 3, 5});
  CHECK(rank_pattern_of<Letter>(L({63, 64, 68, 67, 66, 65})) ==
        RankSeq{1, 2, 6, 5, 4, 3});
}

TEST_CASE("order-preserving equality by definition") {
  const auto x = L({4, 2, 5, 5, 1});
  const auto y = L({5, 2, 7, 7, 0});
  CHECK(op_equal<Letter, Letter>(x, y));
  const auto z = L({5, 2, 7, 6, 0});  // breaks the tie at positions 2,3
  CHECK_FALSE(op_equal<Letter, Letter>(x, z));
  CHECK_FALSE(op_equal<Letter, Letter>(x, L({4, 2, 5, 5})));
}

TEST_CASE("the three pattern representations agree") {
  // x ~ y iff equal code sequences iff equal rank sequences; checked on
  // random same-length pairs so all three routes exercise ties.
  SplitMix64 rng(101);
  int equal_seen = 0;
  for (int it = 0; it < 3000; ++it) {
    const std::size_t m = 1 + rng.below(7);
    std::vector<Letter> x, y;
    for (std::size_t k = 0; k < m; ++k) {
      x.push_back(static_cast<Letter>(rng.below(4)));
      y.push_back(static_cast<Letter>(rng.below(4)));
    }
    const bool eq = op_equal<Letter, Letter>(x, y);
    equal_seen += eq;
    CHECK(eq == (pref_code_of<Letter>(x) == pref_code_of<Letter>(y)));
    CHECK(eq == (rank_pattern_of<Letter>(x) == rank_pattern_of<Letter>(y)));
  }
  CHECK(equal_seen > 100);  // the sample actually hits both outcomes
}

TEST_CASE("code sequence extends one code at a time") {
  SplitMix64 rng(202);
  for (int it = 0; it < 200; ++it) {
    const std::size_t m = 2 + rng.below(8);
    std::vector<Letter> x;
    for (std::size_t k = 0; k < m; ++k)
      x.push_back(static_cast<Letter>(rng.below(5)));
    const PrefCode full = pref_code_of<Letter>(x);
    const PrefCode head = pref_code_of<Letter>(
        std::span<const Letter>(x).first(m - 1));
    REQUIRE(full.size() == m);
    for (std::size_t k = 0; k + 1 < m; ++k) CHECK(full[k] == head[k]);
    CHECK(full[m - 1] == last_code_of<Letter>(x));
  }
}

TEST_CASE("dense alphabet remap keeps order only") {
  const Series s = remap_alphabet(std::vector<int>{56, 57, 62, 59, 58});
  CHECK(s.letters == std::vector<Letter>{0, 1, 4, 3, 2});
  CHECK(s.sigma == 5);

  const Series t = remap_alphabet(std::vector<double>{2.5, -1.0, 2.5, 7.0});
  CHECK(t.letters == std::vector<Letter>{1, 0, 1, 2});
  CHECK(t.sigma == 3);

  CHECK_THROWS_AS(remap_alphabet(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("remap preserves every code") {
  SplitMix64 rng(303);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> vals;
    const std::size_t m = 1 + rng.below(12);
    for (std::size_t k = 0; k < m; ++k)
      vals.push_back(static_cast<int>(rng.below(1000)) - 500);
    const Series s = remap_alphabet(vals);
    REQUIRE(s.size() == m);
    CHECK(pref_code_of<int>(vals) == pref_code(s, 0, m - 1));
  }
}

TEST_CASE("series-level wrappers use inclusive ranges") {
  Series s;
  s.letters = L({0, 1, 3, 3, 1, 4, 4, 0});
  s.sigma = 5;
  CHECK(last_code_naive(s, 0, 0) == CodePair{-1, -1});
  CHECK(last_code_naive(s, 1, 3) == CodePair{1, 1});
  CHECK(pref_code(s, 1, 3).str() == "(-1,-1)(0,-1)(1,1)");
  CHECK(rank_pattern(s, 2, 4) == RankSeq{2, 2, 1});
  CHECK(op_equal(s, 1, 3, s, 4, 6));
  CHECK_FALSE(op_equal(s, 0, 2, s, 2, 4));
  CHECK_THROWS_AS(pref_code(s, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(pref_code(s, 0, 8), std::invalid_argument);
}

TEST_CASE("code pair packing is an order-preserving injection") {
  CHECK(code_to_int(CodePair{-1, -1}, 8) == 0);
  CHECK(code_to_int(CodePair{0, -1}, 8) == 9);

  // Exhaustive over all legal pairs for one n: injective and monotone in
  // lexicographic (pred, succ) order with -1 first.
  const std::size_t n = 7;
  std::int64_t prev = -1;
  for (std::int32_t p = -1; p <= static_cast<std::int32_t>(n) - 2; ++p)
    for (std::int32_t s = -1; s <= static_cast<std::int32_t>(n) - 2; ++s) {
      const std::int64_t v = code_to_int(CodePair{p, s}, n);
      CHECK(v > prev);
      prev = v;
    }
  CHECK(prev <= static_cast<std::int64_t>((n + 1) * (n + 1)));

  CHECK_THROWS_AS(code_to_int(CodePair{-2, 0}, 8), std::invalid_argument);
  CHECK_THROWS_AS(code_to_int(CodePair{7, 0}, 8), std::invalid_argument);
}

TEST_CASE("canonical text round trip") {
  SplitMix64 rng(404);
  for (int it = 0; it < 200; ++it) {
    const std::size_t m = 1 + rng.below(10);
    std::vector<Letter> x;
    for (std::size_t k = 0; k < m; ++k)
      x.push_back(static_cast<Letter>(rng.below(6)));
    const PrefCode pc = pref_code_of<Letter>(x);
    CHECK(parse_pref_code(pc.str()) == pc);
  }
  CHECK(parse_pref_code("(-1,-1)(0,-1)(1,1)").size() == 3);
  CHECK_THROWS_AS(parse_pref_code(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pref_code("(-1,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pref_code("(a,b)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pref_code("(-1,-1)x(0,0)"), std::invalid_argument);
}
