#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "opst/baseline.hpp"
#include "opst/oracle.hpp"
#include "opst/rand.hpp"
#include "opst/series_io.hpp"

using namespace opst;
using testutil::occurrences_by_definition;
using testutil::random_series;

namespace {

std::vector<std::string> strs(const std::vector<PrefCode>& pcs) {
  std::vector<std::string> out;
  for (const PrefCode& p : pcs) out.push_back(p.str());
  return out;
}

}  // namespace

TEST_CASE("brute force on the golden series") {
  const Series w = series_from_values({1, 2, 4, 4, 2, 5, 5, 1});
  const BruteForceResult r = brute_force_mine(w, 2);

  CHECK(strs(r.maximal) ==
        std::vector<std::string>{"(-1,-1)(0,-1)(1,1)", "(-1,-1)(0,0)(-1,1)"});
  CHECK(strs(r.closed) ==
        std::vector<std::string>{"(-1,-1)", "(-1,-1)(0,-1)",
                                 "(-1,-1)(0,-1)(1,1)", "(-1,-1)(0,0)(-1,1)"});

  const BruteForceResult r3 = brute_force_mine(w, 3);
  CHECK(strs(r3.maximal) == std::vector<std::string>{"(-1,-1)(0,-1)"});
  CHECK(strs(r3.closed) ==
        std::vector<std::string>{"(-1,-1)", "(-1,-1)(0,-1)"});

  CHECK(brute_force_mine(w, 9).maximal.empty());
  CHECK(brute_force_mine(w, 9).closed.empty());
}

TEST_CASE("brute force hand cases") {
  // Strictly increasing: one pattern per frequent length, the longest
  // frequent one maximal.
  Series inc;
  inc.letters = {0, 1, 2, 3, 4};
  inc.sigma = 5;
  const BruteForceResult r = brute_force_mine(inc, 2);
  // Lengths 1..4 occur 5,4,3,2 times; each is the unique pattern of its
  // length, so only the length-4 run is maximal and every length is closed.
  REQUIRE(r.maximal.size() == 1);
  CHECK(r.maximal[0].size() == 4);
  REQUIRE(r.closed.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(r.closed[k].size() == k + 1);

  // Constant series behaves the same way: one chain of patterns.
  Series flat;
  flat.letters = {2, 2, 2, 2};
  flat.sigma = 3;
  const BruteForceResult f = brute_force_mine(flat, 2);
  REQUIRE(f.maximal.size() == 1);
  CHECK(f.maximal[0].str() == "(-1,-1)(0,0)(1,1)");
  CHECK(f.closed.size() == 3);
}

TEST_CASE("brute force input validation") {
  Series s;
  s.sigma = 2;
  CHECK_THROWS_AS(brute_force_mine(s, 2), std::invalid_argument);  // empty

  s.letters.assign(65, 0);
  s.sigma = 2;
  CHECK_THROWS_AS(brute_force_mine(s, 2), std::invalid_argument);  // too long

  s.letters.assign(8, 0);
  CHECK_THROWS_AS(brute_force_mine(s, 1), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_mine(s, 0), std::invalid_argument);
}

TEST_CASE("levelwise miners agree with brute force") {
  SplitMix64 rng(61001);
  for (int it = 0; it < 250; ++it) {
    const std::size_t n = 1 + rng.below(28);
    const Letter sigma = static_cast<Letter>(1 + rng.below(6));
    const Series s = random_series(rng, n, sigma);
    const std::int64_t tau = 2 + static_cast<std::int64_t>(rng.below(3));
    const WaveletOracle o(s);
    const BruteForceResult bf = brute_force_mine(s, tau);
    CHECK(strs(levelwise_maximal(s, o, tau)) == strs(bf.maximal));
    CHECK(strs(levelwise_closed(s, o, tau)) == strs(bf.closed));
  }
}

TEST_CASE("levelwise miners are oracle independent") {
  SplitMix64 rng(61002);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + rng.below(30);
    const Letter sigma = static_cast<Letter>(1 + rng.below(5));
    const Series s = random_series(rng, n, sigma);
    const WaveletOracle w(s);
    const NaiveScanOracle nv(s);
    CHECK(strs(levelwise_maximal(s, w, 2)) == strs(levelwise_maximal(s, nv, 2)));
    CHECK(strs(levelwise_closed(s, w, 3)) == strs(levelwise_closed(s, nv, 3)));
  }
}

TEST_CASE("occurrence counting") {
  const Series w = series_from_values({1, 2, 4, 4, 2, 5, 5, 1});
  const WaveletOracle o(w);

  CHECK(count_occurrences(w, o, parse_pref_code("(-1,-1)(0,0)(-1,1)")) == 2);
  CHECK(count_occurrences(w, o, parse_pref_code("(-1,-1)")) == 8);
  CHECK(count_occurrences(w, o, parse_pref_code("(-1,-1)(0,-1)")) == 3);

  // Impossible codes and over-long patterns count zero.
  CHECK(count_occurrences(w, o, parse_pref_code("(-1,-1)(3,3)")) == 0);
  PrefCode nine;
  nine.codes.assign(9, CodePair{});
  nine.codes[0] = CodePair{};
  CHECK(count_occurrences(w, o, nine) == 0);
}

TEST_CASE("occurrence counting matches the definition") {
  SplitMix64 rng(61003);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = 1 + rng.below(26);
    const Letter sigma = static_cast<Letter>(1 + rng.below(5));
    const Series s = random_series(rng, n, sigma);
    const WaveletOracle o(s);

    // Half the probes are real windows of s, half windows of an unrelated
    // series, so zero counts are exercised too.
    for (int probe = 0; probe < 20; ++probe) {
      Series src = s;
      if (probe % 2) src = random_series(rng, 1 + rng.below(8), 3);
      const std::size_t i = rng.below(src.size());
      const std::size_t j = i + rng.below(src.size() - i);
      const PrefCode p = pref_code(src, i, j);
      const std::uint64_t want = occurrences_by_definition(s, p);
      CHECK(count_occurrences(s, o, p) == want);
      CHECK(count_occurrences_serial(s, o, p) == want);
    }
  }
}

TEST_CASE("feature matrix") {
  const Series w1 = series_from_values({1, 2, 4, 4, 2, 5, 5, 1});
  const Series w2 = series_from_values({3, 1, 2});
  const std::vector<PrefCode> pats = {
      parse_pref_code("(-1,-1)"),
      parse_pref_code("(-1,-1)(0,-1)"),
      parse_pref_code("(-1,-1)(0,0)(-1,1)"),
  };

  const auto m = feature_matrix({w1, w2}, pats);
  REQUIRE(m.size() == 2);
  REQUIRE(m[0].size() == 3);
  CHECK(m[0] == std::vector<std::uint64_t>{8, 3, 2});
  CHECK(m[1] == std::vector<std::uint64_t>{3, 1, 0});

  // An empty series contributes an all-zero row.
  const auto z = feature_matrix({Series{}}, pats);
  REQUIRE(z.size() == 1);
  CHECK(z[0] == std::vector<std::uint64_t>{0, 0, 0});

  CHECK_THROWS_AS(feature_matrix({}, pats), std::invalid_argument);
  CHECK_THROWS_AS(feature_matrix({w1}, {}), std::invalid_argument);
}
