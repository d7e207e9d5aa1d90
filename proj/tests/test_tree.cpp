#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "opst/oracle.hpp"
#include "opst/rand.hpp"
#include "opst/series_io.hpp"
#include "opst/tree.hpp"

using namespace opst;
using testutil::lca_by_walk;
using testutil::occurrences_by_definition;
using testutil::random_series;

namespace {

Series golden_series() { return series_from_values({1, 2, 4, 4, 2, 5, 5, 1}); }

const std::vector<std::string> kGoldenSuffixCodes = {
    "(-1,-1)(0,-1)(1,-1)(2,2)(1,1)(3,-1)(5,5)(0,0)$",
    "(-1,-1)(0,-1)(1,1)(0,0)(2,-1)(4,4)(-1,3)$",
    "(-1,-1)(0,0)(-1,1)(1,-1)(3,3)(-1,2)$",
    "(-1,-1)(-1,0)(0,-1)(2,2)(-1,1)$",
    "(-1,-1)(0,-1)(1,1)(-1,0)$",
    "(-1,-1)(0,0)(-1,1)$",
    "(-1,-1)(-1,0)$",
    "(-1,-1)$",
};

std::vector<std::string> expected_suffix_codes(const Series& s) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < s.size(); ++i)
    lines.push_back(pref_code(s, i, s.size() - 1).str() + "$");
  return lines;
}

}  // namespace

TEST_CASE("golden tree structure") {
  const Series w = golden_series();
  REQUIRE(w.sigma == 5);
  auto t = OpSuffixTree::build(w);

  CHECK(t.n() == 8);
  CHECK(t.node_count() == 15);
  CHECK(t.decode_suffix_codes() == kGoldenSuffixCodes);

  std::size_t leaves = 0;
  for (std::size_t v = 0; v < t.node_count(); ++v) leaves += t.node(v).is_leaf();
  CHECK(leaves == 8);

  const VerifyReport rep = t.verify_structure();
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
}

TEST_CASE("golden tree has the explicit non-branching link node") {
  const Series w = golden_series();
  auto t = OpSuffixTree::build(w);

  // The depth-3 branching node over "(-1,-1)(0,-1)(1,1)" is the lowest
  // common ancestor of the leaves for suffixes 1 and 4.
  const std::uint32_t v2 = lca_by_walk(t, t.leaf_index(1), t.leaf_index(4));
  CHECK(t.node(v2).depth == 3);
  CHECK(t.node(v2).is_branching());

  const std::int32_t sl = t.node(v2).suffix_link;
  REQUIRE(sl >= 0);
  const Node& target = t.node(static_cast<std::uint32_t>(sl));
  CHECK(target.depth == 2);
  CHECK_FALSE(target.is_leaf());
  CHECK_FALSE(target.is_branching());
  CHECK(t.children(static_cast<std::uint32_t>(sl)).size() == 1);
}

TEST_CASE("golden tree loci and leaf counts") {
  const Series w = golden_series();
  auto t = OpSuffixTree::build(w);

  // w[5..7] and w[2..4] carry the same codes, so they share a locus.
  const Locus a = t.locus(5, 7);
  const Locus b = t.locus(2, 4);
  CHECK(a == b);
  CHECK(a.depth == 3);
  CHECK(t.leaf_counts()[a.node] == 2);

  CHECK(t.locus(0, 0).node == t.locus(4, 4).node);  // every window of length 1
  CHECK_THROWS_AS(t.locus(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(t.locus(0, 8), std::invalid_argument);

  CHECK(t.build_stats().moves > 0);
  CHECK(t.build_stats().splits > 0);
}

TEST_CASE("single-letter series") {
  Series s;
  s.letters = {0};
  s.sigma = 1;
  auto t = OpSuffixTree::build(s);
  CHECK(t.node_count() == 2);
  CHECK(t.decode_suffix_codes() == std::vector<std::string>{"(-1,-1)$"});
  CHECK(t.verify_structure().ok);
  CHECK(t.leaf_counts()[t.root()] == 1);
}

TEST_CASE("build input validation") {
  Series empty;
  empty.sigma = 3;
  CHECK_THROWS_AS(OpSuffixTree::build(empty), std::invalid_argument);

  Series bad;
  bad.letters = {0, 3};
  bad.sigma = 3;  // letter 3 out of [0, 3)
  CHECK_THROWS_AS(OpSuffixTree::build(bad), std::invalid_argument);
}

TEST_CASE("decoded suffix codes match the definition on random series") {
  SplitMix64 rng(31001);
  for (int it = 0; it < 250; ++it) {
    const std::size_t n = 1 + rng.below(40);
    const Letter sigma = static_cast<Letter>(1 + rng.below(6));
    const Series s = random_series(rng, n, sigma);
    auto t = OpSuffixTree::build(s);
    CHECK(t.decode_suffix_codes() == expected_suffix_codes(s));
    const VerifyReport rep = t.verify_structure();
    CHECK(rep.ok);
    if (!rep.ok)
      for (const std::string& v : rep.violations) MESSAGE(v);
  }
}

TEST_CASE("locus identifies windows exactly by their codes") {
  SplitMix64 rng(31002);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 2 + rng.below(16);
    const Letter sigma = static_cast<Letter>(1 + rng.below(4));
    const Series s = random_series(rng, n, sigma);
    auto t = OpSuffixTree::build(s);
    for (std::size_t m = 1; m <= n; ++m)
      for (std::size_t i = 0; i + m <= n; ++i) {
        const Locus li = t.locus(i, i + m - 1);
        CHECK(li.depth == m);
        for (std::size_t j = i; j + m <= n; ++j) {
          const bool same_locus = li == t.locus(j, j + m - 1);
          const bool same_codes = op_equal(s, i, i + m - 1, s, j, j + m - 1);
          CHECK(same_locus == same_codes);
        }
      }
  }
}

TEST_CASE("leaf count at a locus is the occurrence count") {
  SplitMix64 rng(31003);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + rng.below(18);
    const Letter sigma = static_cast<Letter>(1 + rng.below(5));
    const Series s = random_series(rng, n, sigma);
    auto t = OpSuffixTree::build(s);
    const auto counts = t.leaf_counts();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        CHECK(counts[t.locus(i, j).node] ==
              occurrences_by_definition(s, pref_code(s, i, j)));
  }
}

TEST_CASE("leaf labels round trip through the index") {
  SplitMix64 rng(31004);
  const Series s = random_series(rng, 60, 5);
  auto t = OpSuffixTree::build(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::uint32_t leaf = t.leaf_index(i);
    CHECK(t.node(leaf).is_leaf());
    CHECK(t.node(leaf).witness == i);
    CHECK(t.node(leaf).depth == s.size() - i);
  }
  CHECK_THROWS_AS(t.leaf_index(60), std::out_of_range);
}

TEST_CASE("link targets point at the shifted path") {
  SplitMix64 rng(31005);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 2 + rng.below(30);
    const Letter sigma = static_cast<Letter>(1 + rng.below(5));
    const Series s = random_series(rng, n, sigma);
    auto t = OpSuffixTree::build(s);
    t.complete_link_targets();
    for (std::size_t v = 0; v < t.node_count(); ++v) {
      const Node& nd = t.node(v);
      if (nd.is_leaf() || v == t.root() || nd.depth < 2) continue;
      const std::uint32_t wit = nd.witness;
      const Locus shifted = t.locus(wit + 1, wit + nd.depth - 1);
      const std::uint32_t want =
          t.node(shifted.node).depth == nd.depth - 1
              ? shifted.node
              : static_cast<std::uint32_t>(t.node(shifted.node).parent);
      CHECK(t.link_target_of(static_cast<std::uint32_t>(v)) == want);
      if (nd.suffix_link >= 0) {
        CHECK(static_cast<std::uint32_t>(nd.suffix_link) == want);
        CHECK(t.node(want).depth == nd.depth - 1);
      }
    }
  }
}

TEST_CASE("post order visits children before parents") {
  SplitMix64 rng(31006);
  const Series s = random_series(rng, 80, 4);
  auto t = OpSuffixTree::build(s);
  const auto order = t.post_order();
  REQUIRE(order.size() == t.node_count());
  std::vector<int> seen(t.node_count(), 0);
  for (const std::uint32_t v : order) {
    for (const ChildEntry& e : t.children(v)) CHECK(seen[e.node]);
    seen[v] = 1;
  }
  CHECK(order.back() == t.root());
}

TEST_CASE("construction is oracle independent") {
  SplitMix64 rng(31007);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 1 + rng.below(32);
    const Letter sigma = static_cast<Letter>(1 + rng.below(6));
    const Series s = random_series(rng, n, sigma);
    auto a = OpSuffixTree::build(s);
    auto b = OpSuffixTree::build(s, std::make_unique<NaiveScanOracle>(s));
    auto c = OpSuffixTree::build(s, std::make_unique<WaveletOracle>(s, 0));
    CHECK(a.node_count() == b.node_count());
    CHECK(a.decode_suffix_codes() == b.decode_suffix_codes());
    CHECK(a.decode_suffix_codes() == c.decode_suffix_codes());
    CHECK(a.build_stats().moves == b.build_stats().moves);
  }
}

TEST_CASE("index save and load round trip") {
  SplitMix64 rng(31008);
  const Series s = random_series(rng, 120, 7);
  auto t = OpSuffixTree::build(s);

  std::ostringstream out;
  t.save(out);
  const std::string blob = out.str();
  CHECK(blob.size() > 0);

  std::istringstream in(blob);
  auto u = OpSuffixTree::load(in);
  CHECK(u.n() == t.n());
  CHECK(u.sigma() == t.sigma());
  CHECK(u.node_count() == t.node_count());
  CHECK(u.decode_suffix_codes() == t.decode_suffix_codes());
  CHECK(u.series().letters == s.letters);

  // Loading must reproduce the index byte for byte when saved again.
  std::ostringstream out2;
  u.save(out2);
  CHECK(out2.str() == blob);

  std::istringstream garbage("not an index");
  CHECK_THROWS_AS(OpSuffixTree::load(garbage), std::runtime_error);
  std::istringstream truncated(blob.substr(0, blob.size() / 2));
  CHECK_THROWS_AS(OpSuffixTree::load(truncated), std::runtime_error);

  CHECK(t.memory_bytes() > 0);
}

TEST_CASE("series with unused letters builds and verifies") {
  // Range-declared alphabets may skip values; sigma can exceed n.
  Series s;
  s.letters = {9, 0, 7, 0, 9};
  s.sigma = 12;
  auto t = OpSuffixTree::build(s);
  CHECK(t.verify_structure().ok);
  CHECK(t.decode_suffix_codes() == expected_suffix_codes(s));
  CHECK(t.sigma() == 12);
}
