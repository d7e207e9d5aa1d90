#pragma once

// Frequent order-preserving pattern mining over a built tree.  Both miners
// are single bottom-up passes whose work depends on the tree alone, not on
// the threshold; node visit counts are reported so tests can pin that down.

#include <cstdint>
#include <utility>
#include <vector>

#include "opst/codes.hpp"
#include "opst/lca.hpp"
#include "opst/tree.hpp"

namespace opst {

struct MiningParams {
  std::int64_t tau = 2;  // frequency threshold, must be > 1
};

struct PatternReport {
  std::uint32_t witness_start = 0;
  std::uint32_t length = 0;
  std::uint32_t frequency = 0;
  std::uint32_t node = 0;

  bool operator==(const PatternReport&) const = default;
};

struct MiningResult {
  std::vector<PatternReport> reports;  // sorted by (witness_start, length)
  std::uint64_t node_visits = 0;
};

// Patterns that are frequent and extendable on neither side without dropping
// below the threshold.  Completes lazy link targets first, hence non-const.
MiningResult mine_maximal(OpSuffixTree& t, MiningParams p);

// Frequent patterns whose every extension strictly loses occurrences.  The
// LCA index must have been built over the same tree.
MiningResult mine_closed(const OpSuffixTree& t, const LcaIndex& lca, MiningParams p);

// Canonical code sequence and rank sequence of a report's witness fragment.
std::pair<PrefCode, RankSeq> decode_report(const OpSuffixTree& t, const PatternReport& r);

}  // namespace opst
