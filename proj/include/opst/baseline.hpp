#pragma once

// Independent reference miners and counting utilities.  The brute-force
// miner applies the pattern definitions verbatim on small inputs; the
// levelwise miners refine window groups one length at a time with pruning.
// All three must agree with the tree miner on every instance.

#include <cstdint>
#include <vector>

#include "opst/codes.hpp"
#include "opst/oracle.hpp"

namespace opst {

struct BruteForceResult {
  std::vector<PrefCode> maximal;  // canonically sorted
  std::vector<PrefCode> closed;
};

// Groups every fragment by its code sequence and applies the maximality and
// closedness definitions directly.  Capped at n <= 64.
BruteForceResult brute_force_mine(const Series& w, std::int64_t tau);

// Levelwise miners: the length m+1 table is refined from length m by one
// oracle code per surviving window; windows in infrequent groups stop being
// refined but still decide maximality through their recorded group sizes.
std::vector<PrefCode> levelwise_maximal(const Series& w, const LetterOracle& o,
                                        std::int64_t tau);
std::vector<PrefCode> levelwise_closed(const Series& w, const LetterOracle& o,
                                       std::int64_t tau);

// Occurrence count of a code pattern, one oracle-checked window at a time
// with early mismatch abort.  The default entry point may partition windows
// across threads; the serial twin is the reference.
std::uint64_t count_occurrences(const Series& w, const LetterOracle& o, const PrefCode& p);
std::uint64_t count_occurrences_serial(const Series& w, const LetterOracle& o,
                                       const PrefCode& p);

// Occurrence counts of each pattern in each series; row s, column p.  A
// pattern longer than a series counts zero there.
std::vector<std::vector<std::uint64_t>> feature_matrix(
    const std::vector<Series>& series, const std::vector<PrefCode>& patterns);

}  // namespace opst
