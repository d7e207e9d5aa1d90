#pragma once

// Shared test utilities: deterministic random instances and reference
// implementations that deliberately know nothing about the structures they
// check.

#include <cstdint>
#include <optional>
#include <vector>

#include "opst/codes.hpp"
#include "opst/rand.hpp"
#include "opst/tree.hpp"

namespace testutil {

inline opst::Series random_series(opst::SplitMix64& rng, std::size_t n,
                                  opst::Letter sigma) {
  opst::Series s;
  s.sigma = sigma;
  s.letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    s.letters.push_back(static_cast<opst::Letter>(
        rng.below(static_cast<std::uint64_t>(sigma))));
  return s;
}

// LCA by walking parent pointers, no preprocessing.
inline std::uint32_t lca_by_walk(const opst::OpSuffixTree& t, std::uint32_t a,
                                 std::uint32_t b) {
  auto depth_of = [&](std::uint32_t v) {
    std::uint32_t d = 0;
    while (t.node(v).parent >= 0) {
      v = static_cast<std::uint32_t>(t.node(v).parent);
      ++d;
    }
    return d;
  };
  std::uint32_t da = depth_of(a), db = depth_of(b);
  while (da > db) {
    a = static_cast<std::uint32_t>(t.node(a).parent);
    --da;
  }
  while (db > da) {
    b = static_cast<std::uint32_t>(t.node(b).parent);
    --db;
  }
  while (a != b) {
    a = static_cast<std::uint32_t>(t.node(a).parent);
    b = static_cast<std::uint32_t>(t.node(b).parent);
  }
  return a;
}

// Occurrence count of a code pattern straight from the definition: a window
// matches when its fragment carries the same code sequence.
inline std::uint64_t occurrences_by_definition(const opst::Series& w,
                                               const opst::PrefCode& p) {
  const std::size_t m = p.size();
  if (m == 0 || m > w.size()) return 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + m <= w.size(); ++i)
    if (opst::pref_code(w, i, i + m - 1) == p) ++total;
  return total;
}

}  // namespace testutil
