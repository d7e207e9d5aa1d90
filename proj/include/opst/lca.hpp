#pragma once

// Constant-time lowest common ancestor over a built tree: Euler tour plus a
// doubling sparse table on tour depths.  Preparation is O(n log n), queries
// are two table reads; at desk scale the log factor is irrelevant.

#include <cstdint>
#include <span>
#include <vector>

#include "opst/tree.hpp"

namespace opst {

class LcaIndex {
 public:
  explicit LcaIndex(const OpSuffixTree& t);

  std::uint32_t lca(std::uint32_t a, std::uint32_t b) const;

  // LCA of a whole set; errors on an empty set.
  std::uint32_t lca_fold(std::span<const std::uint32_t> nodes) const;

  // Edge distance from the root, by node id.
  std::uint32_t tree_depth(std::uint32_t v) const;

  std::size_t euler_size() const { return euler_.size(); }
  std::size_t node_count() const { return first_.size(); }
  std::size_t memory_bytes() const;

 private:
  std::size_t argmin_range(std::size_t lo, std::size_t hi) const;  // [lo, hi]
  void check_node(std::uint32_t v) const;

  std::vector<std::uint32_t> euler_;        // node id per tour step
  std::vector<std::uint32_t> euler_depth_;  // tree depth per tour step
  std::vector<std::uint32_t> first_;        // first tour index per node
  std::vector<std::uint32_t> tree_depth_;
  std::vector<std::vector<std::uint32_t>> table_;  // argmin per power-of-two span
};

}  // namespace opst
