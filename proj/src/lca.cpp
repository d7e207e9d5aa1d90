#include "opst/lca.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace opst {

LcaIndex::LcaIndex(const OpSuffixTree& t) {
  const std::size_t count = t.node_count();
  tree_depth_.assign(count, 0);
  first_.assign(count, 0);
  euler_.reserve(2 * count);
  euler_depth_.reserve(2 * count);

  // Iterative Euler tour; a node is appended on entry and again after each
  // child returns.
  struct Frame {
    std::uint32_t node;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  std::vector<bool> seen(count, false);
  stack.push_back({t.root(), 0});
  auto emit = [&](std::uint32_t v) {
    if (!seen[v]) {
      seen[v] = true;
      first_[v] = static_cast<std::uint32_t>(euler_.size());
    }
    euler_.push_back(v);
    euler_depth_.push_back(tree_depth_[v]);
  };
  emit(t.root());
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto ch = t.children(f.node);
    if (f.next_child == ch.size()) {
      stack.pop_back();
      if (!stack.empty()) emit(stack.back().node);
      continue;
    }
    const std::uint32_t c = ch[f.next_child++].node;
    tree_depth_[c] = tree_depth_[f.node] + 1;
    stack.push_back({c, 0});
    emit(c);
  }

  const std::size_t m = euler_.size();
  const std::size_t logk = m > 1 ? std::bit_width(m) : 1;
  table_.resize(logk);
  table_[0].resize(m);
  for (std::size_t i = 0; i < m; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 1; j < logk; ++j) {
    const std::size_t span = std::size_t{1} << j;
    if (span > m) {
      table_.resize(j);
      break;
    }
    table_[j].resize(m - span + 1);
    for (std::size_t i = 0; i + span <= m; ++i) {
      const std::uint32_t a = table_[j - 1][i];
      const std::uint32_t b = table_[j - 1][i + span / 2];
      table_[j][i] = euler_depth_[a] <= euler_depth_[b] ? a : b;
    }
  }
}

void LcaIndex::check_node(std::uint32_t v) const {
  if (v >= first_.size())
    throw std::out_of_range("LcaIndex: node " + std::to_string(v) +
                            " is not part of the indexed tree");
}

std::size_t LcaIndex::argmin_range(std::size_t lo, std::size_t hi) const {
  const std::size_t len = hi - lo + 1;
  const std::size_t j = std::bit_width(len) - 1;
  const std::uint32_t a = table_[j][lo];
  const std::uint32_t b = table_[j][hi + 1 - (std::size_t{1} << j)];
  return euler_depth_[a] <= euler_depth_[b] ? a : b;
}

std::uint32_t LcaIndex::lca(std::uint32_t a, std::uint32_t b) const {
  check_node(a);
  check_node(b);
  std::size_t fa = first_[a], fb = first_[b];
  if (fa > fb) std::swap(fa, fb);
  return euler_[argmin_range(fa, fb)];
}

std::uint32_t LcaIndex::lca_fold(std::span<const std::uint32_t> nodes) const {
  if (nodes.empty()) throw std::invalid_argument("lca_fold: empty node set");
  std::uint32_t acc = nodes[0];
  check_node(acc);
  for (std::size_t k = 1; k < nodes.size(); ++k) acc = lca(acc, nodes[k]);
  return acc;
}

std::uint32_t LcaIndex::tree_depth(std::uint32_t v) const {
  check_node(v);
  return tree_depth_[v];
}

std::size_t LcaIndex::memory_bytes() const {
  std::size_t b = (euler_.capacity() + euler_depth_.capacity() + first_.capacity() +
                   tree_depth_.capacity()) *
                  sizeof(std::uint32_t);
  for (const auto& row : table_) b += row.capacity() * sizeof(std::uint32_t);
  return b;
}

}  // namespace opst
