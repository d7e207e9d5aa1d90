#pragma once

// Order-preserving suffix tree: a compacted trie over the per-suffix code
// sequences, each terminated by a reserved key that sorts before every code.
// Construction inserts suffixes longest first, reusing suffix links to keep
// total work near-linear; every code comparison goes through the letter
// oracle, never through the raw series.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "opst/codes.hpp"
#include "opst/hugepage.hpp"
#include "opst/oracle.hpp"

namespace opst {

// Child map key: either the reserved terminator (ordered strictly first) or
// an integer code produced by code_to_int.
class ChildKey {
 public:
  static ChildKey dollar() { return ChildKey(kDollar); }
  static ChildKey code(std::int64_t v) {
    if (v < 0) throw std::invalid_argument("ChildKey::code: negative code");
    return ChildKey(v);
  }

  bool is_dollar() const { return v_ == kDollar; }
  std::int64_t code_value() const {
    if (is_dollar()) throw std::logic_error("ChildKey: terminator has no code value");
    return v_;
  }

  bool operator==(const ChildKey&) const = default;
  auto operator<=>(const ChildKey&) const = default;

 private:
  static constexpr std::int64_t kDollar = std::numeric_limits<std::int64_t>::min();
  explicit ChildKey(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

struct ChildEntry {
  ChildKey key;
  std::uint32_t node;
};

// 24 bytes; child entries live in a pool shared across the tree (see
// OpSuffixTree::children), which keeps the node array less than half the
// size it would be with a per-node vector and spares one heap block per
// internal node.  A leaf's suffix label is its witness, and only leaves are
// childless, so neither needs its own field.
struct Node {
  std::uint32_t depth = 0;    // string depth, in code units
  std::uint32_t witness = 0;  // smallest fragment start whose locus is here;
                              // for a leaf, the suffix label
  std::int32_t parent = -1;
  std::int32_t suffix_link = -1;  // -1 while not stored
  std::uint32_t child_off = 0;    // run start in the child pool
  std::uint32_t child_count = 0;

  bool is_leaf() const { return child_count == 0; }
  bool is_branching() const { return child_count >= 2; }
};

struct BuildStats {
  std::uint64_t moves = 0;   // explicit-node moves: descents plus link walks
  std::uint64_t splits = 0;  // edge splits
};

// Position in the tree: the topmost explicit node at or below the matched
// point, together with the matched code depth.
struct Locus {
  std::uint32_t node = 0;
  std::uint32_t depth = 0;
  bool operator==(const Locus&) const = default;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

class OpSuffixTree {
 public:
  // Builds the tree over s.  A null oracle means "index s with the wavelet
  // oracle"; tests pass the scan oracle through the same slot.
  static OpSuffixTree build(Series s, std::unique_ptr<LetterOracle> oracle = nullptr);

  std::size_t n() const { return series_.size(); }
  Letter sigma() const { return series_.sigma; }
  std::size_t node_count() const { return nodes_.size(); }
  std::uint32_t root() const { return 0; }
  const Node& node(std::size_t v) const {
    if (v >= nodes_.size())
      throw std::out_of_range("node index " + std::to_string(v));
    return nodes_[v];
  }
  // Children of v, sorted by key with the terminator first.  The span is
  // invalidated by anything that mutates the tree.
  std::span<const ChildEntry> children(std::uint32_t v) const {
    const Node& nd = node(v);
    return {pool_.data() + nd.child_off, nd.child_count};
  }
  const Series& series() const { return series_; }
  const LetterOracle& oracle() const { return *oracle_; }
  const BuildStats& build_stats() const { return stats_; }

  std::uint32_t leaf_index(std::size_t label) const {
    if (label >= leaf_of_label_.size())
      throw std::out_of_range("leaf label " + std::to_string(label));
    return leaf_of_label_[label];
  }

  // Locus of the fragment w[i..j]; every fragment of the indexed series has
  // one.  Throws on an invalid range.
  Locus locus(std::size_t i, std::size_t j) const;

  // Leaf-descendant count per node, indexed by node id.
  std::vector<std::uint32_t> leaf_counts() const;

  // Nodes in post order (children before parents), root last.
  std::vector<std::uint32_t> post_order() const;

  // Fills link_target for every internal node lacking a stored suffix link,
  // by redoing the construction walk without creating nodes.  Idempotent;
  // call before any concurrent read of link targets.
  void complete_link_targets();

  // Deepest explicit node at or above the suffix-link position of v.  Equals
  // the stored suffix link when that position is explicit.
  std::uint32_t link_target_of(std::uint32_t v) const;

  // Structural validation: leaf count, degree and path bounds, node total,
  // edge label consistency, witness minimality plumbing.
  VerifyReport verify_structure() const;

  // Per-suffix code line as spelled by the root-to-leaf path, terminator
  // included, indexed by suffix start.  Reads codes through edge witnesses,
  // so it exercises the stored structure rather than the raw series.
  std::vector<std::string> decode_suffix_codes() const;

  void save(std::ostream& out) const;
  static OpSuffixTree load(std::istream& in);

  std::size_t memory_bytes() const;

 private:
  OpSuffixTree() = default;

  std::uint32_t new_node();
  std::int32_t find_child(std::uint32_t u, ChildKey key) const;
  void insert_child(std::uint32_t u, ChildKey key, std::uint32_t child);
  std::uint32_t split_edge(std::uint32_t v, std::uint32_t new_depth);
  void create_leaf(std::uint32_t i, std::uint32_t u, std::uint32_t d);
  std::uint32_t compute_suffix_link(std::uint32_t u);
  std::uint32_t walk_link_target(std::uint32_t v) const;
  ChildKey code_key(std::size_t i, std::size_t j) const;
  void build_impl();

  // Child pool.  Runs are sized by a fixed class ladder, so a run's capacity
  // is a function of the entry count alone and needs no per-node field.
  static std::uint32_t run_capacity(std::uint32_t count);
  std::uint32_t pool_alloc(std::uint32_t cap);
  void pool_free(std::uint32_t off, std::uint32_t cap);

  Series series_;
  std::unique_ptr<LetterOracle> oracle_;
  BigVector<Node> nodes_;
  BigVector<ChildEntry> pool_;
  std::vector<std::vector<std::uint32_t>> free_runs_;  // per class ladder rung
  BigVector<std::uint32_t> leaf_of_label_;
  std::vector<std::int32_t> link_target_;  // filled by complete_link_targets
  BuildStats stats_;
  bool link_targets_complete_ = false;
};

}  // namespace opst
