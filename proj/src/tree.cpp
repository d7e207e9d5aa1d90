#include "opst/tree.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>

namespace opst {

// Construction speed is bound to how much of the node array the cache holds.
static_assert(sizeof(Node) == 24, "node layout grew; check the field packing");

namespace {

constexpr char kMagic[4] = {'O', 'P', 'S', 'T'};
constexpr std::uint32_t kFormatVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int k = 0; k < 4; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  out.write(b, 4);
}

void write_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int k = 0; k < 8; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  out.write(b, 8);
}

void write_i64(std::ostream& out, std::int64_t v) {
  write_u64(out, static_cast<std::uint64_t>(v));
}

std::uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw std::runtime_error("index file: truncated");
  std::uint32_t v = 0;
  for (int k = 3; k >= 0; --k) v = (v << 8) | b[k];
  return v;
}

std::uint64_t read_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw std::runtime_error("index file: truncated");
  std::uint64_t v = 0;
  for (int k = 7; k >= 0; --k) v = (v << 8) | b[k];
  return v;
}

std::int64_t read_i64(std::istream& in) {
  return static_cast<std::int64_t>(read_u64(in));
}

}  // namespace

OpSuffixTree OpSuffixTree::build(Series s, std::unique_ptr<LetterOracle> oracle) {
  if (s.size() == 0) throw std::invalid_argument("OpSuffixTree::build: empty series");
  for (Letter v : s.letters)
    if (v < 0 || v >= s.sigma)
      throw std::invalid_argument("OpSuffixTree::build: letter out of [0, sigma)");
  OpSuffixTree t;
  t.series_ = std::move(s);
  t.oracle_ = oracle ? std::move(oracle) : std::make_unique<WaveletOracle>(t.series_);
  if (t.oracle_->n() != t.series_.size())
    throw std::invalid_argument("OpSuffixTree::build: oracle length mismatch");
  t.build_impl();
  return t;
}

std::uint32_t OpSuffixTree::new_node() {
  nodes_.emplace_back();
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

// Run capacities grow by ~1.5x per rung: 2, 3, 4, 6, 9, 13, ...  Most
// internal nodes stop at two or three children, so the small rungs fit
// exactly and the pool stays close to the live entry count.
std::uint32_t OpSuffixTree::run_capacity(std::uint32_t count) {
  std::uint32_t cap = 2;
  while (cap < count) cap += (cap + 1) / 2;
  return cap;
}

namespace {
std::uint32_t ladder_rung(std::uint32_t cap) {
  std::uint32_t c = 2, rung = 0;
  while (c < cap) {
    c += (c + 1) / 2;
    ++rung;
  }
  return rung;
}
}  // namespace

std::uint32_t OpSuffixTree::pool_alloc(std::uint32_t cap) {
  const std::uint32_t rung = ladder_rung(cap);
  if (rung < free_runs_.size() && !free_runs_[rung].empty()) {
    const std::uint32_t off = free_runs_[rung].back();
    free_runs_[rung].pop_back();
    return off;
  }
  const std::size_t off = pool_.size();
  pool_.resize(off + cap, ChildEntry{ChildKey::dollar(), 0});
  return static_cast<std::uint32_t>(off);
}

void OpSuffixTree::pool_free(std::uint32_t off, std::uint32_t cap) {
  const std::uint32_t rung = ladder_rung(cap);
  if (rung >= free_runs_.size()) free_runs_.resize(rung + 1);
  free_runs_[rung].push_back(off);
}

std::int32_t OpSuffixTree::find_child(std::uint32_t u, ChildKey key) const {
  const Node& nd = nodes_[u];
  const ChildEntry* first = pool_.data() + nd.child_off;
  const ChildEntry* last = first + nd.child_count;
  auto it = std::lower_bound(first, last, key,
                             [](const ChildEntry& e, ChildKey k) { return e.key < k; });
  if (it == last || !(it->key == key)) return -1;
  return static_cast<std::int32_t>(it->node);
}

void OpSuffixTree::insert_child(std::uint32_t u, ChildKey key, std::uint32_t child) {
  Node& nd = nodes_[u];
  const std::uint32_t cnt = nd.child_count;
  if (cnt == 0) {
    nd.child_off = pool_alloc(2);
  } else if (cnt == run_capacity(cnt)) {
    const std::uint32_t off = pool_alloc(run_capacity(cnt + 1));
    for (std::uint32_t k = 0; k < cnt; ++k)  // offsets survive pool growth
      pool_[off + k] = pool_[nd.child_off + k];
    pool_free(nd.child_off, cnt);
    nd.child_off = off;
  }
  ChildEntry* first = pool_.data() + nd.child_off;
  ChildEntry* last = first + cnt;
  auto it = std::lower_bound(first, last, key,
                             [](const ChildEntry& e, ChildKey k) { return e.key < k; });
  if (it != last && it->key == key)
    throw std::logic_error("insert_child: duplicate key");
  for (ChildEntry* p = last; p != it; --p) *p = *(p - 1);
  *it = ChildEntry{key, child};
  nd.child_count = cnt + 1;
}

ChildKey OpSuffixTree::code_key(std::size_t i, std::size_t j) const {
  return ChildKey::code(code_to_int(oracle_->last_code(i, j), series_.size()));
}

// Splits the edge into v so that the upper part ends at an explicit node of
// depth new_depth; returns the new node.  The witness carries over from v.
std::uint32_t OpSuffixTree::split_edge(std::uint32_t v, std::uint32_t new_depth) {
  ++stats_.splits;
  const std::uint32_t p = static_cast<std::uint32_t>(nodes_[v].parent);
  const std::uint32_t wit = nodes_[v].witness;
  const std::uint32_t nu = new_node();
  Node& mid = nodes_[nu];
  mid.depth = new_depth;
  mid.witness = wit;
  mid.parent = static_cast<std::int32_t>(p);
  // Point the parent's edge slot at the new node; the key stays, so order
  // within the run is untouched.
  {
    const Node& pn = nodes_[p];
    std::uint32_t k = 0;
    while (k < pn.child_count && pool_[pn.child_off + k].node != v) ++k;
    if (k == pn.child_count) throw std::logic_error("split_edge: edge slot missing");
    pool_[pn.child_off + k].node = nu;
  }
  const ChildKey down_key = code_key(wit, wit + new_depth);
  const std::uint32_t off = pool_alloc(2);
  pool_[off] = ChildEntry{down_key, v};
  nodes_[nu].child_off = off;
  nodes_[nu].child_count = 1;
  nodes_[v].parent = static_cast<std::int32_t>(nu);
  return nu;
}

void OpSuffixTree::create_leaf(std::uint32_t i, std::uint32_t u, std::uint32_t d) {
  const std::size_t n = series_.size();
  const std::uint32_t leaf = new_node();
  Node& lf = nodes_[leaf];
  lf.depth = static_cast<std::uint32_t>(n - i);
  lf.witness = i;
  lf.parent = static_cast<std::int32_t>(u);
  const ChildKey key =
      (static_cast<std::size_t>(i) + d <= n - 1) ? code_key(i, i + d) : ChildKey::dollar();
  insert_child(u, key, leaf);
  leaf_of_label_[i] = leaf;
}

// Suffix link of a freshly attached node: climb to the nearest ancestor that
// has one, follow it, then walk back down along the witness's shifted codes,
// splitting once if the target depth lands inside an edge.
std::uint32_t OpSuffixTree::compute_suffix_link(std::uint32_t u) {
  const std::uint32_t d = nodes_[u].depth;
  if (d == 0) return 0;
  std::uint32_t up = u;
  while (nodes_[static_cast<std::uint32_t>(nodes_[up].parent)].suffix_link < 0) {
    up = static_cast<std::uint32_t>(nodes_[up].parent);
    ++stats_.moves;
  }
  std::uint32_t v = static_cast<std::uint32_t>(
      nodes_[static_cast<std::uint32_t>(nodes_[up].parent)].suffix_link);
  const std::size_t wit1 = static_cast<std::size_t>(nodes_[u].witness) + 1;
  while (nodes_[v].depth < d - 1) {
    const std::int32_t ch = find_child(v, code_key(wit1, wit1 + nodes_[v].depth));
    if (ch < 0) throw std::logic_error("suffix link walk: missing edge");
    v = static_cast<std::uint32_t>(ch);
    ++stats_.moves;
  }
  if (nodes_[v].depth > d - 1) v = split_edge(v, d - 1);
  return v;
}

void OpSuffixTree::build_impl() {
  const std::size_t n = series_.size();
  nodes_.clear();
  pool_.clear();
  free_runs_.clear();
  // Random-like inputs settle near 1.4n explicit nodes; the pool needs a bit
  // more headroom for run slack and not-yet-recycled garbage.  The 3n + 1
  // worst case just grows the vectors, which no caller observes (helpers
  // never hold references across creation).
  nodes_.reserve(3 * n / 2 + 8);
  pool_.reserve(2 * n + 8);
  leaf_of_label_.assign(n, 0);
  stats_ = BuildStats{};

  const std::uint32_t root = new_node();
  nodes_[root].suffix_link = 0;

  std::uint32_t u = root;
  std::uint32_t d = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    // Descend while the next code of suffix i keeps matching; the terminator
    // (i + d past the end) matches no code edge by construction.
    while (d == nodes_[u].depth && static_cast<std::size_t>(i) + d <= n - 1) {
      const std::int32_t child = find_child(u, code_key(i, i + d));
      if (child < 0) break;
      u = static_cast<std::uint32_t>(child);
      ++d;
      ++stats_.moves;
      while (d < nodes_[u].depth && static_cast<std::size_t>(i) + d <= n - 1 &&
             oracle_->last_code(nodes_[u].witness, nodes_[u].witness + d) ==
                 oracle_->last_code(i, i + d))
        ++d;
      if (d < nodes_[u].depth) break;
    }
    if (d < nodes_[u].depth) u = split_edge(u, d);
    create_leaf(i, u, d);
    if (nodes_[u].suffix_link < 0) nodes_[u].suffix_link = compute_suffix_link(u);
    u = static_cast<std::uint32_t>(nodes_[u].suffix_link);
    d = d > 0 ? d - 1 : 0;
  }

  // The tree never mutates after construction, so drop the rung slack and
  // recycling garbage: repack every run exactly sized, in node order.  Load
  // produces this packed layout directly.
  BigVector<ChildEntry> packed;
  packed.reserve(nodes_.size() - 1);
  for (Node& nd : nodes_) {
    const auto off = static_cast<std::uint32_t>(packed.size());
    packed.insert(packed.end(), pool_.begin() + nd.child_off,
                  pool_.begin() + nd.child_off + nd.child_count);
    nd.child_off = off;
  }
  pool_ = std::move(packed);
  free_runs_ = {};
  nodes_.shrink_to_fit();
}

Locus OpSuffixTree::locus(std::size_t i, std::size_t j) const {
  if (i > j || j >= series_.size())
    throw std::invalid_argument("locus: invalid range [" + std::to_string(i) + "," +
                                std::to_string(j) + "]");
  const std::uint32_t len = static_cast<std::uint32_t>(j - i + 1);
  std::uint32_t u = 0;
  while (nodes_[u].depth < len) {
    const std::int32_t ch = find_child(u, code_key(i, i + nodes_[u].depth));
    if (ch < 0) throw std::logic_error("locus: fragment path missing");
    u = static_cast<std::uint32_t>(ch);
  }
  return Locus{u, len};
}

std::vector<std::uint32_t> OpSuffixTree::post_order() const {
  std::vector<std::uint32_t> order;
  order.reserve(nodes_.size());
  // Two-stack trick: pre-order with children reversed, then reverse.
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const ChildEntry& e : children(v)) stack.push_back(e.node);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<std::uint32_t> OpSuffixTree::leaf_counts() const {
  std::vector<std::uint32_t> counts(nodes_.size(), 0);
  for (const std::uint32_t v : post_order()) {
    if (nodes_[v].is_leaf()) counts[v] = 1;
    if (nodes_[v].parent >= 0)
      counts[static_cast<std::uint32_t>(nodes_[v].parent)] += counts[v];
  }
  return counts;
}

std::uint32_t OpSuffixTree::walk_link_target(std::uint32_t v) const {
  const std::uint32_t d = nodes_[v].depth;
  if (d == 0) return 0;
  std::uint32_t up = v;
  while (nodes_[static_cast<std::uint32_t>(nodes_[up].parent)].suffix_link < 0)
    up = static_cast<std::uint32_t>(nodes_[up].parent);
  std::uint32_t t = static_cast<std::uint32_t>(
      nodes_[static_cast<std::uint32_t>(nodes_[up].parent)].suffix_link);
  const std::size_t wit1 = static_cast<std::size_t>(nodes_[v].witness) + 1;
  while (nodes_[t].depth < d - 1) {
    const std::int32_t ch = find_child(t, code_key(wit1, wit1 + nodes_[t].depth));
    if (ch < 0) throw std::logic_error("link target walk: missing edge");
    if (nodes_[static_cast<std::uint32_t>(ch)].depth > d - 1) break;  // inside the edge
    t = static_cast<std::uint32_t>(ch);
  }
  return t;
}

void OpSuffixTree::complete_link_targets() {
  if (link_targets_complete_) return;
  link_target_.assign(nodes_.size(), -1);
  for (std::uint32_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].is_leaf()) continue;
    if (nodes_[v].suffix_link >= 0)
      link_target_[v] = nodes_[v].suffix_link;
    else
      link_target_[v] = static_cast<std::int32_t>(walk_link_target(v));
  }
  link_targets_complete_ = true;
}

std::uint32_t OpSuffixTree::link_target_of(std::uint32_t v) const {
  const Node& nd = node(v);
  if (nd.is_leaf()) throw std::invalid_argument("link_target_of: leaf node");
  if (nd.suffix_link >= 0) return static_cast<std::uint32_t>(nd.suffix_link);
  if (link_targets_complete_) return static_cast<std::uint32_t>(link_target_[v]);
  return walk_link_target(v);
}

VerifyReport OpSuffixTree::verify_structure() const {
  VerifyReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const std::size_t n = series_.size();
  const std::size_t sigma = static_cast<std::size_t>(series_.sigma);

  if (nodes_.size() > 3 * n + 1)
    fail("explicit node count " + std::to_string(nodes_.size()) + " exceeds 3n+1");

  std::size_t leaves = 0;
  std::vector<bool> label_seen(n, false);
  for (std::uint32_t v = 0; v < nodes_.size(); ++v) {
    const Node& nd = nodes_[v];
    if (v == 0) {
      if (nd.parent != -1 || nd.depth != 0 || nd.suffix_link != 0)
        fail("root must have no parent, depth 0 and a self suffix link");
    } else if (nd.parent < 0) {
      fail("non-root node " + std::to_string(v) + " has no parent");
      continue;
    }
    if (nd.is_leaf()) {
      ++leaves;
      const auto label = static_cast<std::size_t>(nd.witness);
      if (label >= n || label_seen[label]) {
        fail("bad or duplicate leaf label " + std::to_string(label));
      } else {
        label_seen[label] = true;
        if (nd.depth != n - label)
          fail("leaf " + std::to_string(label) + " has depth " + std::to_string(nd.depth) +
               ", expected " + std::to_string(n - label));
        if (leaf_of_label_[label] != v) fail("leaf lookup table mismatch");
      }
    }
    if (static_cast<std::size_t>(nd.witness) + nd.depth > n)
      fail("witness fragment out of range at node " + std::to_string(v));
    const auto ch = children(v);
    if (ch.size() > 2 * sigma + 1)
      fail("outdegree " + std::to_string(ch.size()) + " exceeds 2*sigma+1 at node " +
           std::to_string(v));
    if (nd.suffix_link >= 0 && v != 0) {
      const auto& tgt = nodes_[static_cast<std::uint32_t>(nd.suffix_link)];
      if (tgt.depth + 1 != nd.depth)
        fail("suffix link depth mismatch at node " + std::to_string(v));
    }
    std::uint32_t min_wit = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t k = 0; k < ch.size(); ++k) {
      const ChildEntry& e = ch[k];
      if (k > 0 && !(ch[k - 1].key < e.key))
        fail("children unsorted or duplicated at node " + std::to_string(v));
      const Node& c = nodes_[e.node];
      if (c.parent != static_cast<std::int32_t>(v))
        fail("parent back reference broken at node " + std::to_string(e.node));
      min_wit = std::min(min_wit, c.witness);
      if (e.key.is_dollar()) {
        if (!c.is_leaf() || c.depth != nd.depth)
          fail("terminator edge must lead to a leaf of equal depth (node " +
               std::to_string(v) + ")");
      } else {
        if (c.depth <= nd.depth)
          fail("code edge does not increase depth at node " + std::to_string(v));
        const std::int64_t want =
            code_to_int(oracle_->last_code(c.witness, c.witness + nd.depth), n);
        if (e.key.code_value() != want)
          fail("edge key does not match the witness code at node " + std::to_string(v));
      }
    }
    if (!nd.is_leaf() && nd.child_count != 0 && nd.witness != min_wit)
      fail("witness is not the minimum over the subtree at node " + std::to_string(v));
  }
  if (leaves != n)
    fail("leaf count " + std::to_string(leaves) + " differs from n=" + std::to_string(n));

  std::uint64_t edges = 0;
  for (const Node& nd : nodes_) edges += nd.child_count;
  if (edges + 1 != nodes_.size())
    fail("edge count " + std::to_string(edges) + " does not cover every non-root node once");

  // Explicit single-child nodes per root-to-leaf path, root excluded.
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [v, nonbr] = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[v];
    if (v != 0 && !nd.is_leaf() && nd.child_count == 1) ++nonbr;
    if (nonbr > sigma) {
      fail("more than sigma explicit single-child nodes on a root-to-leaf path");
      break;
    }
    for (const ChildEntry& e : children(v)) stack.push_back({e.node, nonbr});
  }
  return rep;
}

std::vector<std::string> OpSuffixTree::decode_suffix_codes() const {
  const std::size_t n = series_.size();
  std::vector<std::string> lines(n);
  for (std::size_t label = 0; label < n; ++label) {
    std::vector<std::uint32_t> path;
    for (std::int32_t v = static_cast<std::int32_t>(leaf_of_label_[label]); v >= 0;
         v = nodes_[static_cast<std::uint32_t>(v)].parent)
      path.push_back(static_cast<std::uint32_t>(v));
    std::reverse(path.begin(), path.end());
    std::string line;
    for (std::size_t k = 1; k < path.size(); ++k) {
      const Node& upper = nodes_[path[k - 1]];
      const Node& lower = nodes_[path[k]];
      // A terminator edge is the one that reaches a leaf without gaining
      // depth; every code edge descends.
      if (lower.is_leaf() && lower.depth == upper.depth) {
        line += "$";
        break;
      }
      for (std::uint32_t t = upper.depth + 1; t <= lower.depth; ++t)
        line += oracle_->last_code(lower.witness, lower.witness + t - 1).str();
      if (lower.is_leaf()) line += "$";
    }
    lines[label] = std::move(line);
  }
  return lines;
}

void OpSuffixTree::save(std::ostream& out) const {
  out.write(kMagic, 4);
  write_u32(out, kFormatVersion);
  write_u64(out, series_.size());
  write_u64(out, static_cast<std::uint64_t>(series_.sigma));
  for (Letter v : series_.letters) write_u32(out, static_cast<std::uint32_t>(v));
  write_u64(out, nodes_.size());
  for (std::uint32_t v = 0; v < nodes_.size(); ++v) {
    const Node& nd = nodes_[v];
    write_u32(out, nd.depth);
    write_u32(out, nd.witness);
    write_i64(out, nd.parent);
    write_i64(out, nd.suffix_link);
    write_i64(out, nd.is_leaf() ? static_cast<std::int64_t>(nd.witness) : -1);
    write_u64(out, nd.child_count);
    for (const ChildEntry& e : children(v)) {
      write_i64(out, e.key.is_dollar() ? -1 : e.key.code_value());
      write_u64(out, e.node);
    }
  }
  if (!out) throw std::runtime_error("index save: write failed");
}

OpSuffixTree OpSuffixTree::load(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || !std::equal(magic, magic + 4, kMagic))
    throw std::runtime_error("index file: bad magic");
  if (read_u32(in) != kFormatVersion)
    throw std::runtime_error("index file: unsupported version");
  OpSuffixTree t;
  const std::uint64_t n = read_u64(in);
  const std::uint64_t sigma = read_u64(in);
  // Sigma may exceed n: an integer alphabet declared by value range keeps
  // letters that never occur.
  if (n == 0 || sigma == 0 ||
      sigma > static_cast<std::uint64_t>(std::numeric_limits<Letter>::max()))
    throw std::runtime_error("index file: implausible n/sigma");
  t.series_.letters.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint32_t v = read_u32(in);
    if (v >= sigma) throw std::runtime_error("index file: letter out of range");
    t.series_.letters.push_back(static_cast<Letter>(v));
  }
  t.series_.sigma = static_cast<Letter>(sigma);
  const std::uint64_t node_count = read_u64(in);
  if (node_count < 2 || node_count > 3 * n + 1)
    throw std::runtime_error("index file: implausible node count");
  t.nodes_.resize(node_count);
  t.leaf_of_label_.assign(n, 0);
  t.pool_.reserve(node_count > 0 ? node_count - 1 : 0);
  for (std::uint64_t v = 0; v < node_count; ++v) {
    Node& nd = t.nodes_[v];
    nd.depth = read_u32(in);
    nd.witness = read_u32(in);
    nd.parent = static_cast<std::int32_t>(read_i64(in));
    nd.suffix_link = static_cast<std::int32_t>(read_i64(in));
    const std::int64_t label = read_i64(in);
    const std::uint64_t nchild = read_u64(in);
    if (nchild > 2 * sigma + 1) throw std::runtime_error("index file: implausible degree");
    nd.child_off = static_cast<std::uint32_t>(t.pool_.size());
    nd.child_count = static_cast<std::uint32_t>(nchild);
    for (std::uint64_t k = 0; k < nchild; ++k) {
      const std::int64_t raw = read_i64(in);
      const std::uint64_t child = read_u64(in);
      if (child >= node_count) throw std::runtime_error("index file: child out of range");
      t.pool_.push_back(
          ChildEntry{raw < 0 ? ChildKey::dollar() : ChildKey::code(raw),
                     static_cast<std::uint32_t>(child)});
    }
    if ((label >= 0) != (nchild == 0))
      throw std::runtime_error("index file: leaf marker and child count disagree");
    if (label >= 0) {
      if (static_cast<std::uint64_t>(label) >= n ||
          static_cast<std::uint32_t>(label) != nd.witness)
        throw std::runtime_error("index file: leaf label out of range");
      t.leaf_of_label_[static_cast<std::size_t>(label)] = static_cast<std::uint32_t>(v);
    }
  }
  // Cross-check the stored parent against the edge list.
  for (std::uint32_t v = 0; v < t.nodes_.size(); ++v)
    for (const ChildEntry& e : t.children(v))
      if (t.nodes_[e.node].parent != static_cast<std::int32_t>(v))
        throw std::runtime_error("index file: parent link mismatch");
  t.oracle_ = std::make_unique<WaveletOracle>(t.series_);
  return t;
}

std::size_t OpSuffixTree::memory_bytes() const {
  return nodes_.capacity() * sizeof(Node) + pool_.capacity() * sizeof(ChildEntry) +
         leaf_of_label_.capacity() * sizeof(std::uint32_t) +
         link_target_.capacity() * sizeof(std::int32_t) +
         series_.letters.capacity() * sizeof(Letter) + oracle_->memory_bytes();
}

}  // namespace opst
