#include "opst/mine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace opst {

namespace {

void check_params(MiningParams p) {
  if (p.tau < 2) throw std::invalid_argument("mining: tau must be greater than 1");
}

void sort_reports(std::vector<PatternReport>& reports) {
  std::sort(reports.begin(), reports.end(),
            [](const PatternReport& a, const PatternReport& b) {
              if (a.witness_start != b.witness_start)
                return a.witness_start < b.witness_start;
              return a.length < b.length;
            });
}

}  // namespace

MiningResult mine_maximal(OpSuffixTree& t, MiningParams p) {
  check_params(p);
  t.complete_link_targets();
  const std::vector<std::uint32_t> counts = t.leaf_counts();
  MiningResult res;

  // A node fails the left side iff some frequent node's pattern, shortened by
  // its first letter, still runs through it.  Seed at the link target of
  // every frequent internal node, then let failure bubble up to ancestors.
  std::vector<std::uint8_t> fail(t.node_count(), 0);
  for (std::uint32_t v = 0; v < t.node_count(); ++v) {
    ++res.node_visits;
    if (v == t.root() || t.node(v).is_leaf()) continue;
    if (static_cast<std::int64_t>(counts[v]) >= p.tau) fail[t.link_target_of(v)] = 1;
  }

  for (const std::uint32_t v : t.post_order()) {
    ++res.node_visits;
    const Node& nd = t.node(v);
    if (nd.is_leaf()) continue;
    bool failed = fail[v];
    bool frequent_child = false;
    for (const ChildEntry& e : t.children(v)) {
      ++res.node_visits;
      failed = failed || fail[e.node];
      frequent_child =
          frequent_child || static_cast<std::int64_t>(counts[e.node]) >= p.tau;
    }
    fail[v] = failed ? 1 : 0;
    const bool right_maximal = nd.is_branching() &&
                               static_cast<std::int64_t>(counts[v]) >= p.tau &&
                               !frequent_child;
    if (v != t.root() && right_maximal && !failed)
      res.reports.push_back(PatternReport{nd.witness, nd.depth, counts[v], v});
  }
  sort_reports(res.reports);
  return res;
}

MiningResult mine_closed(const OpSuffixTree& t, const LcaIndex& lca, MiningParams p) {
  check_params(p);
  if (lca.node_count() != t.node_count())
    throw std::invalid_argument("mine_closed: LCA index built over a different tree");
  const std::vector<std::uint32_t> counts = t.leaf_counts();
  MiningResult res;

  // left_lcp[v]: length of the longest shared code prefix over all one-left
  // extensions of v's occurrences; an occurrence at position 0 has none and
  // forces 0.  Strictly below depth+1 means some extension splits the group
  // or is missing, i.e. the pattern is left-closed.
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> left_lcp(t.node_count(), kInf);
  for (const std::uint32_t v : t.post_order()) {
    ++res.node_visits;
    const Node& nd = t.node(v);
    if (nd.is_leaf()) {
      left_lcp[v] = nd.witness == 0 ? 0 : nd.depth + 1;
      continue;
    }
    std::uint32_t best = kInf;
    for (const ChildEntry& e : t.children(v)) {
      ++res.node_visits;
      best = std::min(best, left_lcp[e.node]);
      const std::uint32_t wu = t.node(e.node).witness;
      if (nd.witness == 0 || wu == 0) {
        best = 0;
      } else {
        const std::uint32_t anc =
            lca.lca(t.leaf_index(nd.witness - 1), t.leaf_index(wu - 1));
        best = std::min(best, t.node(anc).depth);
      }
    }
    left_lcp[v] = best;
    const bool left_closed = best < nd.depth + 1;
    if (v != t.root() && nd.is_branching() &&
        static_cast<std::int64_t>(counts[v]) >= p.tau && left_closed)
      res.reports.push_back(PatternReport{nd.witness, nd.depth, counts[v], v});
  }
  sort_reports(res.reports);
  return res;
}

std::pair<PrefCode, RankSeq> decode_report(const OpSuffixTree& t, const PatternReport& r) {
  if (r.length == 0) throw std::invalid_argument("decode_report: zero length");
  const std::size_t lo = r.witness_start;
  const std::size_t hi = lo + r.length - 1;
  return {pref_code(t.series(), lo, hi), rank_pattern(t.series(), lo, hi)};
}

}  // namespace opst
