#include "opst/baseline.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "opst/codes.hpp"
#include "opst/oracle.hpp"

namespace opst {

namespace {

// Largest subgroup size after extending every member window of a group by
// one position on the given side.  Windows that cannot extend drop out.
struct ExtensionScan {
  std::size_t best = 0;  // size of the biggest extension group
};

ExtensionScan scan_right(const Series& w, const std::vector<std::size_t>& wins,
                         std::size_t m) {
  const std::size_t n = w.letters.size();
  std::map<PrefCode, std::size_t> ext;
  ExtensionScan r;
  for (std::size_t i : wins)
    if (i + m <= n - 1) r.best = std::max(r.best, ++ext[pref_code(w, i, i + m)]);
  return r;
}

ExtensionScan scan_left(const Series& w, const std::vector<std::size_t>& wins,
                        std::size_t m) {
  std::map<PrefCode, std::size_t> ext;
  ExtensionScan r;
  for (std::size_t i : wins)
    if (i >= 1) r.best = std::max(r.best, ++ext[pref_code(w, i - 1, i + m - 1)]);
  return r;
}

}  // namespace

BruteForceResult brute_force_mine(const Series& w, std::int64_t tau) {
  const std::size_t n = w.letters.size();
  if (n == 0) throw std::invalid_argument("brute_force_mine: empty series");
  if (n > 64) throw std::invalid_argument("brute_force_mine: series longer than 64");
  if (tau < 2) throw std::invalid_argument("brute_force_mine: tau must be at least 2");
  const auto utau = static_cast<std::size_t>(tau);

  BruteForceResult out;
  for (std::size_t m = 1; m <= n; ++m) {
    std::map<PrefCode, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i + m <= n; ++i)
      groups[pref_code(w, i, i + m - 1)].push_back(i);
    for (const auto& [code, wins] : groups) {
      if (wins.size() < utau) continue;
      // An extension occurs exactly where a member window extends, so the
      // subgroup sizes below are the true frequencies of the extensions.
      const ExtensionScan right = scan_right(w, wins, m);
      const ExtensionScan left = scan_left(w, wins, m);
      if (right.best < utau && left.best < utau) out.maximal.push_back(code);
      if (right.best < wins.size() && left.best < wins.size())
        out.closed.push_back(code);
    }
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  std::sort(out.closed.begin(), out.closed.end());
  return out;
}

namespace {

struct LevelwiseResult {
  std::vector<PrefCode> maximal;
  std::vector<PrefCode> closed;
};

// One pass per pattern length.  A length-(m+1) group refines a length-m
// group by the code of the appended letter, so groups are exact occurrence
// sets as long as every window of a frequent group keeps being refined.
// Windows of infrequent groups go dead; a dead window can never reappear in
// a frequent refinement because group sizes only shrink along a refinement
// chain.
LevelwiseResult levelwise_mine(const Series& w, const LetterOracle& o,
                               std::int64_t tau) {
  const std::size_t n = w.letters.size();
  if (n == 0) throw std::invalid_argument("levelwise_mine: empty series");
  if (tau < 2) throw std::invalid_argument("levelwise_mine: tau must be at least 2");
  if (o.n() != n) throw std::invalid_argument("levelwise_mine: oracle size mismatch");
  const auto utau = static_cast<std::size_t>(tau);

  LevelwiseResult out;

  // Length 1: every window has the same code.
  std::vector<std::int64_t> gid(n, 0);
  std::vector<std::size_t> sizes{n};
  std::vector<std::size_t> first_win{0};
  std::size_t m = 1;

  while (true) {
    const std::size_t ngroups = sizes.size();
    bool any_frequent = false;
    for (std::size_t s : sizes) any_frequent = any_frequent || s >= utau;
    if (!any_frequent) break;

    std::vector<std::int64_t> next_gid(n - m, -1);
    std::vector<std::size_t> next_sizes;
    std::vector<std::size_t> next_first;
    std::vector<std::size_t> next_parent;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> ids;
    for (std::size_t i = 0; i + m <= n - 1; ++i) {
      const std::int64_t g = gid[i];
      if (g < 0 || sizes[static_cast<std::size_t>(g)] < utau) continue;
      const std::int64_t code = code_to_int(o.last_code(i, i + m), m + 1);
      auto [it, fresh] = ids.try_emplace(
          {g, code}, static_cast<std::int64_t>(next_sizes.size()));
      if (fresh) {
        next_sizes.push_back(0);
        next_first.push_back(i);
        next_parent.push_back(static_cast<std::size_t>(g));
      }
      next_gid[i] = it->second;
      ++next_sizes[static_cast<std::size_t>(it->second)];
    }

    std::vector<char> right_freq(ngroups, 0), right_tight(ngroups, 0);
    std::vector<char> left_freq(ngroups, 0), left_tight(ngroups, 0);
    for (std::size_t ng = 0; ng < next_sizes.size(); ++ng) {
      const std::size_t parent = next_parent[ng];
      if (next_sizes[ng] >= utau) right_freq[parent] = 1;
      if (next_sizes[ng] == sizes[parent]) right_tight[parent] = 1;
      if (next_sizes[ng] < utau) continue;
      // Dropping the first letter of a frequent length-(m+1) group lands in
      // one length-m group, read off any member; that group holds at least
      // the shifted members, so it is frequent and still alive.
      const std::int64_t p = gid[next_first[ng] + 1];
      if (p < 0) throw std::logic_error("levelwise_mine: dead suffix group");
      left_freq[static_cast<std::size_t>(p)] = 1;
      if (next_sizes[ng] == sizes[static_cast<std::size_t>(p)])
        left_tight[static_cast<std::size_t>(p)] = 1;
    }

    for (std::size_t g = 0; g < ngroups; ++g) {
      if (sizes[g] < utau) continue;
      const std::size_t i = first_win[g];
      if (!right_freq[g] && !left_freq[g])
        out.maximal.push_back(pref_code(w, i, i + m - 1));
      if (!right_tight[g] && !left_tight[g])
        out.closed.push_back(pref_code(w, i, i + m - 1));
    }

    gid = std::move(next_gid);
    sizes = std::move(next_sizes);
    first_win = std::move(next_first);
    ++m;
  }

  std::sort(out.maximal.begin(), out.maximal.end());
  std::sort(out.closed.begin(), out.closed.end());
  return out;
}

bool window_matches(const LetterOracle& o, const PrefCode& p, std::size_t i) {
  const std::size_t m = p.codes.size();
  for (std::size_t t = 0; t < m; ++t)
    if (o.last_code(i, i + t) != p.codes[t]) return false;
  return true;
}

}  // namespace

std::vector<PrefCode> levelwise_maximal(const Series& w, const LetterOracle& o,
                                        std::int64_t tau) {
  return levelwise_mine(w, o, tau).maximal;
}

std::vector<PrefCode> levelwise_closed(const Series& w, const LetterOracle& o,
                                       std::int64_t tau) {
  return levelwise_mine(w, o, tau).closed;
}

std::uint64_t count_occurrences_serial(const Series& w, const LetterOracle& o,
                                       const PrefCode& p) {
  const std::size_t n = w.letters.size();
  const std::size_t m = p.codes.size();
  if (m == 0) throw std::invalid_argument("count_occurrences: empty pattern");
  if (o.n() != n) throw std::invalid_argument("count_occurrences: oracle size mismatch");
  if (m > n) return 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + m <= n; ++i)
    total += window_matches(o, p, i) ? 1 : 0;
  return total;
}

std::uint64_t count_occurrences(const Series& w, const LetterOracle& o,
                                const PrefCode& p) {
  const std::size_t n = w.letters.size();
  const std::size_t m = p.codes.size();
  if (m == 0) throw std::invalid_argument("count_occurrences: empty pattern");
  if (o.n() != n) throw std::invalid_argument("count_occurrences: oracle size mismatch");
  if (m > n) return 0;
  // Windows are independent; the oracle must have no stats sink attached
  // while threads share it.
  std::uint64_t total = 0;
  const auto last = static_cast<std::int64_t>(n - m);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) reduction(+ : total)
#endif
  for (std::int64_t i = 0; i <= last; ++i)
    total += window_matches(o, p, static_cast<std::size_t>(i)) ? 1 : 0;
  return total;
}

std::vector<std::vector<std::uint64_t>> feature_matrix(
    const std::vector<Series>& series, const std::vector<PrefCode>& patterns) {
  if (series.empty()) throw std::invalid_argument("feature_matrix: no series");
  if (patterns.empty()) throw std::invalid_argument("feature_matrix: no patterns");
  std::vector<std::vector<std::uint64_t>> out(
      series.size(), std::vector<std::uint64_t>(patterns.size(), 0));
  for (std::size_t s = 0; s < series.size(); ++s) {
    if (series[s].letters.empty()) continue;
    WaveletOracle o(series[s]);
    for (std::size_t p = 0; p < patterns.size(); ++p)
      out[s][p] = count_occurrences(series[s], o, patterns[p]);
  }
  return out;
}

}  // namespace opst
