#include "opst/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace opst {

namespace {

void check_range(std::size_t i, std::size_t j, std::size_t n, const char* who) {
  if (i > j || j >= n)
    throw std::invalid_argument(std::string(who) + ": invalid range [" +
                                std::to_string(i) + "," + std::to_string(j) +
                                "] for n=" + std::to_string(n));
}

std::size_t levels_for(Letter sigma) {
  std::size_t l = 0;
  while ((std::size_t{1} << l) < static_cast<std::size_t>(sigma)) ++l;
  return l;
}

}  // namespace

WaveletOracle::WaveletOracle(const Series& s, std::size_t scan_cutoff) {
  n_ = s.size();
  sigma_ = s.sigma;
  scan_cutoff_ = scan_cutoff;
  if (n_ == 0) throw std::invalid_argument("WaveletOracle: empty series");
  if (sigma_ <= 0) throw std::invalid_argument("WaveletOracle: sigma must be positive");
  for (Letter v : s.letters)
    if (v < 0 || v >= sigma_)
      throw std::invalid_argument("WaveletOracle: letter out of [0, sigma)");
  if (sigma_ <= 256) {
    raw8_.assign(s.letters.begin(), s.letters.end());
  } else if (sigma_ <= 65536) {
    raw16_.assign(s.letters.begin(), s.letters.end());
  } else {
    raw32_ = s.letters;
  }
  nlevels_ = levels_for(sigma_);
  levels_.assign(nlevels_, RankBitVector{});
  for (auto& lv : levels_) lv = RankBitVector(n_);

  // Fill levels by stable partitioning each node's subsequence on the middle
  // of its padded symbol range.  Every position descends through all levels.
  struct Job {
    std::size_t level, offset;
    std::vector<Letter> seq;
    Letter sym_base;
  };
  std::vector<Job> stack;
  stack.push_back({0, 0, s.letters, 0});
  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();
    if (job.level == nlevels_) continue;
    const Letter half = static_cast<Letter>(std::size_t{1} << (nlevels_ - job.level - 1));
    const Letter mid = job.sym_base + half;
    RankBitVector& bv = levels_[job.level];
    std::vector<Letter> left, right;
    left.reserve(job.seq.size());
    for (std::size_t t = 0; t < job.seq.size(); ++t) {
      const bool bit = job.seq[t] >= mid;
      bv.set(job.offset + t, bit);
      (bit ? right : left).push_back(job.seq[t]);
    }
    std::size_t nleft = left.size();
    stack.push_back({job.level + 1, job.offset + nleft, std::move(right), mid});
    stack.push_back({job.level + 1, job.offset, std::move(left), job.sym_base});
  }
  for (auto& lv : levels_) lv.finalize();

  // Positions sorted stably by letter = the bottom ordering.  Counting sort
  // when the alphabet is not much larger than the series; a sparse range
  // alphabet would make the counter array the dominant allocation.
  bottom_.resize(n_);
  if (static_cast<std::size_t>(sigma_) <= 4 * n_) {
    std::vector<std::uint32_t> cnt(static_cast<std::size_t>(sigma_) + 1, 0);
    for (Letter v : s.letters) ++cnt[static_cast<std::size_t>(v) + 1];
    for (std::size_t v = 1; v <= static_cast<std::size_t>(sigma_); ++v)
      cnt[v] += cnt[v - 1];
    for (std::size_t p = 0; p < n_; ++p)
      bottom_[cnt[static_cast<std::size_t>(s.letters[p])]++] =
          static_cast<std::uint32_t>(p);
  } else {
    for (std::size_t p = 0; p < n_; ++p) bottom_[p] = static_cast<std::uint32_t>(p);
    std::stable_sort(bottom_.begin(), bottom_.end(),
                     [&s](std::uint32_t a, std::uint32_t b) {
                       return s.letters[a] < s.letters[b];
                     });
  }
}

namespace {

// Descent state: node interval [ns, ne) and query subrange [lo, hi) in the
// position space of the current level; sym is the node's lowest symbol.
struct Walk {
  std::size_t level, ns, ne, lo, hi;
  Letter sym;
};

struct ChildSplit {
  std::size_t left_ns, left_ne, left_lo, left_hi;
  std::size_t right_ns, right_ne, right_lo, right_hi;
};

ChildSplit split(const RankBitVector& bv, const Walk& s) {
  const std::size_t z_ns = bv.rank0(s.ns);
  const std::size_t z_node = bv.rank0(s.ne) - z_ns;
  const std::size_t z_lo = bv.rank0(s.lo) - z_ns;
  const std::size_t z_hi = bv.rank0(s.hi) - z_ns;
  ChildSplit c;
  c.left_ns = s.ns;
  c.left_ne = s.ns + z_node;
  c.left_lo = s.ns + z_lo;
  c.left_hi = s.ns + z_hi;
  c.right_ns = s.ns + z_node;
  c.right_ne = s.ne;
  c.right_lo = s.ns + z_node + ((s.lo - s.ns) - z_lo);
  c.right_hi = s.ns + z_node + ((s.hi - s.ns) - z_hi);
  return c;
}

}  // namespace

namespace {

template <class T>
std::optional<std::size_t> scan_pred_impl(const T* a, std::size_t i, std::size_t j,
                                          Letter c) {
  std::optional<std::size_t> best;
  for (std::size_t k = i; k <= j; ++k) {
    const Letter v = static_cast<Letter>(a[k]);
    if (v <= c && (!best || v >= static_cast<Letter>(a[*best]))) best = k;
  }
  return best;
}

template <class T>
std::optional<std::size_t> scan_succ_impl(const T* a, std::size_t i, std::size_t j,
                                          Letter c) {
  std::optional<std::size_t> best;
  for (std::size_t k = i; k <= j; ++k) {
    const Letter v = static_cast<Letter>(a[k]);
    if (v >= c && (!best || v <= static_cast<Letter>(a[*best]))) best = k;
  }
  return best;
}

// One fused pass resolves both code components.
template <class T>
CodePair fused_scan_impl(const T* a, std::size_t i, std::size_t j, Letter c) {
  CodePair out;
  Letter pv = 0, sv = 0;
  for (std::size_t k = i; k < j; ++k) {
    const Letter v = static_cast<Letter>(a[k]);
    if (v <= c && (out.pred < 0 || v >= pv)) {
      out.pred = static_cast<std::int32_t>(k - i);
      pv = v;
    }
    if (v >= c && (out.succ < 0 || v <= sv)) {
      out.succ = static_cast<std::int32_t>(k - i);
      sv = v;
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> WaveletOracle::scan_pred(std::size_t i, std::size_t j,
                                                    Letter c) const {
  if (stats_) stats_->scanned_letters += j - i + 1;
  if (!raw8_.empty()) return scan_pred_impl(raw8_.data(), i, j, c);
  if (!raw16_.empty()) return scan_pred_impl(raw16_.data(), i, j, c);
  return scan_pred_impl(raw32_.data(), i, j, c);
}

std::optional<std::size_t> WaveletOracle::scan_succ(std::size_t i, std::size_t j,
                                                    Letter c) const {
  if (stats_) stats_->scanned_letters += j - i + 1;
  if (!raw8_.empty()) return scan_succ_impl(raw8_.data(), i, j, c);
  if (!raw16_.empty()) return scan_succ_impl(raw16_.data(), i, j, c);
  return scan_succ_impl(raw32_.data(), i, j, c);
}

std::optional<std::size_t> WaveletOracle::range_pred_pos(std::size_t i, std::size_t j,
                                                         Letter c) const {
  check_range(i, j, n_, "range_pred_pos");
  if (stats_) ++stats_->queries;
  if (j - i < scan_cutoff_) return scan_pred(i, j, c);
  Walk s{0, 0, n_, i, j + 1, 0};
  std::optional<Walk> fallback;
  while (true) {
    if (stats_) ++stats_->level_visits;
    if (s.level == nlevels_) {
      if (s.sym <= c) return bottom_[s.hi - 1];
      break;  // probe below the whole alphabet
    }
    const Letter half = static_cast<Letter>(std::size_t{1} << (nlevels_ - s.level - 1));
    const Letter mid = s.sym + half;
    const ChildSplit cs = split(levels_[s.level], s);
    if (c < mid) {
      if (cs.left_lo == cs.left_hi) break;
      s = Walk{s.level + 1, cs.left_ns, cs.left_ne, cs.left_lo, cs.left_hi, s.sym};
    } else {
      if (cs.left_lo != cs.left_hi)
        fallback = Walk{s.level + 1, cs.left_ns, cs.left_ne, cs.left_lo, cs.left_hi, s.sym};
      if (cs.right_lo == cs.right_hi) break;
      s = Walk{s.level + 1, cs.right_ns, cs.right_ne, cs.right_lo, cs.right_hi, mid};
    }
  }
  if (!fallback) return std::nullopt;
  // Maximum of the deepest fallback subtree, rightmost occurrence.
  s = *fallback;
  while (s.level < nlevels_) {
    if (stats_) ++stats_->level_visits;
    const Letter half = static_cast<Letter>(std::size_t{1} << (nlevels_ - s.level - 1));
    const ChildSplit cs = split(levels_[s.level], s);
    if (cs.right_lo != cs.right_hi)
      s = Walk{s.level + 1, cs.right_ns, cs.right_ne, cs.right_lo, cs.right_hi,
               static_cast<Letter>(s.sym + half)};
    else
      s = Walk{s.level + 1, cs.left_ns, cs.left_ne, cs.left_lo, cs.left_hi, s.sym};
  }
  return bottom_[s.hi - 1];
}

std::optional<std::size_t> WaveletOracle::range_succ_pos(std::size_t i, std::size_t j,
                                                         Letter c) const {
  check_range(i, j, n_, "range_succ_pos");
  if (stats_) ++stats_->queries;
  if (j - i < scan_cutoff_) return scan_succ(i, j, c);
  Walk s{0, 0, n_, i, j + 1, 0};
  std::optional<Walk> fallback;
  while (true) {
    if (stats_) ++stats_->level_visits;
    if (s.level == nlevels_) {
      if (s.sym >= c) return bottom_[s.hi - 1];
      break;  // probe above the whole alphabet
    }
    const Letter half = static_cast<Letter>(std::size_t{1} << (nlevels_ - s.level - 1));
    const Letter mid = s.sym + half;
    const ChildSplit cs = split(levels_[s.level], s);
    if (c >= mid) {
      if (cs.right_lo == cs.right_hi) break;
      s = Walk{s.level + 1, cs.right_ns, cs.right_ne, cs.right_lo, cs.right_hi, mid};
    } else {
      if (cs.right_lo != cs.right_hi)
        fallback = Walk{s.level + 1, cs.right_ns, cs.right_ne, cs.right_lo, cs.right_hi, mid};
      if (cs.left_lo == cs.left_hi) break;
      s = Walk{s.level + 1, cs.left_ns, cs.left_ne, cs.left_lo, cs.left_hi, s.sym};
    }
  }
  if (!fallback) return std::nullopt;
  // Minimum of the deepest fallback subtree, rightmost occurrence.
  s = *fallback;
  while (s.level < nlevels_) {
    if (stats_) ++stats_->level_visits;
    const Letter half = static_cast<Letter>(std::size_t{1} << (nlevels_ - s.level - 1));
    const ChildSplit cs = split(levels_[s.level], s);
    if (cs.left_lo != cs.left_hi)
      s = Walk{s.level + 1, cs.left_ns, cs.left_ne, cs.left_lo, cs.left_hi, s.sym};
    else
      s = Walk{s.level + 1, cs.right_ns, cs.right_ne, cs.right_lo, cs.right_hi,
               static_cast<Letter>(s.sym + half)};
  }
  return bottom_[s.hi - 1];
}

CodePair WaveletOracle::last_code(std::size_t i, std::size_t j) const {
  check_range(i, j, n_, "last_code");
  if (i == j) return CodePair{};
  const Letter c = letter_at(j);
  if (j - i <= scan_cutoff_) {
    if (stats_) {
      stats_->queries += 2;
      stats_->scanned_letters += j - i;
    }
    if (!raw8_.empty()) return fused_scan_impl(raw8_.data(), i, j, c);
    if (!raw16_.empty()) return fused_scan_impl(raw16_.data(), i, j, c);
    return fused_scan_impl(raw32_.data(), i, j, c);
  }
  CodePair out;
  if (auto p = range_pred_pos(i, j - 1, c)) out.pred = static_cast<std::int32_t>(*p - i);
  if (auto q = range_succ_pos(i, j - 1, c)) out.succ = static_cast<std::int32_t>(*q - i);
  return out;
}

std::size_t WaveletOracle::memory_bytes() const {
  std::size_t b = bottom_.size() * sizeof(std::uint32_t) + raw8_.size() +
                  raw16_.size() * 2 + raw32_.size() * sizeof(Letter);
  for (const auto& lv : levels_) b += lv.memory_bytes();
  return b;
}

std::vector<Letter> WaveletOracle::reconstruct() const {
  std::vector<Letter> out(n_, 0);
  for (std::size_t p = 0; p < n_; ++p) {
    std::size_t pos = p, ns = 0, ne = n_;
    Letter sym = 0;
    for (std::size_t lv = 0; lv < nlevels_; ++lv) {
      const RankBitVector& bv = levels_[lv];
      const Letter half = static_cast<Letter>(std::size_t{1} << (nlevels_ - lv - 1));
      const std::size_t z_ns = bv.rank0(ns);
      const std::size_t z_node = bv.rank0(ne) - z_ns;
      if (bv.get(pos)) {
        sym = static_cast<Letter>(sym + half);
        pos = ns + z_node + ((pos - ns) - (bv.rank0(pos) - z_ns));
        ns += z_node;
      } else {
        pos = ns + (bv.rank0(pos) - z_ns);
        ne = ns + z_node;
      }
    }
    out[p] = sym;
  }
  return out;
}

CodePair NaiveScanOracle::last_code(std::size_t i, std::size_t j) const {
  check_range(i, j, w_.size(), "last_code");
  return last_code_naive(w_, i, j);
}

std::optional<std::size_t> NaiveScanOracle::range_pred_pos(std::size_t i, std::size_t j,
                                                           Letter c) const {
  check_range(i, j, w_.size(), "range_pred_pos");
  std::optional<std::size_t> best;
  for (std::size_t k = i; k <= j; ++k)
    if (w_[k] <= c && (!best || w_[k] >= w_[*best])) best = k;
  return best;
}

std::optional<std::size_t> NaiveScanOracle::range_succ_pos(std::size_t i, std::size_t j,
                                                           Letter c) const {
  check_range(i, j, w_.size(), "range_succ_pos");
  std::optional<std::size_t> best;
  for (std::size_t k = i; k <= j; ++k)
    if (w_[k] >= c && (!best || w_[k] <= w_[*best])) best = k;
  return best;
}

}  // namespace opst
