#pragma once

// Plain bit vector with word-granular rank scaffolding.  rank1(i) counts set
// bits in [0, i); select is realized by binary search over the cumulative
// word counts, so no extra tables are stored.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opst {

class RankBitVector {
 public:
  RankBitVector() = default;
  explicit RankBitVector(std::size_t n_bits)
      : n_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i, bool v) {
    check_pos(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  bool get(std::size_t i) const {
    check_pos(i);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  // Builds the cumulative counts; must be called after the last set().
  void finalize() {
    cum_.assign(words_.size() + 1, 0);
    for (std::size_t k = 0; k < words_.size(); ++k)
      cum_[k + 1] = cum_[k] + static_cast<std::uint32_t>(__builtin_popcountll(words_[k]));
    finalized_ = true;
  }

  // Set bits in [0, i).
  std::size_t rank1(std::size_t i) const {
    if (i > n_) throw std::out_of_range("rank1: index " + std::to_string(i));
    const std::size_t word = i >> 6;
    std::size_t r = cum_[word];
    const std::size_t rem = i & 63;
    if (rem) r += __builtin_popcountll(words_[word] & ((std::uint64_t{1} << rem) - 1));
    return r;
  }

  std::size_t rank0(std::size_t i) const { return i - rank1(i); }

  std::size_t count_ones() const { return cum_.back(); }

  // Position of the k-th set bit, k in [1, count_ones()].
  std::size_t select1(std::size_t k) const {
    if (k == 0 || k > count_ones())
      throw std::out_of_range("select1: k=" + std::to_string(k));
    // Last word with cum_ < k, then scan inside it.
    std::size_t lo = 0, hi = words_.size();
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cum_[mid] < k)
        lo = mid;
      else
        hi = mid;
    }
    std::uint64_t word = words_[lo];
    std::size_t need = k - cum_[lo];
    for (std::size_t b = 0;; ++b) {
      if ((word >> b) & 1) {
        if (--need == 0) return (lo << 6) + b;
      }
    }
  }

  // Position of the k-th clear bit, k in [1, size() - count_ones()].
  std::size_t select0(std::size_t k) const {
    if (k == 0 || k > n_ - count_ones())
      throw std::out_of_range("select0: k=" + std::to_string(k));
    std::size_t lo = 0, hi = words_.size();
    auto zeros_before = [&](std::size_t word) { return (word << 6) - cum_[word]; };
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (zeros_before(mid) < k)
        lo = mid;
      else
        hi = mid;
    }
    std::uint64_t word = words_[lo];
    std::size_t need = k - zeros_before(lo);
    for (std::size_t b = 0;; ++b) {
      if (!((word >> b) & 1)) {
        if (--need == 0) return (lo << 6) + b;
      }
    }
  }

  std::size_t memory_bytes() const {
    return words_.size() * sizeof(std::uint64_t) + cum_.size() * sizeof(std::uint32_t);
  }

  bool finalized() const { return finalized_; }

 private:
  void check_pos(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("bit index " + std::to_string(i));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> cum_{0};
  bool finalized_ = false;
};

}  // namespace opst
