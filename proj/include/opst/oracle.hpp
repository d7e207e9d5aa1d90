#pragma once

// Rightmost range predecessor/successor queries over a fixed series, plus the
// derived last-letter code query used throughout tree construction.
//
// The indexed implementation is a levelwise wavelet decomposition over plain
// rank bit vectors: alphabet padded to a power of two, one bit vector per
// level, node intervals computed on the fly.  A query descends along the
// probe value's bit path recording the nearest sibling subrange, then takes
// the extreme of the deepest recorded fallback, so it touches at most
// 2*ceil(log2 sigma) + O(1) levels.
//
// Ranges not longer than a fixed cutoff are answered by a direct scan of a
// retained letter copy instead: construction asks overwhelmingly about
// short fragments, and the scan makes those queries independent of sigma.
// Both routes implement identical semantics (rightmost tie-break).

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "opst/bitvec.hpp"
#include "opst/codes.hpp"

namespace opst {

// Counter sink for instrumented tests; attach only from a single thread.
struct OracleStats {
  std::uint64_t queries = 0;
  std::uint64_t level_visits = 0;
  std::uint64_t scanned_letters = 0;
};

class LetterOracle {
 public:
  virtual ~LetterOracle() = default;

  virtual std::size_t n() const = 0;
  virtual Letter sigma() const = 0;

  // Code pair of the fragment w[i..j] relative to position i.
  virtual CodePair last_code(std::size_t i, std::size_t j) const = 0;

  // Rightmost k in [i, j] with w[k] = max{w[k'] <= c}, or nothing.
  virtual std::optional<std::size_t> range_pred_pos(std::size_t i, std::size_t j,
                                                    Letter c) const = 0;

  // Rightmost k in [i, j] with w[k] = min{w[k'] >= c}, or nothing.
  virtual std::optional<std::size_t> range_succ_pos(std::size_t i, std::size_t j,
                                                    Letter c) const = 0;

  virtual std::size_t memory_bytes() const = 0;

  // Decodes the stored series back; the round trip must be exact.
  virtual std::vector<Letter> reconstruct() const = 0;
};

class WaveletOracle final : public LetterOracle {
 public:
  // scan_cutoff caps the range length answered by direct scan; pass 0 to
  // force every query through the wavelet descent (used by tests to exercise
  // that path on small inputs).
  explicit WaveletOracle(const Series& s, std::size_t scan_cutoff = kScanCutoff);

  std::size_t n() const override { return n_; }
  Letter sigma() const override { return sigma_; }
  CodePair last_code(std::size_t i, std::size_t j) const override;
  std::optional<std::size_t> range_pred_pos(std::size_t i, std::size_t j,
                                            Letter c) const override;
  std::optional<std::size_t> range_succ_pos(std::size_t i, std::size_t j,
                                            Letter c) const override;
  std::size_t memory_bytes() const override;
  std::vector<Letter> reconstruct() const override;

  std::size_t levels() const { return levels_.size(); }
  void set_stats_sink(OracleStats* sink) { stats_ = sink; }

  // Default longest range answered by scanning instead of descending.
  static constexpr std::size_t kScanCutoff = 64;

  std::size_t scan_cutoff() const { return scan_cutoff_; }

 private:
  std::optional<std::size_t> scan_pred(std::size_t i, std::size_t j, Letter c) const;
  std::optional<std::size_t> scan_succ(std::size_t i, std::size_t j, Letter c) const;
  Letter letter_at(std::size_t k) const {
    if (!raw8_.empty()) return raw8_[k];
    if (!raw16_.empty()) return raw16_[k];
    return raw32_[k];
  }

  std::size_t n_ = 0;
  Letter sigma_ = 0;
  std::size_t scan_cutoff_ = kScanCutoff;
  std::size_t nlevels_ = 0;  // ceil(log2 sigma)
  // Letter copy backing the scan route, stored at the narrowest width that
  // holds sigma - 1; scans are bandwidth bound, so width is speed.
  std::vector<std::uint8_t> raw8_;
  std::vector<std::uint16_t> raw16_;
  std::vector<Letter> raw32_;
  std::vector<RankBitVector> levels_;
  // Positions sorted by (letter, position); the bottom ordering of the
  // decomposition, used to map a leaf hit back to its series position.
  std::vector<std::uint32_t> bottom_;
  OracleStats* stats_ = nullptr;
};

// Linear-scan oracle behind the same interface; the testing reference.
class NaiveScanOracle final : public LetterOracle {
 public:
  explicit NaiveScanOracle(const Series& s) : w_(s) {}

  std::size_t n() const override { return w_.size(); }
  Letter sigma() const override { return w_.sigma; }
  CodePair last_code(std::size_t i, std::size_t j) const override;
  std::optional<std::size_t> range_pred_pos(std::size_t i, std::size_t j,
                                            Letter c) const override;
  std::optional<std::size_t> range_succ_pos(std::size_t i, std::size_t j,
                                            Letter c) const override;
  std::size_t memory_bytes() const override {
    return w_.letters.size() * sizeof(Letter);
  }
  std::vector<Letter> reconstruct() const override { return w_.letters; }

 private:
  Series w_;
};

}  // namespace opst
