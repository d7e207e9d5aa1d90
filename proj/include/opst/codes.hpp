#pragma once

// Integer time series and order-preserving pattern codes.
//
// A fragment w[i..j] is summarized by the code pair of its last letter:
// the fragment-relative positions of the rightmost predecessor occurrence
// (largest value <= last letter) and the rightmost successor occurrence
// (smallest value >= last letter) among the earlier letters.  Two fragments
// are order-preserving equal exactly when their per-prefix code sequences
// match, which is what the suffix tree indexes.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace opst {

using Letter = std::int32_t;

// Series over the integer alphabet [0, sigma); letters may be absent (a
// range-declared alphabet keeps values that never occur).
struct Series {
  std::vector<Letter> letters;
  Letter sigma = 0;

  std::size_t size() const { return letters.size(); }
  Letter operator[](std::size_t i) const { return letters[i]; }
  bool operator==(const Series&) const = default;
};

// Sorts the distinct input values and replaces each by its rank, so only the
// relative order survives.  Works for any totally ordered value type; order
// ties collapse onto one letter.
template <typename T>
Series remap_alphabet(std::span<const T> values) {
  if (values.empty()) throw std::invalid_argument("remap_alphabet: empty input");
  std::vector<T> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Series s;
  s.letters.reserve(values.size());
  for (const T& v : values) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    s.letters.push_back(static_cast<Letter>(it - sorted.begin()));
  }
  s.sigma = static_cast<Letter>(sorted.size());
  return s;
}

template <typename T>
Series remap_alphabet(const std::vector<T>& values) {
  return remap_alphabet(std::span<const T>(values));
}

// One (pred, succ) position pair; kNone marks an absent side.
struct CodePair {
  static constexpr std::int32_t kNone = -1;
  std::int32_t pred = kNone;
  std::int32_t succ = kNone;

  bool operator==(const CodePair&) const = default;
  auto operator<=>(const CodePair&) const = default;

  std::string str() const {
    return "(" + std::to_string(pred) + "," + std::to_string(succ) + ")";
  }
};

// Code sequence of all prefixes of a fragment; element t codes the length
// t+1 prefix, so element 0 is always (-1,-1).
struct PrefCode {
  std::vector<CodePair> codes;

  std::size_t size() const { return codes.size(); }
  const CodePair& operator[](std::size_t i) const { return codes[i]; }
  bool operator==(const PrefCode&) const = default;
  auto operator<=>(const PrefCode&) const = default;

  // Canonical text form, e.g. "(-1,-1)(0,-1)(1,1)".
  std::string str() const {
    std::string out;
    for (const CodePair& c : codes) out += c.str();
    return out;
  }
};

using RankSeq = std::vector<std::int32_t>;

// Code pair of the full span: rightmost positions of the tightest values
// below and above the last letter.  Linear scan; the reference against which
// the indexed oracle is tested.
template <typename T>
CodePair last_code_of(std::span<const T> frag) {
  if (frag.empty()) throw std::invalid_argument("last_code_of: empty fragment");
  const T& last = frag.back();
  CodePair out;
  bool have_p = false, have_s = false;
  T best_p{}, best_s{};
  for (std::size_t k = 0; k + 1 < frag.size(); ++k) {
    const T& v = frag[k];
    if (v <= last && (!have_p || v >= best_p)) {
      have_p = true;
      best_p = v;
      out.pred = static_cast<std::int32_t>(k);
    }
    if (v >= last && (!have_s || v <= best_s)) {
      have_s = true;
      best_s = v;
      out.succ = static_cast<std::int32_t>(k);
    }
  }
  return out;
}

template <typename T>
PrefCode pref_code_of(std::span<const T> frag) {
  if (frag.empty()) throw std::invalid_argument("pref_code_of: empty fragment");
  PrefCode pc;
  pc.codes.reserve(frag.size());
  for (std::size_t len = 1; len <= frag.size(); ++len)
    pc.codes.push_back(last_code_of(frag.first(len)));
  return pc;
}

// Rank of each element among the distinct values of the fragment, 1-based.
template <typename T>
RankSeq rank_pattern_of(std::span<const T> frag) {
  if (frag.empty()) throw std::invalid_argument("rank_pattern_of: empty fragment");
  std::vector<T> sorted(frag.begin(), frag.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  RankSeq r;
  r.reserve(frag.size());
  for (const T& v : frag) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    r.push_back(static_cast<std::int32_t>(it - sorted.begin()) + 1);
  }
  return r;
}

// Order-preserving equality straight from the definition: equal length and
// agreeing <,=,> relations for every position pair.  Kept independent of the
// code route so the two can be cross-checked.
template <typename A, typename B>
bool op_equal(std::span<const A> x, std::span<const B> y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t l = k + 1; l < x.size(); ++l) {
      int cx = x[k] < x[l] ? -1 : (x[k] == x[l] ? 0 : 1);
      int cy = y[k] < y[l] ? -1 : (y[k] == y[l] ? 0 : 1);
      if (cx != cy) return false;
    }
  return true;
}

namespace detail {
inline std::span<const Letter> fragment(const Series& s, std::size_t i, std::size_t j) {
  if (i > j || j >= s.size())
    throw std::invalid_argument("fragment: invalid range [" + std::to_string(i) +
                                "," + std::to_string(j) + "] for n=" +
                                std::to_string(s.size()));
  return std::span<const Letter>(s.letters).subspan(i, j - i + 1);
}
}  // namespace detail

inline CodePair last_code_naive(const Series& s, std::size_t i, std::size_t j) {
  return last_code_of(detail::fragment(s, i, j));
}

inline PrefCode pref_code(const Series& s, std::size_t i, std::size_t j) {
  return pref_code_of(detail::fragment(s, i, j));
}

inline RankSeq rank_pattern(const Series& s, std::size_t i, std::size_t j) {
  return rank_pattern_of(detail::fragment(s, i, j));
}

inline bool op_equal(const Series& a, std::size_t i1, std::size_t j1,
                     const Series& b, std::size_t i2, std::size_t j2) {
  return op_equal(detail::fragment(a, i1, j1), detail::fragment(b, i2, j2));
}

// Order-preserving injection of code pairs into integers.  Both components
// live in [-1, n-2], so the image fits [0, (n+1)^2] and leaves every
// negative value free for reserved keys.
inline std::int64_t code_to_int(CodePair c, std::size_t n) {
  const auto lo = std::int64_t{-1};
  const auto hi = static_cast<std::int64_t>(n) - 2;
  if (c.pred < lo || c.pred > hi || c.succ < lo || c.succ > hi)
    throw std::invalid_argument("code_to_int: component out of range for n=" +
                                std::to_string(n));
  const auto m = static_cast<std::int64_t>(n) + 1;
  return (c.pred + 1) * m + c.succ + 1;
}

// Parses the canonical "(p,s)(p,s)..." form produced by PrefCode::str().
PrefCode parse_pref_code(const std::string& text);

}  // namespace opst
