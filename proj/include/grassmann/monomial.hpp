#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassmann {

/// 1-based index of a generator x_i (or of an indeterminate y_i in the free algebra).
using Index = std::uint32_t;

/// A word of the free monoid: letters may repeat and appear in any order.
using Word = std::vector<Index>;

/// Compares index sequences graded-lexicographically: shorter first, then
/// lexicographic. This is the display and iteration order for every term map.
inline std::strong_ordering graded_lex(std::span<const Index> a, std::span<const Index> b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

struct GradedLexLess {
  bool operator()(std::span<const Index> a, std::span<const Index> b) const {
    return graded_lex(a, b) < 0;
  }
};

struct SignedMonomial;

/// Canonical basis element x_{i1} x_{i2} ... x_{ik} with i1 < i2 < ... < ik.
/// The empty monomial is the unit.
class Monomial {
 public:
  Monomial() = default;

  /// Throws std::invalid_argument unless `indices` is strictly increasing and >= 1.
  explicit Monomial(std::vector<Index> indices) : indices_(std::move(indices)) {
    for (std::size_t t = 0; t < indices_.size(); ++t) {
      if (indices_[t] == 0) throw std::invalid_argument("generator index must be >= 1");
      if (t > 0 && indices_[t - 1] >= indices_[t])
        throw std::invalid_argument("monomial indices must be strictly increasing");
    }
  }

  static Monomial generator(Index i) { return Monomial(std::vector<Index>{i}); }

  std::span<const Index> indices() const noexcept { return indices_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  bool is_unit() const noexcept { return indices_.empty(); }
  Index max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

  bool contains(Index i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  /// Zero-based position of `i` in the sorted sequence, or -1 when absent.
  std::ptrdiff_t position(Index i) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
    if (it == indices_.end() || *it != i) return -1;
    return it - indices_.begin();
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return graded_lex(a.indices_, b.indices_);
  }

 private:
  // skips validation; callers guarantee strict ascent
  static Monomial trusted(std::vector<Index> indices) {
    Monomial m;
    m.indices_ = std::move(indices);
    return m;
  }

  std::vector<Index> indices_;

  friend SignedMonomial normalize_word(std::span<const Index> word);
  friend SignedMonomial multiply(const Monomial& a, const Monomial& b);
  friend Monomial without(const Monomial& m, Index i);
};

/// A monomial with sign +1 or -1, or zero when the source word repeated a letter.
struct SignedMonomial {
  int sign = 0;
  Monomial monomial;

  bool is_zero() const noexcept { return sign == 0; }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

namespace detail {

// Sorts `v[lo, hi)` and returns the number of inversions it contained.
inline std::uint64_t sort_counting_inversions(std::vector<Index>& v, std::vector<Index>& scratch,
                                              std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = sort_counting_inversions(v, scratch, lo, mid) +
                        sort_counting_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace detail

/// Quotient map of a word onto the canonical basis: x_j x_i -> -x_i x_j for
/// j > i and x_i x_i -> 0. The sign is the parity of the inversion count,
/// computed by merge sort in O(k log k).
inline SignedMonomial normalize_word(std::span<const Index> word) {
  std::vector<Index> letters(word.begin(), word.end());
  for (Index i : letters)
    if (i == 0) throw std::invalid_argument("generator index must be >= 1");
  std::vector<Index> scratch(letters.size());
  const std::uint64_t inversions = detail::sort_counting_inversions(letters, scratch, 0, letters.size());
  if (std::adjacent_find(letters.begin(), letters.end()) != letters.end()) return {};
  return {inversions % 2 == 0 ? 1 : -1, Monomial::trusted(std::move(letters))};
}

/// Product of two canonical monomials, merged in linear time. Each letter of
/// `b` has to cross every larger letter of `a`.
inline SignedMonomial multiply(const Monomial& a, const Monomial& b) {
  const auto& left = a.indices_;
  const auto& right = b.indices_;
  std::vector<Index> merged;
  merged.reserve(left.size() + right.size());
  std::uint64_t crossings = 0;
  std::size_t i = 0, j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i] == right[j]) return {};
    if (right[j] < left[i]) {
      crossings += left.size() - i;
      merged.push_back(right[j++]);
    } else {
      merged.push_back(left[i++]);
    }
  }
  merged.insert(merged.end(), left.begin() + static_cast<std::ptrdiff_t>(i), left.end());
  merged.insert(merged.end(), right.begin() + static_cast<std::ptrdiff_t>(j), right.end());
  return {crossings % 2 == 0 ? 1 : -1, Monomial::trusted(std::move(merged))};
}

/// `m` with generator `i` removed (unchanged if absent).
inline Monomial without(const Monomial& m, Index i) {
  std::vector<Index> rest;
  rest.reserve(m.degree());
  for (Index k : m.indices_)
    if (k != i) rest.push_back(k);
  return Monomial::trusted(std::move(rest));
}

/// All 2^n canonical monomials over x_1..x_n in graded-lex order.
inline std::vector<Monomial> basis(Index n) {
  if (n >= 31) throw std::invalid_argument("basis enumeration limited to n < 31");
  std::vector<Monomial> out;
  out.reserve(std::size_t{1} << n);
  out.emplace_back();
  for (Index k = 1; k <= n; ++k) {
    std::vector<Index> combo(k);
    for (Index t = 0; t < k; ++t) combo[t] = t + 1;
    while (true) {
      out.emplace_back(combo);
      // advance to the next k-subset in lexicographic order
      Index t = k;
      while (t > 0 && combo[t - 1] == n - k + t) --t;
      if (t == 0) break;
      ++combo[t - 1];
      for (Index u = t; u < k; ++u) combo[u] = combo[u - 1] + 1;
    }
  }
  return out;
}

inline std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (Index i : m.indices()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
  }
  return out;
}

}  // namespace grassmann
