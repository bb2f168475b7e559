#pragma once

#include "grassmann/monomial.hpp"
#include "grassmann/scalar.hpp"

#include <map>
#include <set>
#include <string>

namespace grassmann {

/// Word over indeterminates y_1, y_2, ...; order matters and letters repeat.
using FreeWord = Word;

/// Element of the free associative algebra K<Y>. No relations hold, so
/// multiplication is plain concatenation.
class FreePolynomial {
 public:
  using Terms = std::map<FreeWord, Scalar, GradedLexLess>;

  FreePolynomial() = default;

  static FreePolynomial constant(const Scalar& c) { return word({}, c); }
  static FreePolynomial variable(Index i, const Scalar& c = Scalar{1}) { return word({i}, c); }
  static FreePolynomial word(FreeWord w, const Scalar& c = Scalar{1}) {
    FreePolynomial f;
    f.accumulate(std::move(w), c);
    return f;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Indeterminates that occur in some word.
  std::set<Index> indeterminates() const {
    std::set<Index> out;
    for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
    return out;
  }

  FreePolynomial& operator+=(const FreePolynomial& o) {
    for (const auto& [w, c] : o.terms_) accumulate(w, c);
    return *this;
  }
  FreePolynomial& operator-=(const FreePolynomial& o) {
    for (const auto& [w, c] : o.terms_) accumulate(w, -c);
    return *this;
  }
  FreePolynomial& operator*=(const Scalar& alpha) {
    if (alpha == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= alpha;
    }
    return *this;
  }

  friend FreePolynomial operator+(FreePolynomial a, const FreePolynomial& b) { return a += b; }
  friend FreePolynomial operator-(FreePolynomial a, const FreePolynomial& b) { return a -= b; }
  friend FreePolynomial operator-(FreePolynomial a) { return a *= Scalar{-1}; }
  friend FreePolynomial operator*(const Scalar& alpha, FreePolynomial f) { return f *= alpha; }

  friend FreePolynomial operator*(const FreePolynomial& f, const FreePolynomial& g) {
    FreePolynomial out;
    for (const auto& [u, cu] : f.terms_) {
      for (const auto& [v, cv] : g.terms_) {
        FreeWord uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        out.accumulate(std::move(uv), cu * cv);
      }
    }
    return out;
  }

  friend bool operator==(const FreePolynomial&, const FreePolynomial&) = default;

  void accumulate(FreeWord w, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  Terms terms_;
};

inline FreePolynomial commutator(const FreePolynomial& f, const FreePolynomial& g) { return f * g - g * f; }
inline FreePolynomial anticommutator(const FreePolynomial& f, const FreePolynomial& g) { return f * g + g * f; }

inline FreePolynomial pow(const FreePolynomial& f, unsigned exponent) {
  FreePolynomial result = FreePolynomial::constant(Scalar{1});
  for (unsigned k = 0; k < exponent; ++k) result = result * f;
  return result;
}

}  // namespace grassmann
