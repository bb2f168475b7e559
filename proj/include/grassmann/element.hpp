#pragma once

#include "grassmann/monomial.hpp"
#include "grassmann/scalar.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace grassmann {

/// Element of the Grassmann algebra over the rationals, held as a sparse map
/// from canonical monomials to nonzero coefficients. Because the normal form
/// is unique, equality of elements is equality of term maps.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;

  static Element constant(const Scalar& c) { return monomial(Monomial{}, c); }
  static Element generator(Index i, const Scalar& c = Scalar{1}) { return monomial(Monomial::generator(i), c); }
  static Element monomial(Monomial m, const Scalar& c = Scalar{1}) {
    Element e;
    if (c != 0) e.terms_.emplace(std::move(m), c);
    return e;
  }
  static Element from_terms(Terms terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    Element e;
    e.terms_ = std::move(terms);
    return e;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar{0} : it->second;
  }

  /// Largest generator index in the support, 0 for constants and zero.
  Index max_generator() const {
    Index top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, m.max_index());
    return top;
  }

  Element& operator+=(const Element& other) {
    for (const auto& [m, c] : other.terms_) accumulate(m, c);
    return *this;
  }
  Element& operator-=(const Element& other) {
    for (const auto& [m, c] : other.terms_) accumulate(m, -c);
    return *this;
  }
  Element& operator*=(const Scalar& alpha) {
    if (alpha == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= alpha;
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar{-1}; }
  friend Element operator*(const Scalar& alpha, Element p) { return p *= alpha; }
  friend Element operator*(Element p, const Scalar& alpha) { return p *= alpha; }

  friend Element operator*(const Element& p, const Element& q) {
    Element out;
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) {
        SignedMonomial s = multiply(mp, mq);
        if (s.is_zero()) continue;
        Scalar c = cp * cq;
        if (s.sign < 0) c = -c;
        out.accumulate(std::move(s.monomial), c);
      }
    }
    return out;
  }

  friend bool operator==(const Element&, const Element&) = default;

  /// Adds `c * m`, dropping the entry if it cancels.
  void accumulate(Monomial m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  Terms terms_;
};

/// Projects a linear combination of words onto the canonical basis.
inline Element make_element(std::span<const std::pair<Word, Scalar>> pairs) {
  Element out;
  for (const auto& [word, c] : pairs) {
    SignedMonomial s = normalize_word(word);
    if (s.is_zero()) continue;
    out.accumulate(std::move(s.monomial), s.sign < 0 ? Scalar{-c} : c);
  }
  return out;
}

inline Element make_element(std::initializer_list<std::pair<Word, Scalar>> pairs) {
  return make_element(std::span<const std::pair<Word, Scalar>>(pairs.begin(), pairs.size()));
}

/// Maximum monomial degree over the support; none for the zero element.
inline std::optional<std::size_t> degree(const Element& p) {
  if (p.is_zero()) return std::nullopt;
  // graded-lex order puts the highest degree last
  return p.terms().rbegin()->first.degree();
}

/// p^exponent by square-and-multiply; p^0 is the unit.
inline Element pow(Element p, unsigned exponent) {
  Element result = Element::constant(Scalar{1});
  while (exponent > 0 && !result.is_zero()) {
    if (exponent & 1u) result = result * p;
    exponent >>= 1;
    if (exponent > 0) p = p * p;
  }
  return result;
}

}  // namespace grassmann
