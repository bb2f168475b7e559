#pragma once

#include "grassmann/element.hpp"

#include <optional>
#include <stdexcept>

namespace grassmann {

/// Coefficient of the unit monomial.
inline Scalar body(const Element& p) { return p.coefficient(Monomial{}); }

/// Everything but the body. Always nilpotent.
inline Element soul(const Element& p) {
  Element::Terms rest = p.terms();
  rest.erase(Monomial{});
  return Element::from_terms(std::move(rest));
}

/// Left derivative with respect to x_i: bring x_i to the front of each
/// monomial containing it (one sign flip per generator it passes), then drop it.
///
/// Signs follow the left convention; under a right derivative odd-position
/// terms would flip.
inline Element left_derivative(const Element& p, Index i) {
  if (i == 0) throw std::invalid_argument("generator index must be >= 1");
  Element out;
  for (const auto& [m, c] : p.terms()) {
    const std::ptrdiff_t pos = m.position(i);
    if (pos < 0) continue;
    out.accumulate(without(m, i), pos % 2 == 0 ? c : Scalar{-c});
  }
  return out;
}

/// Berezin integral over x_i. Identified with the left derivative, so
/// int dx_i 1 = 0 and int dx_i x_i = 1. Iterated integrals are nested calls,
/// innermost first.
inline Element berezin_integral(const Element& p, Index i) { return left_derivative(p, i); }

struct NilReport {
  /// Smallest k with p^k = 0, or none if it exceeds `cap`.
  std::optional<unsigned> index;
  unsigned cap = 1;

  bool exceeds_cap() const noexcept { return !index.has_value(); }
};

/// Nilpotency index by sequential multiplication p, p^2, p^3, ... up to `cap`.
/// Throws std::invalid_argument for p = 0 or cap = 0.
inline NilReport nil_index(const Element& p, unsigned cap) {
  if (cap == 0) throw std::invalid_argument("nil index cap must be >= 1");
  if (p.is_zero()) throw std::invalid_argument("nil index is undefined for the zero element");
  Element power = p;
  for (unsigned k = 2; k <= cap; ++k) {
    power = power * p;
    if (power.is_zero()) return {k, cap};
  }
  return {std::nullopt, cap};
}

}  // namespace grassmann
