#pragma once

#include "grassmann/element.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace grassmann {

/// Z2 degree: even monomials span the even subalgebra, odd ones the odd subspace.
enum class Parity { even = 0, odd = 1 };

constexpr Parity operator+(Parity g, Parity h) noexcept {
  return static_cast<Parity>(static_cast<int>(g) ^ static_cast<int>(h));
}

constexpr std::string_view to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

inline Parity parity(const Monomial& m) noexcept { return m.degree() % 2 == 0 ? Parity::even : Parity::odd; }

inline Element part_of_parity(const Element& p, Parity wanted) {
  Element::Terms kept;
  for (const auto& [m, c] : p.terms())
    if (parity(m) == wanted) kept.emplace_hint(kept.end(), m, c);
  return Element::from_terms(std::move(kept));
}

inline Element even_part(const Element& p) { return part_of_parity(p, Parity::even); }
inline Element odd_part(const Element& p) { return part_of_parity(p, Parity::odd); }

/// Common parity of the support, or none when mixed. Zero counts as even.
inline std::optional<Parity> homogeneous_parity(const Element& p) {
  if (p.is_zero()) return Parity::even;
  const Parity first = parity(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms())
    if (parity(m) != first) return std::nullopt;
  return first;
}

inline Element commutator(const Element& p, const Element& q) { return p * q - q * p; }
inline Element anticommutator(const Element& p, const Element& q) { return p * q + q * p; }

/// Center membership over x_1..x_n. Commuting with every generator is enough,
/// since [p, ab] = [p, a] b + a [p, b].
inline bool is_central(const Element& p, Index n) {
  if (p.max_generator() > n)
    throw std::invalid_argument("element uses generators beyond n = " + std::to_string(n));
  for (Index i = 1; i <= n; ++i)
    if (!commutator(p, Element::generator(i)).is_zero()) return false;
  return true;
}

}  // namespace grassmann
