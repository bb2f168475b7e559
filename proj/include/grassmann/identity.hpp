#pragma once

#include "grassmann/element.hpp"
#include "grassmann/free_polynomial.hpp"
#include "grassmann/grading.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassmann {

/// Assignment y_i -> element; induces the unique algebra homomorphism K<Y> -> G.
using Substitution = std::map<Index, Element>;

class UnassignedIndeterminate : public std::invalid_argument {
 public:
  explicit UnassignedIndeterminate(Index i)
      : std::invalid_argument("no assignment for indeterminate y" + std::to_string(i)), index_(i) {}
  Index index() const noexcept { return index_; }

 private:
  Index index_;
};

/// Image of `f` under the homomorphism induced by `s`.
inline Element evaluate(const FreePolynomial& f, const Substitution& s) {
  Element out;
  for (const auto& [word, c] : f.terms()) {
    Element product = Element::constant(c);
    for (Index letter : word) {
      auto it = s.find(letter);
      if (it == s.end()) throw UnassignedIndeterminate(letter);
      product = product * it->second;
      if (product.is_zero()) break;
    }
    out += product;
  }
  return out;
}

namespace detail {

inline bool each_word_permutes(const FreePolynomial& f, const std::set<Index>& letters) {
  for (const auto& [word, c] : f.terms()) {
    if (word.size() != letters.size()) return false;
    std::set<Index> seen(word.begin(), word.end());
    if (seen != letters) return false;
  }
  return true;
}

}  // namespace detail

/// True iff every word of `f` uses each of y_1..y_k exactly once.
inline bool is_multilinear(const FreePolynomial& f, Index k) {
  std::set<Index> letters;
  for (Index i = 1; i <= k; ++i) letters.insert(i);
  return detail::each_word_permutes(f, letters);
}

enum class Domain { all, even, odd };
enum class VerdictMode { exhaustive_multilinear, randomized };

constexpr std::string_view to_string(Domain d) noexcept {
  switch (d) {
    case Domain::even: return "even";
    case Domain::odd: return "odd";
    default: return "all";
  }
}

constexpr std::string_view to_string(VerdictMode m) noexcept {
  return m == VerdictMode::exhaustive_multilinear ? "exhaustive-multilinear" : "randomized";
}

struct IdentityVerdict {
  bool holds = true;
  /// Present exactly when holds is false.
  std::optional<Substitution> witness;
  VerdictMode mode = VerdictMode::exhaustive_multilinear;
  /// Number of substitutions evaluated before the verdict.
  std::uint64_t checked = 0;
};

struct IdentityOptions {
  Index generators = 4;
  Domain domain = Domain::all;
  unsigned trials = 100;
  std::uint64_t seed = 0;
};

inline std::vector<Monomial> basis_in(Index n, Domain domain) {
  std::vector<Monomial> all = basis(n);
  if (domain == Domain::all) return all;
  const Parity wanted = domain == Domain::even ? Parity::even : Parity::odd;
  std::erase_if(all, [&](const Monomial& m) { return parity(m) != wanted; });
  return all;
}

/// Decides whether `f` vanishes under every substitution from the chosen
/// domain of the algebra on `generators` generators.
///
/// A multilinear f is linear in each argument separately, so it vanishes on
/// the whole domain iff it vanishes on every tuple of basis monomials spanning
/// that domain. Those tuples are scanned in graded-lex order (first slot most
/// significant) and the first failure is the witness. Anything else is tested
/// on `trials` seeded pseudo-random elements with coefficients in {-2..2};
/// a positive randomized verdict only means no counterexample was found.
inline IdentityVerdict is_identity(const FreePolynomial& f, const IdentityOptions& options) {
  if (options.generators == 0) throw std::invalid_argument("generator count must be >= 1");
  const std::set<Index> letters = f.indeterminates();
  const std::vector<Index> slots(letters.begin(), letters.end());
  const std::vector<Monomial> domain_basis = basis_in(options.generators, options.domain);

  IdentityVerdict verdict;
  if (detail::each_word_permutes(f, letters)) {
    verdict.mode = VerdictMode::exhaustive_multilinear;
    if (domain_basis.empty() && !slots.empty()) return verdict;
    std::vector<std::size_t> odometer(slots.size(), 0);
    while (true) {
      Substitution s;
      for (std::size_t t = 0; t < slots.size(); ++t)
        s.emplace(slots[t], Element::monomial(domain_basis[odometer[t]]));
      ++verdict.checked;
      if (!evaluate(f, s).is_zero()) {
        verdict.holds = false;
        verdict.witness = std::move(s);
        return verdict;
      }
      std::size_t t = slots.size();
      while (t > 0 && ++odometer[t - 1] == domain_basis.size()) odometer[--t] = 0;
      if (t == 0) break;
    }
    return verdict;
  }

  if (options.trials == 0) throw std::invalid_argument("randomized identity check needs trials >= 1");
  verdict.mode = VerdictMode::randomized;
  std::mt19937_64 rng(options.seed);
  for (unsigned trial = 0; trial < options.trials; ++trial) {
    Substitution s;
    for (Index slot : slots) {
      Element e;
      // modular reduction rather than a distribution keeps runs identical across standard libraries
      for (const Monomial& m : domain_basis) e.accumulate(m, Scalar{static_cast<int>(rng() % 5) - 2});
      s.emplace(slot, std::move(e));
    }
    ++verdict.checked;
    if (!evaluate(f, s).is_zero()) {
      verdict.holds = false;
      verdict.witness = std::move(s);
      return verdict;
    }
  }
  return verdict;
}

/// Quotient map K<X> -> G: letters of `f` are read as generators x_i, i <= n.
inline Element project(const FreePolynomial& f, Index n) {
  Element out;
  for (const auto& [word, c] : f.terms()) {
    for (Index letter : word)
      if (letter > n)
        throw std::out_of_range("generator x" + std::to_string(letter) + " exceeds n = " + std::to_string(n));
    SignedMonomial s = normalize_word(word);
    if (s.is_zero()) continue;
    out.accumulate(std::move(s.monomial), s.sign < 0 ? Scalar{-c} : c);
  }
  return out;
}

/// Membership in the two-sided ideal generated by x_i x_j + x_j x_i.
inline bool in_ideal(const FreePolynomial& f, Index n) { return project(f, n).is_zero(); }

}  // namespace grassmann
