#pragma once

#include "grassmann/element.hpp"
#include "grassmann/free_polynomial.hpp"
#include "grassmann/grading.hpp"
#include "grassmann/scalar.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grassmann {

/// Letters x_K name generators of G; letters y_K name free indeterminates.
enum class Namespace { generators, indeterminates };

/// Syntax or validation failure at a 1-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct Expr {
  enum class Kind {
    literal,
    generator,
    indeterminate,
    sum,
    difference,
    product,
    power,
    negation,
    group,
    commutator,
    anticommutator,
  };

  Kind kind = Kind::literal;
  Scalar value;           // literal
  Index index = 0;        // generator / indeterminate
  unsigned exponent = 0;  // power
  std::vector<Expr> operands;
  std::size_t offset = 1;  // 1-based position in the source text
};

struct Expression {
  Expr root;
  /// Namespace of the letters used; none when the expression has no letters.
  std::optional<Namespace> letters;
};

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' nat)?
// atom   := rational | 'x'nat | 'y'nat | '(' expr ')' | '[' expr ',' expr ']'
//         | '{' expr ',' expr '}' | '-' atom
class Parser {
 public:
  Parser(std::string_view text, std::optional<Namespace> expected) : text_(text), expected_(expected) {}

  Expression run() {
    Expr root = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return {std::move(root), seen_};
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(at + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t offset) {
    Expr node;
    node.kind = kind;
    node.offset = offset;
    node.operands.push_back(std::move(lhs));
    node.operands.push_back(std::move(rhs));
    return node;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      skip_space();
      const std::size_t at = pos_ + 1;
      if (eat('+')) {
        lhs = binary(Expr::Kind::sum, std::move(lhs), term(), at);
      } else if (eat('-')) {
        lhs = binary(Expr::Kind::difference, std::move(lhs), term(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      skip_space();
      const std::size_t at = pos_ + 1;
      if (!eat('*')) return lhs;
      lhs = binary(Expr::Kind::product, std::move(lhs), factor(), at);
    }
  }

  Expr factor() {
    Expr base = atom();
    skip_space();
    const std::size_t at = pos_ + 1;
    if (!eat('^')) return base;
    skip_space();
    const std::size_t digits_at = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected a nonnegative integer exponent");
    if (digits.size() > 9) fail_at(digits_at, "exponent too large");
    Expr node;
    node.kind = Expr::Kind::power;
    node.offset = at;
    node.exponent = static_cast<unsigned>(std::stoul(digits));
    node.operands.push_back(std::move(base));
    return node;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void note_namespace(Namespace ns, std::size_t at) {
    if (expected_ && *expected_ != ns)
      fail_at(at, ns == Namespace::generators ? "generator letters are not allowed here; use y1, y2, ..."
                                              : "indeterminate letters are not allowed here; use x1, x2, ...");
    if (seen_ && *seen_ != ns) fail_at(at, "expression mixes generators (x) and indeterminates (y)");
    seen_ = ns;
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    Expr node;
    node.offset = at + 1;

    if (c == '-') {
      ++pos_;
      node.kind = Expr::Kind::negation;
      node.operands.push_back(atom());
      return node;
    }
    if (c == '(') {
      ++pos_;
      node.kind = Expr::Kind::group;
      node.operands.push_back(expr());
      expect(')');
      return node;
    }
    if (c == '[' || c == '{') {
      ++pos_;
      node.kind = c == '[' ? Expr::Kind::commutator : Expr::Kind::anticommutator;
      node.operands.push_back(expr());
      expect(',');
      node.operands.push_back(expr());
      expect(c == '[' ? ']' : '}');
      return node;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected an index after '" + std::string(1, c) + "'");
      if (digits.size() > 9 || std::stoul(digits) == 0)
        fail_at(at, "index must be an integer between 1 and 999999999");
      const Namespace ns = c == 'x' ? Namespace::generators : Namespace::indeterminates;
      note_namespace(ns, at);
      node.kind = c == 'x' ? Expr::Kind::generator : Expr::Kind::indeterminate;
      node.index = static_cast<Index>(std::stoul(digits));
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected a denominator after '/'");
        if (BigInt{den} == 0) fail_at(at, "zero denominator");
        literal += '/' + den;
      }
      node.kind = Expr::Kind::literal;
      node.value = parse_scalar(literal);
      return node;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::optional<Namespace> expected_;
  std::optional<Namespace> seen_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text`. When `expected` is given, letters from the other namespace
/// are rejected; mixing x and y letters is always rejected.
inline Expression parse(std::string_view text, std::optional<Namespace> expected = std::nullopt) {
  return detail::Parser(text, expected).run();
}

namespace detail {

template <typename Value, typename Leaf>
Value fold(const Expr& e, const Leaf& leaf) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::literal:
    case K::generator:
    case K::indeterminate: return leaf(e);
    case K::sum: return fold<Value>(e.operands[0], leaf) + fold<Value>(e.operands[1], leaf);
    case K::difference: return fold<Value>(e.operands[0], leaf) - fold<Value>(e.operands[1], leaf);
    case K::product: return fold<Value>(e.operands[0], leaf) * fold<Value>(e.operands[1], leaf);
    case K::power: return pow(fold<Value>(e.operands[0], leaf), e.exponent);
    case K::negation: return -fold<Value>(e.operands[0], leaf);
    case K::group: return fold<Value>(e.operands[0], leaf);
    case K::commutator: return commutator(fold<Value>(e.operands[0], leaf), fold<Value>(e.operands[1], leaf));
    case K::anticommutator:
      return anticommutator(fold<Value>(e.operands[0], leaf), fold<Value>(e.operands[1], leaf));
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace detail

/// Evaluates in the Grassmann algebra on x_1..x_n.
inline Element evaluate_element(const Expr& e, Index n) {
  return detail::fold<Element>(e, [n](const Expr& leaf) {
    if (leaf.kind == Expr::Kind::literal) return Element::constant(leaf.value);
    if (leaf.kind == Expr::Kind::indeterminate)
      throw ParseError(leaf.offset, "indeterminate y" + std::to_string(leaf.index) + " in a Grassmann expression");
    if (leaf.index > n)
      throw ParseError(leaf.offset, "generator x" + std::to_string(leaf.index) + " exceeds n = " + std::to_string(n));
    return Element::generator(leaf.index);
  });
}

/// Evaluates in the free algebra; both x and y letters are taken as free letters.
inline FreePolynomial evaluate_free(const Expr& e) {
  return detail::fold<FreePolynomial>(e, [](const Expr& leaf) {
    if (leaf.kind == Expr::Kind::literal) return FreePolynomial::constant(leaf.value);
    return FreePolynomial::variable(leaf.index);
  });
}

namespace detail {

inline std::string format_terms(const auto& terms, char letter) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    std::vector<Index> idx;
    if constexpr (requires { key.indices(); }) {
      idx.assign(key.indices().begin(), key.indices().end());
    } else {
      idx.assign(key.begin(), key.end());
    }
    const bool negative = c < 0;
    const Scalar magnitude = negative ? Scalar{-c} : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (idx.empty()) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + '*';
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (t > 0) out += '*';
      out += letter + std::to_string(idx[t]);
    }
  }
  return out;
}

}  // namespace detail

/// Canonical text: graded-lex terms, `coef*xI*xJ`, unit coefficients elided.
inline std::string to_string(const Element& p) { return detail::format_terms(p.terms(), 'x'); }

/// Same layout as elements, with y letters.
inline std::string to_string(const FreePolynomial& f) { return detail::format_terms(f.terms(), 'y'); }

}  // namespace grassmann
