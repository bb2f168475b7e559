#include "grassmann/expression.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace grassmann;

namespace {

Element eval(std::string_view text, Index n = 4) { return evaluate_element(parse(text).root, n); }

std::size_t error_offset(std::string_view text, std::optional<Namespace> ns = std::nullopt) {
  try {
    evaluate_element(parse(text, ns).root, 8);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return 0;
}

}  // namespace

TEST(Parse, TwoGeneratorExpansion) {
  const Expression e = parse("1 + 2*x1 + 3*x2 + 5*x1*x2 + 2*x2*x1");
  EXPECT_EQ(e.letters, Namespace::generators);
  EXPECT_EQ(e.root.kind, Expr::Kind::sum);
  EXPECT_EQ(to_string(evaluate_element(e.root, 2)), "1 + 2*x1 + 3*x2 + 3*x1*x2");
}

TEST(Parse, BracketsAndBraces) {
  EXPECT_EQ(parse("[x1,x2]").root.kind, Expr::Kind::commutator);
  EXPECT_EQ(parse("{x1, x2}").root.kind, Expr::Kind::anticommutator);
  EXPECT_EQ(to_string(eval("[x1,x2]")), "2*x1*x2");
  EXPECT_EQ(to_string(eval("{x1,x2}")), "0");
}

TEST(Parse, Powers) {
  EXPECT_EQ(to_string(eval("(x1*x2)^2")), "0");
  EXPECT_EQ(to_string(eval("(1 + x1)^3")), "1 + 3*x1");
  EXPECT_EQ(to_string(eval("x1^0")), "1");
  EXPECT_EQ(to_string(eval("-x1^2")), "0");
}

TEST(Parse, RationalsAndUnaryMinus) {
  EXPECT_EQ(to_string(eval("1/2*x1 - -3/6")), "1/2 + 1/2*x1");
  EXPECT_EQ(to_string(eval("-(x2*x1)")), "x1*x2");
  EXPECT_EQ(to_string(eval("  4/2 ")), "2");
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("x0"), 1u);
  EXPECT_EQ(error_offset("1 + x0"), 5u);
  EXPECT_EQ(error_offset("x1 x2"), 4u);
  EXPECT_EQ(error_offset("(x1"), 4u);
  EXPECT_EQ(error_offset("x1 +"), 5u);
  EXPECT_EQ(error_offset("1/0"), 1u);
  EXPECT_EQ(error_offset("x1 ^ x2"), 6u);
  EXPECT_EQ(error_offset("[x1 x2]"), 5u);
  EXPECT_EQ(error_offset("x1 # 2"), 4u);
}

TEST(Parse, NamespacesNeverMix) {
  EXPECT_EQ(error_offset("x1 + y2"), 6u);
  EXPECT_EQ(error_offset("y1*x1"), 4u);
  EXPECT_EQ(error_offset("y1", Namespace::generators), 1u);
  EXPECT_EQ(error_offset("x1", Namespace::indeterminates), 1u);
  EXPECT_EQ(parse("[[y1,y2],y3]").letters, Namespace::indeterminates);
  EXPECT_EQ(parse("3/4").letters, std::nullopt);
}

TEST(Evaluate, GeneratorOutOfRange) {
  EXPECT_THROW(eval("x5", 4), ParseError);
  EXPECT_NO_THROW(eval("x4", 4));
}

TEST(EvaluateFree, ConcatenatesWithoutRewriting) {
  const FreePolynomial f = evaluate_free(parse("[[y1,y2],y3]").root);
  EXPECT_EQ(f.terms().size(), 4u);
  EXPECT_EQ(to_string(f), "y1*y2*y3 - y2*y1*y3 - y3*y1*y2 + y3*y2*y1");
  EXPECT_EQ(to_string(evaluate_free(parse("x2*x1").root)), "y2*y1");
}

TEST(Print, Formatting) {
  Element::Terms t;
  t.emplace(Monomial{}, Scalar{1});
  t.emplace(Monomial({1, 2}), Scalar{3});
  EXPECT_EQ(to_string(Element::from_terms(t)), "1 + 3*x1*x2");
  EXPECT_EQ(to_string(Element{}), "0");
  EXPECT_EQ(to_string(Element::generator(1, Scalar{-1})), "-x1");
  EXPECT_EQ(to_string(Element::constant(Scalar{-1, 3}) + Element::generator(2, Scalar{-2})), "-1/3 - 2*x2");
}

TEST(Print, RoundTrip) {
  gen::Rng rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = static_cast<Index>(gen::uniform(rng, 1, 6));
    const Element p = gen::element(rng, n, 10);
    ASSERT_EQ(eval(to_string(p), n), p) << to_string(p);
  }
}
