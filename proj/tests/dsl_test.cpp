#include <gtest/gtest.h>

#include "frescos/dsl.hpp"
#include "frescos/sampling.hpp"

using namespace frescos;

namespace {

ErrorKind semantic_cause(const std::string& text) {
  try {
    parse_presentation(text, 16);
  } catch (const SemanticError& e) {
    return e.cause();
  }
  ADD_FAILURE() << "no semantic error for " << text;
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(DslSeries, Literals) {
  Series s = parse_series("1 + 3b^2 - 1/2b^5", 8);
  EXPECT_EQ(s.order(), 8);
  EXPECT_EQ(s[2], 3);
  EXPECT_EQ(s[5], rat(-1, 2));
  EXPECT_EQ(parse_series("-b + 2 b^3 + 1", 4)[1], -1);
  EXPECT_EQ(parse_series("1 + b + b", 2)[1], 2);
}

TEST(DslSeries, Errors) {
  EXPECT_THROW(parse_series("1 +", 4), SyntaxError);
  EXPECT_THROW(parse_series("1 + 3x", 4), SyntaxError);
  EXPECT_THROW(parse_series("1 + 2/0b", 4), SyntaxError);
  EXPECT_THROW(parse_series("1 + b^9", 4), SemanticError);
}

TEST(DslPresentation, GrammarInstance) {
  Presentation p = parse_presentation("fresco: (5/2 | 1 + 3b^2) (7/2 | 1)", 16);
  ASSERT_EQ(p.rank(), 2);
  EXPECT_EQ(p.lambda(1), rat(5, 2));
  EXPECT_EQ(p.unit(1)[2], 3);
  EXPECT_EQ(p.unit(2), Series::one(16));
}

TEST(DslPresentation, SemanticErrors) {
  EXPECT_EQ(semantic_cause("fresco: (1/2 | 1) (1/2 | 1)"), ErrorKind::NotGeometric);
  EXPECT_EQ(semantic_cause("fresco: (5/2 | 2 + b)"), ErrorKind::NonUnitSeries);
}

TEST(DslPresentation, SyntaxErrorLocation) {
  try {
    parse_presentation("fresco: (5/2 | 1 + 3b^2) (7/2 ; 1)", 16, 4);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 31);
  }
}

TEST(DslPresentation, RoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    Presentation p = random_presentation(rng, uniform_int(rng, 1, 4), 20);
    EXPECT_EQ(parse_presentation(to_dsl(p), 20), p) << to_dsl(p);
  }
  Presentation q = Presentation::validate({{rat(3, 2), Series::one(8)}, {rat(1, 2), parse_series("1 - b", 8)}});
  EXPECT_EQ(parse_presentation(to_dsl(q), 8), q);
}

TEST(DslXi, Literal) {
  XiExpansion x = parse_xi("s^(3/2) * log^2 * [1 + 2s] @ v1", 8);
  EXPECT_EQ(x.lambda(), rat(1, 2));
  EXPECT_EQ(x.coeff(1, 2, 2), 1);
  EXPECT_EQ(x.coeff(1, 3, 2), 2);
  XiExpansion y = parse_xi("xi: 2 s^(-1/3) log - s^(2/3) @ v2", 8);
  EXPECT_EQ(y.lambda(), rat(2, 3));
  EXPECT_EQ(y.dim(), 2);
  EXPECT_EQ(y.coeff(1, 0, 1), 2);
  EXPECT_EQ(y.coeff(2, 1, 0), -1);
  EXPECT_EQ(parse_xi("s^0", 4).lambda(), 1);
}

TEST(DslXi, Errors) {
  EXPECT_THROW(parse_xi("s^(1/2) + s^(1/3)", 8), SemanticError);
  EXPECT_THROW(parse_xi("s^(-3/2)", 8), SemanticError);
  EXPECT_THROW(parse_xi("s^(1/2) *", 8), SyntaxError);
  EXPECT_THROW(parse_xi("s^(1/2) @ w1", 8), SyntaxError);
}

TEST(DslXi, RoundTrip) {
  for (const char* text : {"s^(-1/2) * log^2 + 3 * s^(1/2) * log - 2/5 * s^(3/2)", "s^(-1/3) * log @ v1 + s^(2/3) @ v2"}) {
    XiExpansion x = parse_xi(text, 10);
    EXPECT_EQ(parse_xi(to_dsl(x), 10), x);
  }
}

TEST(DslLines, BatchWithComments) {
  auto lines = parse_dsl_lines("# corpus\nfresco: (3 | 1 + b^2) (3 | 1) (3 | 1)\n\ns^(-1/2) * log\n", {16, 8});
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].line, 2);
  EXPECT_TRUE(std::holds_alternative<Presentation>(lines[0].payload));
  EXPECT_EQ(lines[1].line, 4);
  EXPECT_TRUE(std::holds_alternative<XiExpansion>(lines[1].payload));
  try {
    parse_dsl_lines("(3 | 1)\n(3 | 1) x\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}
