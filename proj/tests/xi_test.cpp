#include <gtest/gtest.h>

#include "frescos/alpha.hpp"
#include "frescos/xi.hpp"

using namespace frescos;

namespace {

const int M = 24;

XiExpansion pure(const Rat& lambda, int logpow, int max_log, int shift = 0, int dim = 1, int component = 1) {
  XiExpansion x(lambda, dim, M, max_log);
  x.at(component, shift, logpow) = 1;
  return x;
}

}  // namespace

TEST(XiApply, AShifts) {
  XiExpansion y = xi_apply(XiOp::A, pure(rat(1, 2), 0, 0));
  EXPECT_EQ(y, pure(rat(1, 2), 0, 0, 1));
}

TEST(XiApply, BIntegratesPurePower) {
  Rat l = rat(2, 3);
  XiExpansion y = xi_apply(XiOp::B, pure(l, 0, 0));
  EXPECT_EQ(y, (1 / l) * pure(l, 0, 0, 1));
}

TEST(XiApply, BIntegratesByParts) {
  Rat l = rat(2, 3);
  XiExpansion y = xi_apply(XiOp::B, pure(l, 1, 1));
  XiExpansion expect(l, 1, M, 1);
  expect.at(1, 1, 1) = 1 / l;
  expect.at(1, 1, 0) = -1 / (l * l);
  EXPECT_EQ(y, expect);
}

TEST(XiApply, CommutationAndInjectivity) {
  XiExpansion x(rat(1, 3), 2, M, 2);
  x.at(1, 0, 2) = 3;
  x.at(1, 1, 0) = rat(-1, 2);
  x.at(2, 2, 1) = 5;
  XiExpansion ab = xi_apply(XiOp::A, xi_apply(XiOp::B, x));
  XiExpansion ba = xi_apply(XiOp::B, xi_apply(XiOp::A, x));
  XiExpansion bb = xi_apply(XiOp::B, xi_apply(XiOp::B, x));
  EXPECT_EQ(ab + Rat(-1) * ba, bb);
  EXPECT_FALSE(xi_apply(XiOp::B, x).is_zero());
}

TEST(XiModule, PurePowerHasRankOne) {
  XiModule e = xi_generate_module(pure(rat(1, 2), 0, 0));
  EXPECT_EQ(e.rank, 1);
  EXPECT_EQ(xi_log_filtration(e), std::vector<int>{1});
}

TEST(XiModule, LogThemes) {
  for (int n = 0; n <= 3; ++n) {
    Rat l = rat(3, 4);
    XiModule e = xi_generate_module(pure(l, n, n));
    EXPECT_EQ(e.rank, n + 1);
    std::vector<int> expect;
    for (int j = 1; j <= n + 1; ++j) expect.push_back(j);
    EXPECT_EQ(xi_log_filtration(e), expect);
    Presentation p = model_from_xi(e);
    std::vector<Rat> lambdas;
    for (int j = n; j >= 0; --j) lambdas.push_back(l + j);
    EXPECT_EQ(p.lambdas(), lambdas);
    AbElement ann = xi_minimal_annihilator(e);
    AbElement ref = expand_factor_form(bernstein(p).element);
    const int o = std::min(ann.order(), ref.order());
    EXPECT_EQ(initial_form(ann, n + 1).truncated(o), ref.truncated(o));
  }
}

TEST(XiModule, LogOnceExtraction) {
  Rat l = rat(1, 2);
  Presentation p = model_from_xi(xi_generate_module(pure(l, 1, 1)));
  ASSERT_EQ(p.rank(), 2);
  EXPECT_EQ(p.lambda(1), l + 1);
  EXPECT_EQ(p.lambda(2), l);
  EXPECT_EQ(p.unit(1), Series::one(p.order()));
  EXPECT_EQ(p.unit(2), Series::one(p.order()));
}

TEST(XiModule, TwoComponentMixed) {
  XiExpansion x(rat(1, 2), 2, M, 0);
  x.at(1, 0, 0) = 1;
  x.at(2, 1, 0) = 1;
  XiModule e = xi_generate_module(x);
  EXPECT_EQ(e.rank, 2);
  std::vector<int> filt = xi_log_filtration(e);
  EXPECT_EQ(filt, std::vector<int>{2});
  EXPECT_EQ(semisimple_depth(filt), 1);
  Presentation p = model_from_xi(e);
  EXPECT_TRUE(is_semisimple(p));
}

TEST(XiModule, TooShallowTruncation) {
  XiExpansion x(rat(1, 2), 1, 3, 3);
  x.at(1, 0, 3) = 1;
  try {
    xi_generate_module(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TruncationTooSmall);
  }
}

TEST(XiModule, NonSemisimpleThemeDetected) {
  // s^{λ−1}·Log s generates a theme: depth 2 and α ≠ 0 or p = 0.
  XiModule e = xi_generate_module(pure(rat(1, 3), 1, 1));
  EXPECT_EQ(semisimple_depth(xi_log_filtration(e)), 2);
  EXPECT_FALSE(is_semisimple(model_from_xi(e)));
}

TEST(XiModule, SemisimpleRank2WithGap) {
  // s^{λ−1} + s^{λ+1} over two components: exponents differ by an integer.
  XiExpansion x(rat(1, 3), 2, M, 1);
  x.at(1, 0, 0) = 1;
  x.at(2, 2, 0) = 1;
  XiModule e = xi_generate_module(x);
  Presentation p = model_from_xi(e);
  EXPECT_EQ(semisimple_depth(xi_log_filtration(e)) == 1, is_semisimple(p));
}

TEST(RootsInClass, Multiplicities) {
  // (x + 1/2)^2 (x − 3/2)
  RatPoly f{rat(-3, 8), rat(-5, 4), rat(-1, 2), rat(1)};
  EXPECT_EQ(roots_in_class(f, rat(1, 2)), (std::vector<Rat>{rat(-1, 2), rat(-1, 2), rat(3, 2)}));
}

TEST(XiModule, ExtractedPresentationAnnihilates) {
  std::vector<XiExpansion> gens;
  {
    XiExpansion x(rat(1, 2), 1, M, 2);
    x.at(1, 0, 2) = 1;
    x.at(1, 1, 1) = 3;
    x.at(1, 2, 0) = rat(-2, 5);
    gens.push_back(x);
  }
  {
    XiExpansion x(rat(2, 3), 2, M, 1);
    x.at(1, 0, 1) = 1;
    x.at(2, 1, 0) = 1;
    x.at(1, 3, 0) = rat(1, 7);
    gens.push_back(x);
  }
  for (const auto& phi : gens) {
    XiModule e = xi_generate_module(phi);
    AbElement ann = xi_minimal_annihilator(e);
    AbElement ref = make_monic(model_from_xi(e).expand());
    const int o = std::min(ann.order(), ref.order());
    EXPECT_EQ(ann.truncated(o), ref.truncated(o)) << to_string(phi);
  }
}
