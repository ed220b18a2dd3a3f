#include <gtest/gtest.h>

#include "frescos/alpha.hpp"
#include "frescos/oracle.hpp"
#include "frescos/sampling.hpp"

using namespace frescos;

namespace {

const int N = 32;

Series poly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Series(std::move(v)).padded(N);
}

Presentation worked_rank3() {
  return Presentation::validate({{3, poly({1, 0, 1})}, {3, Series::one(N)}, {3, Series::one(N)}});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(ClassifyRank2, Case2Theme) {
  Rank2Class c = classify_rank2(Presentation::validate({{rat(5, 2), poly({1, 0, 3})}, {rat(7, 2), Series::one(N)}}));
  EXPECT_EQ(c.which, Rank2Case::Case2);
  EXPECT_EQ(c.p1, 2);
  EXPECT_EQ(c.alpha, 3);
  EXPECT_TRUE(c.is_theme);
  EXPECT_FALSE(c.is_semisimple);
}

TEST(ClassifyRank2, Case1) {
  Rank2Class c = classify_rank2(Presentation::validate(trivial_factors({rat(7, 2), rat(5, 2)}, N)));
  EXPECT_EQ(c.which, Rank2Case::Case1);
  EXPECT_EQ(c.alpha, 1);
  EXPECT_TRUE(c.is_theme);
}

TEST(ClassifyRank2, Case2SemiSimple) {
  Rank2Class c = classify_rank2(Presentation::validate({{rat(5, 2), poly({1, 1})}, {rat(7, 2), Series::one(N)}}));
  EXPECT_EQ(c.alpha, 0);
  EXPECT_TRUE(c.is_semisimple);
  EXPECT_FALSE(c.is_theme);
}

TEST(ClassifyRank2, Errors) {
  EXPECT_EQ(kind_of([] { classify_rank2(worked_rank3()); }), ErrorKind::WrongRank);
  EXPECT_EQ(kind_of([] { classify_rank2(Presentation::validate(trivial_factors({rat(5, 2), rat(10, 3)}, N))); }),
            ErrorKind::NotPrimitive);
}

TEST(ClassifyRank2, NormalizationKeepsAlpha) {
  Presentation p = Presentation::validate({{rat(5, 2), poly({1, 0, 3})}, {rat(7, 2), poly({1, 2, 5})}});
  EXPECT_EQ(classify_rank2(p).alpha, classify_rank2(normalize_last_unit(p)).alpha);
}

TEST(AlphaReduceStep, WorkedExample) {
  Presentation r = alpha_reduce_step(worked_rank3());
  ASSERT_EQ(r.rank(), 2);
  EXPECT_EQ(r.lambda(1), 3);
  EXPECT_EQ(r.lambda(2), 4);
  EXPECT_TRUE(r.unit(1).agrees_with(poly({1, 0, 1}), 20));
  EXPECT_TRUE(r.unit(2).agrees_with(Series::one(N), 20));
}

TEST(AlphaReduceStep, TrivialUnitsStayTrivial) {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    Presentation p = random_presentation(rng, uniform_int(rng, 3, 4), N, {1, 3, true});
    Presentation r = alpha_reduce_step(p);
    for (int j = 1; j <= r.rank(); ++j) EXPECT_EQ(r.unit(j), Series::one(r.unit(j).order()));
  }
}

TEST(AlphaReduceStep, ObstructionIsNotInF0) {
  // p_2 = 1 and S_2 with a b^1 term.
  Presentation p = Presentation::validate({{3, Series::one(N)}, {3, poly({1, 1})}, {3, Series::one(N)}});
  EXPECT_EQ(kind_of([&] { alpha_reduce_step(p); }), ErrorKind::NotInF0);
}

TEST(AlphaInvariant, Examples) {
  EXPECT_EQ(alpha_invariant(Presentation::validate({{rat(5, 2), poly({1, 0, 3})}, {rat(7, 2), Series::one(N)}})), 3);
  EXPECT_EQ(alpha_invariant(worked_rank3()), 1);
  Rng rng(62);
  for (int t = 0; t < 5; ++t) EXPECT_EQ(alpha_invariant(random_presentation(rng, 4, N, {1, 2, true})), 0);
}

TEST(AlphaInvariant, Errors) {
  EXPECT_EQ(kind_of([] { alpha_invariant(Presentation::validate(trivial_factors({rat(7, 2), rat(5, 2)}, N))); }),
            ErrorKind::PValueZero);
  // F_2 not semi-simple.
  Presentation p = Presentation::validate({{3, poly({1, 1})}, {3, Series::one(N)}, {3, Series::one(N)}});
  EXPECT_EQ(kind_of([&] { alpha_invariant(p); }), ErrorKind::NotInF0);
}

TEST(Rank3Formula, Examples) {
  EXPECT_EQ(rank3_alpha_formula(worked_rank3()), 1);
  // S_2 = 1: coefficient of b^{p1+p2} in S_1.
  Presentation p = Presentation::validate({{3, poly({1, 0, 0, 0, 5})}, {4, Series::one(N)}, {5, Series::one(N)}});
  EXPECT_EQ(rank3_alpha_formula(p), 5);
}

TEST(Rank3Formula, TrivialS1) {
  // p1 = 1, p2 = 2, S_2 = 1 + 7b^3: −s²_{p1+p2}·p2/p1.
  Presentation p = Presentation::validate({{3, Series::one(N)}, {3, poly({1, 0, 0, 7})}, {4, Series::one(N)}});
  EXPECT_EQ(rank3_alpha_formula(p), -14);
  EXPECT_EQ(alpha_invariant(p), -14);
}

TEST(AlphaProperty, RecursionMatchesRank3Formula) {
  Rng rng(63);
  for (int t = 0; t < 30; ++t) {
    Presentation p = random_f0(rng, 3, N);
    EXPECT_EQ(alpha_invariant(p), rank3_alpha_formula(p)) << to_string(p);
  }
}

TEST(AlphaProperty, SemisimpleIffAlphaZero) {
  Rng rng(64);
  for (int t = 0; t < 30; ++t) {
    Presentation p = random_f0(rng, uniform_int(rng, 3, 4), N);
    if (t % 3 == 0) p = normalize_last_unit(p);
    EXPECT_EQ(is_semisimple(p), sgn(alpha_invariant(p)) == 0);
  }
}

TEST(AlphaProperty, IntegerTwistInvariance) {
  Rng rng(65);
  for (int t = 0; t < 15; ++t) {
    Presentation p = random_f0(rng, uniform_int(rng, 3, 4), N);
    EXPECT_EQ(alpha_invariant(twist(p, uniform_int(rng, 1, 3))), alpha_invariant(p));
  }
}

TEST(AlphaProperty, ReduceStepIndependentOfTau) {
  Rng rng(66);
  for (int t = 0; t < 10; ++t) {
    Presentation p = random_f0(rng, 3, N);
    Rat base = classify_rank2(alpha_reduce_step(p)).alpha;
    for (Rat tau : {rat(1), rat(-2, 3), rat(5, 2)}) EXPECT_EQ(classify_rank2(alpha_reduce_step(p, tau)).alpha, base);
  }
}

TEST(AlphaProperty, Rank2IsomorphismInvariance) {
  Rng rng(67);
  for (int t = 0; t < 10; ++t) {
    Presentation p = random_presentation(rng, 2, N, {1, 3, false});
    AdaptedModel m(p);
    Rat alpha = classify_rank2(p).alpha;
    for (int g = 0; g < 5; ++g) {
      try {
        EXPECT_EQ(classify_rank2(m.regenerate(random_generator(rng, m))).alpha, alpha);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAGenerator);
      }
    }
  }
}

TEST(IsSemisimple, Examples) {
  Rng rng(68);
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(is_semisimple(random_presentation(rng, uniform_int(rng, 1, 4), N, {1, 3, true})));
  EXPECT_FALSE(is_semisimple(Presentation::validate(trivial_factors({4, 3, 4}, N))));
  EXPECT_FALSE(is_semisimple(worked_rank3()));
}

TEST(Themes, SubthemeOfWorkedExample) {
  EXPECT_EQ(subtheme_class(worked_rank3()), (ThemeClass{3, 4, 2, 1}));
  EXPECT_EQ(kind_of([] { subtheme_class(Presentation::validate(trivial_factors({3, 3, 3}, N))); }), ErrorKind::AlphaZero);
}

TEST(Themes, Rank2SubthemeIsItself) {
  Presentation p = Presentation::validate({{rat(5, 2), poly({1, 0, 3})}, {rat(7, 2), Series::one(N)}});
  EXPECT_EQ(subtheme_class(p), (ThemeClass{rat(5, 2), rat(7, 2), 2, 3}));
  EXPECT_EQ(quotient_theme_class(p), subtheme_class(p));
}

TEST(Themes, Beta) {
  EXPECT_EQ(beta_from_alpha({1, 1}, 1), -1);
  EXPECT_EQ(beta_from_alpha({2}, 5), 5);
  EXPECT_EQ(beta_from_alpha({1, 2, 3}, 1), Rat(1 * 3, 1) / Rat(3 * 5));
  EXPECT_EQ(quotient_theme_class(worked_rank3()), (ThemeClass{2, 3, 2, -1}));
}

TEST(Themes, DualTwist) {
  EXPECT_EQ(dual_twist_rank2({rat(5, 2), rat(7, 2), 2, 3}, 6), (ThemeClass{rat(5, 2), rat(7, 2), 2, -3}));
}

TEST(Themes, SubthemeMatchesOracleSubmodule) {
  // The sub-theme of the worked example is the rank-2 normal submodule
  // generated by the reduced element g; its oracle annihilator must carry the
  // reported fundamental invariants (3, 4).
  Presentation p = worked_rank3();
  ThemeClass t = subtheme_class(p);
  Presentation r = alpha_reduce_step(p);
  const int M = 16;
  TruncatedRep rep = truncate_rep(r, M);
  AbElement ann = minimal_annihilator(rep, rep.basis_vector(2));
  EXPECT_EQ(bernstein_polynomial(ann, 2), bernstein_polynomial(expand_factor_form(trivial_factors({t.lambda_low, t.lambda_high}, M)), 2));
}
