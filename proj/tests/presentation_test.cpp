#include <gtest/gtest.h>

#include "frescos/presentation.hpp"
#include "frescos/sampling.hpp"

using namespace frescos;

namespace {

const int N = 24;

Series unit_1_3b2() { return Series::one(N) + Series::monomial(3, 2, N); }

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

TEST(Presentation, ValidRank2Example) {
  Presentation p = Presentation::validate({{rat(5, 2), unit_1_3b2()}, {rat(7, 2), Series::one(N)}});
  EXPECT_TRUE(p.primitive());
  EXPECT_TRUE(p.principal());
  EXPECT_EQ(p.p(1), 2);
}

TEST(Presentation, RankOneBound) {
  EXPECT_NO_THROW(Presentation::validate({{rat(1, 2), Series::one(N)}}));
}

TEST(Presentation, RejectsNonGeometric) {
  EXPECT_EQ(kind_of([] { Presentation::validate({{rat(1, 2), Series::one(N)}, {rat(1, 2), Series::one(N)}}); }),
            ErrorKind::NotGeometric);
}

TEST(Presentation, RejectsNonUnitConstant) {
  Series s = Series::constant(2, N) + Series::monomial(1, 1, N);
  EXPECT_EQ(kind_of([&] { Presentation::validate({{rat(5, 2), s}}); }), ErrorKind::NonUnitSeries);
}

TEST(Presentation, PrimitivityAndPrincipalityFlags) {
  Presentation mixed = Presentation::validate({{rat(5, 2), Series::one(N)}, {rat(10, 3), Series::one(N)}});
  EXPECT_FALSE(mixed.primitive());
  Presentation descending = Presentation::validate({{rat(9, 2), Series::one(N)}, {rat(5, 2), Series::one(N)}});
  EXPECT_FALSE(descending.principal());
}

TEST(Bernstein, RootsAndMu) {
  Presentation p = Presentation::validate({{rat(5, 2), unit_1_3b2()}, {rat(7, 2), Series::one(N)}});
  BernsteinData b = bernstein(p);
  EXPECT_EQ(b.roots, (std::vector<Rat>{rat(-3, 2), rat(-7, 2)}));
  EXPECT_EQ(b.mu, 6);
  EXPECT_EQ(initial_form(p.expand(), 2), expand_factor_form(b.element));
}

TEST(Bernstein, RankOne) {
  BernsteinData b = bernstein(Presentation::validate({{rat(4, 3), Series::one(N)}}));
  EXPECT_EQ(b.roots, std::vector<Rat>{rat(-4, 3)});
  EXPECT_EQ(b.mu, rat(4, 3));
}

TEST(Bernstein, ThemeInvariants) {
  // (λ+N', …, λ): λ_j + j constant.
  Rat l = rat(1, 3);
  std::vector<Rat> lambdas{l + 3, l + 2, l + 1, l};
  Presentation p = Presentation::validate(trivial_factors(lambdas, N));
  EXPECT_TRUE(p.principal());
  EXPECT_EQ(expand_factor_form(bernstein(p).element),
            AbElement::linear(l + 3, N) * AbElement::linear(l + 2, N) * AbElement::linear(l + 1, N) * AbElement::linear(l, N));
}

TEST(FundamentalInvariants, Reordering) {
  EXPECT_EQ(fundamental_invariants({rat(7, 2), rat(3, 2)}), (std::vector<Rat>{rat(5, 2), rat(5, 2)}));
  std::vector<Rat> principal{rat(5, 2), rat(7, 2), rat(7, 2)};
  EXPECT_EQ(fundamental_invariants(principal), principal);
  EXPECT_EQ(kind_of([] { fundamental_invariants({rat(1, 2), rat(1, 3)}); }), ErrorKind::MixedPrimitiveClasses);
}

TEST(FundamentalInvariants, ThemeNumbersSortToThemselves) {
  std::vector<Rat> theme{rat(17, 4), rat(13, 4), rat(9, 4)};
  EXPECT_EQ(fundamental_invariants(theme), theme);
}

TEST(SubQuotient, Slices) {
  Rng rng(5);
  Presentation p = random_presentation(rng, 3, N);
  EXPECT_EQ(sub_quotient(p, 1, 3), p);
  EXPECT_EQ(sub_quotient(p, 1, 2).factors(), FactorForm(p.factors().begin(), p.factors().begin() + 2));
  EXPECT_EQ(sub_quotient(p, 2, 3).factors(), FactorForm(p.factors().begin() + 1, p.factors().end()));
  EXPECT_EQ(kind_of([&] { sub_quotient(p, 2, 4); }), ErrorKind::IndexOutOfRange);
}

TEST(Twist, ShiftsLambdas) {
  Presentation p = Presentation::validate({{rat(5, 2), unit_1_3b2()}, {rat(7, 2), Series::one(N)}});
  EXPECT_EQ(twist(p, 0), p);
  Presentation t = twist(p, rat(1, 2));
  EXPECT_EQ(t.lambda(1), 3);
  EXPECT_EQ(t.lambda(2), 4);
  EXPECT_EQ(t.unit(1), unit_1_3b2());
  EXPECT_EQ(twist(t, rat(-1, 2)), p);
}

TEST(NormalizeLastUnit, DropsTrailingUnit) {
  Presentation p = Presentation::validate({{rat(5, 2), unit_1_3b2()}, {rat(7, 2), unit_1_3b2()}});
  Presentation n = normalize_last_unit(p);
  EXPECT_EQ(n.unit(1), unit_1_3b2());
  EXPECT_EQ(n.unit(2), Series::one(N));
  EXPECT_EQ(normalize_last_unit(n), n);
}

TEST(PresentationProperty, BernsteinMultiplicativityAndMuAdditivity) {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    Presentation p = random_presentation(rng, uniform_int(rng, 2, 4), N);
    const int k = p.rank();
    AbElement whole = expand_factor_form(bernstein(p).element);
    EXPECT_EQ(initial_form(p.expand(), k), whole);
    for (int i = 1; i < k; ++i) {
      Presentation f = sub_quotient(p, 1, i), g = sub_quotient(p, i + 1, k);
      EXPECT_EQ(whole, expand_factor_form(bernstein(f).element) * expand_factor_form(bernstein(g).element));
      EXPECT_EQ(bernstein(p).mu, bernstein(f).mu + bernstein(g).mu);
    }
  }
}
