#pragma once

#include <random>
#include <vector>

#include "frescos/adapted_model.hpp"
#include "frescos/alpha.hpp"
#include "frescos/presentation.hpp"
#include "frescos/series.hpp"

namespace frescos {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Nonzero rational with small numerator and denominator.
inline Rat random_rat(Rng& rng, int max_num = 3, int max_den = 3) {
  int n = 0;
  while (n == 0) n = uniform_int(rng, -max_num, max_num);
  return rat(n, uniform_int(rng, 1, max_den));
}

/// 1 + a few r·b^e with 1 ≤ e ≤ max_exp.
inline Series random_unit(Rng& rng, int order, int max_terms = 3, int max_exp = 6) {
  Series s = Series::one(order);
  int terms = uniform_int(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    int e = uniform_int(rng, 1, std::min(max_exp, order));
    s.at(e) = random_rat(rng);
  }
  return s;
}

struct SampleOptions {
  int min_gap = 0;
  int max_gap = 3;
  bool trivial_units = false;
};

/// Geometric, [λ]-primitive, principal presentation of the given rank.
inline Presentation random_presentation(Rng& rng, int rank, int order, const SampleOptions& opt = {}) {
  static const Rat fractions[] = {rat(1, 2), rat(1, 3), rat(2, 3), rat(1), rat(3, 4), rat(5, 6)};
  Rat lambda = Rat(rank - 1) + fractions[uniform_int(rng, 0, 5)] + uniform_int(rng, 0, 2);
  FactorForm f;
  for (int j = 1; j <= rank; ++j) {
    f.push_back({lambda, opt.trivial_units ? Series::one(order) : random_unit(rng, order)});
    lambda += uniform_int(rng, opt.min_gap, opt.max_gap) - 1;
  }
  return Presentation::validate(std::move(f));
}

/// Rank-3 or rank-4 presentation with all p_j ≥ 1 whose F_{k−1} and E/F_1
/// are semi-simple. Rank 3 is built by clearing the obstruction
/// coefficients; rank 4 by rejection after clearing them.
inline Presentation random_f0(Rng& rng, int rank, int order, int max_gap = 3) {
  for (;;) {
    Presentation p = random_presentation(rng, rank, order, {1, max_gap, false});
    FactorForm f = p.factors();
    for (int j = 1; j < rank; ++j) f[j - 1].unit.at(p.p(j)) = 0;
    Presentation q = Presentation::validate(std::move(f));
    if (rank <= 3 || in_class_f0(q)) return q;
  }
}

/// Element whose coordinates are short random polynomials with a nonzero
/// constant term in the top slot.
inline ModuleElement random_generator(Rng& rng, const AdaptedModel& model, int max_exp = 4) {
  ModuleElement g = model.zero();
  for (int j = 1; j <= model.rank(); ++j) {
    Series c(model.order());
    for (int e = 0; e <= std::min(max_exp, model.order()); ++e)
      if (uniform_int(rng, 0, 2) == 0) c.at(e) = random_rat(rng);
    if (j == model.rank() && sgn(c[0]) == 0) c.at(0) = random_rat(rng);
    g[j] = c;
  }
  return g;
}

}  // namespace frescos
