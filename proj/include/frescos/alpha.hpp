#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frescos/adapted_model.hpp"
#include "frescos/error.hpp"
#include "frescos/presentation.hpp"
#include "frescos/series.hpp"

namespace frescos {

enum class Rank2Case { Case1, Case2 };

struct Rank2Class {
  Rank2Case which = Rank2Case::Case1;
  Rat lambda1, lambda2;
  int p1 = 0;
  Rat alpha;
  bool is_theme = false;
  bool is_semisimple = false;
};

/// Rank-2 theme (1 + parameter·b^p)^{-1} between λ_low and λ_high = λ_low + p − 1.
struct ThemeClass {
  Rat lambda_low, lambda_high;
  int p = 0;
  Rat parameter;

  friend bool operator==(const ThemeClass&, const ThemeClass&) = default;
};

inline std::string to_string(const ThemeClass& t) {
  return "(" + to_string(t.lambda_low) + ", " + to_string(t.lambda_high) + ", p=" + std::to_string(t.p) +
         ", parameter " + to_string(t.parameter) + ")";
}

namespace detail {

inline void require_primitive_principal(const Presentation& p) {
  if (!p.primitive()) throw Error(ErrorKind::NotPrimitive, "presentation is not [lambda]-primitive");
  if (!p.principal()) throw Error(ErrorKind::NotPrincipal, "lambda_j + j must be non-decreasing");
}

}  // namespace detail

inline Rank2Class classify_rank2(const Presentation& p) {
  if (p.rank() != 2) throw Error(ErrorKind::WrongRank, "expected rank 2, got " + std::to_string(p.rank()));
  detail::require_primitive_principal(p);
  Presentation n = normalize_last_unit(p);
  Rank2Class c;
  c.lambda1 = n.lambda(1);
  c.lambda2 = n.lambda(2);
  c.p1 = n.p(1);
  if (c.p1 == 0) {
    c.which = Rank2Case::Case1;
    c.alpha = 1;
    c.is_theme = true;
    c.is_semisimple = false;
    return c;
  }
  c.which = Rank2Case::Case2;
  if (n.unit(1).order() < c.p1)
    throw Error(ErrorKind::CoefficientBeyondOrder, "unit S_1 must be known to order p_1 = " + std::to_string(c.p1));
  c.alpha = n.unit(1)[c.p1];
  c.is_theme = sgn(c.alpha) != 0;
  c.is_semisimple = !c.is_theme;
  return c;
}

/// Rank k ≥ 3 → rank k − 1 with the same α. `tau` moves the solution of the
/// resonant equation along its free direction b^{p_{k−1}−1}.
inline Presentation alpha_reduce_step(const Presentation& input, const Rat& tau = Rat(0)) {
  const int k = input.rank();
  if (k < 3) throw Error(ErrorKind::WrongRank, "reduction needs rank >= 3, got " + std::to_string(k));
  detail::require_primitive_principal(input);
  Presentation p = normalize_last_unit(input);
  const int pk = p.p(k - 1);
  if (pk < 1) throw Error(ErrorKind::PValueZero, "p_" + std::to_string(k - 1) + " = 0");
  AdaptedModel model(p);
  const int N = model.order();
  const Series& s = p.unit(k - 1);

  // With Y = X·S_{k−1}: b²Y' − (p_{k−1} − 1)·b·Y = 1 − S_{k−1}.
  Series y;
  try {
    y = solve_resonant_ode(OdeForm::B, pk - 1, Series::one(N) - s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResonantObstruction) throw;
    throw Error(ErrorKind::NotInF0, "S_" + std::to_string(k - 1) + " has a nonzero b^" + std::to_string(pk) + " coefficient");
  }
  if (sgn(tau) != 0) y += Series::monomial(tau, pk - 1, y.order());
  Series x = y * s.truncated(y.order()).inverse();

  ModuleElement e = model.basis(k);
  e[k - 1] = x;
  e = ModuleElement(e.coords());
  const AbElement op = AbElement::linear(p.lambda(k - 1), N) * AbElement::linear(p.lambda(k), N);
  ModuleElement g = model.apply(op, e);
  for (int j = k - 1; j <= k; ++j)
    if (!g[j].is_zero()) throw Error(ErrorKind::NotInF0, "reduced element is not in F_" + std::to_string(k - 2));
  AdaptedModel sub = model.submodel(k - 2);
  Presentation head = sub.regenerate(model.restrict_to(g, k - 2));
  FactorForm f = head.factors();
  f.push_back({p.lambda(k) + 1, Series::one(head.order())});
  return Presentation::validate(std::move(f));
}

namespace detail {

inline void require_positive_gaps(const Presentation& p) {
  for (int j = 1; j < p.rank(); ++j)
    if (p.p(j) == 0) throw Error(ErrorKind::PValueZero, "p_" + std::to_string(j) + " = 0");
}

/// α without the F₀ membership test.
inline Rat alpha_unchecked(const Presentation& p) {
  Presentation q = p;
  while (q.rank() > 2) q = alpha_reduce_step(q);
  return classify_rank2(q).alpha;
}

inline bool is_semisimple_range(const Presentation& p, int i, int j, std::map<std::pair<int, int>, bool>& memo) {
  if (j - i + 1 <= 1) return true;
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool result = true;
  for (int t = i; t < j && result; ++t)
    if (p.p(t) == 0) result = false;
  if (result) result = is_semisimple_range(p, i, j - 1, memo) && is_semisimple_range(p, i + 1, j, memo);
  if (result) result = sgn(alpha_unchecked(sub_quotient(p, i, j))) == 0;
  memo[key] = result;
  return result;
}

}  // namespace detail

inline bool is_semisimple(const Presentation& p) {
  if (!p.primitive()) throw Error(ErrorKind::NotPrimitive, "presentation is not [lambda]-primitive");
  if (!p.principal()) throw Error(ErrorKind::NotPrincipal, "lambda_j + j must be non-decreasing");
  std::map<std::pair<int, int>, bool> memo;
  return detail::is_semisimple_range(p, 1, p.rank(), memo);
}

/// True when F_{k−1} and E/F_1 are semi-simple.
inline bool in_class_f0(const Presentation& p) {
  if (p.rank() < 3) return true;
  return is_semisimple(sub_quotient(p, 1, p.rank() - 1)) && is_semisimple(sub_quotient(p, 2, p.rank()));
}

inline Rat alpha_invariant(const Presentation& p) {
  if (p.rank() < 2) throw Error(ErrorKind::WrongRank, "alpha needs rank >= 2");
  detail::require_primitive_principal(p);
  detail::require_positive_gaps(p);
  if (!in_class_f0(p)) throw Error(ErrorKind::NotInF0, "F_{k-1} or E/F_1 is not semi-simple");
  return detail::alpha_unchecked(p);
}

/// Rank-3 closed form: with S_3 = 1, solve b·V' − p_2·V = −p_2·S_2 and read
/// the b^{p_1+p_2} coefficient of V·S_1.
inline Rat rank3_alpha_formula(const Presentation& input) {
  if (input.rank() != 3) throw Error(ErrorKind::WrongRank, "expected rank 3, got " + std::to_string(input.rank()));
  detail::require_primitive_principal(input);
  detail::require_positive_gaps(input);
  Presentation p = normalize_last_unit(input);
  const int p1 = p.p(1), p2 = p.p(2);
  const Series& s1 = p.unit(1);
  const Series& s2 = p.unit(2);
  if (s1.order() < p1 + p2) throw Error(ErrorKind::CoefficientBeyondOrder, "units must be known to order p_1 + p_2");
  if (sgn(s1[p1]) != 0)
    throw Error(ErrorKind::ResonantObstruction, "S_1 has a nonzero b^" + std::to_string(p1) + " coefficient");
  Series v = solve_resonant_ode(OdeForm::A, p2, Rat(-p2) * s2);
  return (v * s1)[p1 + p2];
}

inline ThemeClass subtheme_class(const Presentation& p) {
  Rat alpha = alpha_invariant(p);
  if (sgn(alpha) == 0) throw Error(ErrorKind::AlphaZero, "alpha vanishes: the fresco is semi-simple");
  const int k = p.rank();
  int total = 0;
  for (int j = 1; j < k; ++j) total += p.p(j);
  return {p.lambda(1), p.lambda(k) + (k - 2), total, alpha};
}

/// β = (−1)^k · Π_{i≤k−2}(p_1+…+p_i) / Π_{i≤k−2}(p_{k−i}+…+p_{k−1}) · α.
inline Rat beta_from_alpha(const std::vector<int>& gaps, const Rat& alpha) {
  const int k = static_cast<int>(gaps.size()) + 1;
  Rat num = 1, den = 1;
  int head = 0, tail = 0;
  for (int i = 1; i <= k - 2; ++i) {
    head += gaps[static_cast<std::size_t>(i - 1)];
    tail += gaps[static_cast<std::size_t>(k - 1 - i)];
    num *= head;
    den *= tail;
  }
  Rat beta = num / den * alpha;
  return k % 2 == 0 ? beta : Rat(-beta);
}

inline Rat beta_invariant(const Presentation& p) {
  Rat alpha = alpha_invariant(p);
  if (sgn(alpha) == 0) throw Error(ErrorKind::AlphaZero, "alpha vanishes: the fresco is semi-simple");
  return beta_from_alpha(p.gaps(), alpha);
}

inline ThemeClass quotient_theme_class(const Presentation& p) {
  Rat beta = beta_invariant(p);
  const int k = p.rank();
  int total = 0;
  for (int j = 1; j < k; ++j) total += p.p(j);
  return {p.lambda(1) - (k - 2), p.lambda(k), total, beta};
}

inline ThemeClass dual_twist_rank2(const ThemeClass& t, const Rat& delta) {
  return {delta - t.lambda_high, delta - t.lambda_low, t.p, -t.parameter};
}

}  // namespace frescos
