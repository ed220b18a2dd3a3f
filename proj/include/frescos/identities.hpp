#pragma once

#include <string>

#include "frescos/ab_element.hpp"
#include "frescos/rational.hpp"
#include "frescos/series.hpp"

namespace frescos {

struct IdentityCheck {
  std::string name;
  bool holds = false;
  /// rhs − lhs in normal order; "0" when the identity holds.
  std::string difference;
};

namespace detail {

inline IdentityCheck compare(std::string name, const AbElement& lhs, const AbElement& rhs) {
  AbElement d = rhs - lhs;
  return {std::move(name), d.is_zero(), to_string(d)};
}

inline AbElement unit_op(const Series& s) { return AbElement::from_series(s); }

}  // namespace detail

/// (a − λ₂b)(a − λ₃b) = (a − (λ₃+1)b)(a − (λ₂−1)b).
inline IdentityCheck check_exchange_identity(const Rat& l2, const Rat& l3, int order) {
  AbElement lhs = AbElement::linear(l2, order) * AbElement::linear(l3, order);
  AbElement rhs = AbElement::linear(l3 + 1, order) * AbElement::linear(l2 - 1, order);
  return detail::compare("exchange(" + to_string(l2) + ", " + to_string(l3) + ")", lhs, rhs);
}

/// (a − λ₁b)(a − λ₂b) = U^{-1}(a − (λ₂+1)b)U²(a − (λ₁−1)b)U^{-1} with
/// U = 1 + ρ·b^{p₁} and λ₂ = λ₁ + p₁ − 1.
inline IdentityCheck check_unit_exchange_identity(const Rat& l1, int p1, const Rat& rho, int order) {
  Rat l2 = l1 + p1 - 1;
  Series u = Series::one(order) + Series::monomial(rho, p1, order);
  AbElement ui = detail::unit_op(u.inverse());
  AbElement lhs = AbElement::linear(l1, order) * AbElement::linear(l2, order);
  AbElement rhs = ui * AbElement::linear(l2 + 1, order) * detail::unit_op(u * u) * AbElement::linear(l1 - 1, order) * ui;
  return detail::compare("unit-exchange(lambda1=" + to_string(l1) + ", p1=" + std::to_string(p1) + ", rho=" + to_string(rho) + ")",
                         lhs, rhs);
}

/// (a − (λ₁−1)b)W^{-1}(a − λ₃b) = V^{-1}(a − (λ₃+1)b)V²W^{-1}(a − (λ₁−2)b)V^{-1}
/// with W = 1 + α·b^{p₂}, V = 1 + β·b^{p₂}, β = (1 + p₂/p₁)·α and
/// λ₃ = λ₁ + p₁ + p₂ − 2.
inline IdentityCheck check_v_identity(const Rat& l1, int p1, int p2, const Rat& alpha, int order) {
  Rat l3 = l1 + p1 + p2 - 2;
  Rat beta = (1 + Rat(p2) / p1) * alpha;
  Series w = Series::one(order) + Series::monomial(alpha, p2, order);
  Series v = Series::one(order) + Series::monomial(beta, p2, order);
  AbElement wi = detail::unit_op(w.inverse()), vi = detail::unit_op(v.inverse());
  AbElement lhs = AbElement::linear(l1 - 1, order) * wi * AbElement::linear(l3, order);
  AbElement rhs = vi * AbElement::linear(l3 + 1, order) * detail::unit_op(v * v) * wi * AbElement::linear(l1 - 2, order) * vi;
  return detail::compare("v-identity(lambda1=" + to_string(l1) + ", p1=" + std::to_string(p1) + ", p2=" +
                             std::to_string(p2) + ", alpha=" + to_string(alpha) + ")",
                         lhs, rhs);
}

/// a·b − b·a = b² and a·b^ν = b^ν·(a + ν·b) for ν = 1..max_nu.
inline IdentityCheck check_commutation(int max_nu, int order) {
  AbElement a = AbElement::a(order), b = AbElement::b(order);
  AbElement diff = (a * b - b * a) - b * b;
  for (int nu = 1; nu <= max_nu; ++nu) {
    AbElement bn = AbElement::from_series(Series::monomial(1, nu, order));
    diff += a * bn - bn * (a + Rat(nu) * b);
  }
  return {"commutation(nu<=" + std::to_string(max_nu) + ")", diff.is_zero(), to_string(diff)};
}

}  // namespace frescos
