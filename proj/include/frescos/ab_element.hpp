#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "frescos/error.hpp"
#include "frescos/rational.hpp"
#include "frescos/series.hpp"

namespace frescos {

/// Element Σ_m a^m·c_m(b) of the algebra generated by a and b subject to
/// a·b − b·a = b², kept in normal order (a-powers left of the b-series).
///
/// Moving a series S to the right of a uses S·a = a·S − b²·S'; iterating
/// gives S·a^n = Σ_i C(n,i)·(−1)^i·a^{n−i}·D^i(S) with D(S) = b²·S'. D never
/// loses b-order, so products keep the minimum order of their operands.
class AbElement {
 public:
  /// Zero known to order 0.
  AbElement() : coeffs_(1) {}

  /// Coefficient list c_0 .. c_d; orders are unified to the smallest one.
  explicit AbElement(std::vector<Series> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "element needs at least one coefficient");
    unify_orders();
    trim();
  }

  static AbElement from_series(Series s) { return AbElement(std::vector<Series>{std::move(s)}); }
  static AbElement scalar(const Rat& c, int order) { return from_series(Series::constant(c, order)); }
  static AbElement zero(int order) { return from_series(Series(order)); }
  static AbElement one(int order) { return scalar(Rat(1), order); }

  /// a^m with unit coefficient.
  static AbElement a_power(int m, int order) {
    std::vector<Series> c(static_cast<std::size_t>(m) + 1, Series(order));
    c.back() = Series::one(order);
    return AbElement(std::move(c));
  }
  static AbElement a(int order) { return a_power(1, order); }
  static AbElement b(int order) { return from_series(Series::monomial(Rat(1), 1, order)); }

  /// a − λ·b.
  static AbElement linear(const Rat& lambda, int order) {
    return AbElement({Series::monomial(-lambda, 1, order), Series::one(order)});
  }

  int a_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int order() const { return coeffs_.front().order(); }

  /// Coefficient of a^m; zero above the degree.
  Series coeff(int m) const {
    if (m < 0) throw Error(ErrorKind::IndexOutOfRange, "negative a-power");
    if (m > a_degree()) return Series(order());
    return coeffs_[static_cast<std::size_t>(m)];
  }
  const Series& leading() const { return coeffs_.back(); }
  const std::vector<Series>& coefficients() const { return coeffs_; }

  bool is_zero() const { return a_degree() == 0 && coeffs_[0].is_zero(); }

  AbElement truncated(int new_order) const {
    std::vector<Series> c;
    c.reserve(coeffs_.size());
    for (const auto& s : coeffs_) c.push_back(s.truncated(new_order));
    return AbElement(std::move(c));
  }

  AbElement operator-() const {
    std::vector<Series> c;
    for (const auto& s : coeffs_) c.push_back(-s);
    return AbElement(std::move(c));
  }

  friend AbElement operator+(const AbElement& u, const AbElement& v) { return combine(u, v, false); }
  friend AbElement operator-(const AbElement& u, const AbElement& v) { return combine(u, v, true); }

  friend AbElement operator*(const Rat& c, const AbElement& u) {
    std::vector<Series> r;
    for (const auto& s : u.coeffs_) r.push_back(c * s);
    return AbElement(std::move(r));
  }

  /// Normal-ordered product.
  friend AbElement operator*(const AbElement& u, const AbElement& v) {
    int order = std::min(u.order(), v.order());
    int dv = v.a_degree();
    std::vector<Series> out(static_cast<std::size_t>(u.a_degree() + dv) + 1, Series(order));
    // Binomial coefficients C(n, i) for n <= dv.
    std::vector<std::vector<Rat>> binom(static_cast<std::size_t>(dv) + 1);
    for (int n = 0; n <= dv; ++n) {
      binom[n].assign(static_cast<std::size_t>(n) + 1, Rat(1));
      for (int i = 1; i < n; ++i) binom[n][i] = binom[n - 1][i - 1] + binom[n - 1][i];
    }
    for (int m = 0; m <= u.a_degree(); ++m) {
      Series f = u.coeffs_[m].truncated(order);
      if (f.is_zero()) continue;
      // D^i(f) for i = 0..dv.
      std::vector<Series> d{f};
      for (int i = 1; i <= dv; ++i) d.push_back(d.back().b2_derivative());
      for (int n = 0; n <= dv; ++n) {
        const Series g = v.coeffs_[n].truncated(order);
        if (g.is_zero()) continue;
        for (int i = 0; i <= n; ++i) {
          if (d[i].is_zero()) continue;
          Rat c = binom[n][i];
          if (i % 2 == 1) c = -c;
          out[static_cast<std::size_t>(m + n - i)] += c * (d[i] * g);
        }
      }
    }
    return AbElement(std::move(out));
  }

  AbElement& operator+=(const AbElement& v) { return *this = *this + v; }
  AbElement& operator-=(const AbElement& v) { return *this = *this - v; }
  AbElement& operator*=(const AbElement& v) { return *this = *this * v; }

  friend bool operator==(const AbElement& u, const AbElement& v) { return u.coeffs_ == v.coeffs_; }

  /// Coefficient-wise agreement of b^0 .. b^upto in every a-slot.
  bool agrees_with(const AbElement& v, int upto) const {
    int d = std::max(a_degree(), v.a_degree());
    for (int m = 0; m <= d; ++m)
      if (!coeff(m).agrees_with(v.coeff(m), upto)) return false;
    return true;
  }

 private:
  static AbElement combine(const AbElement& u, const AbElement& v, bool subtract) {
    int order = std::min(u.order(), v.order());
    int d = std::max(u.a_degree(), v.a_degree());
    std::vector<Series> c;
    for (int m = 0; m <= d; ++m) {
      Series x = u.coeff(m).truncated(order);
      Series y = v.coeff(m).truncated(order);
      c.push_back(subtract ? x - y : x + y);
    }
    return AbElement(std::move(c));
  }

  void unify_orders() {
    int order = coeffs_.front().order();
    for (const auto& s : coeffs_) order = std::min(order, s.order());
    for (auto& s : coeffs_)
      if (s.order() != order) s = s.truncated(order);
  }

  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Series> coeffs_;
};

/// Same as u*v; named for the operation table.
inline AbElement normal_form_mul(const AbElement& u, const AbElement& v) { return u * v; }

/// Converts Σ_m c_m(b)·a^m (series on the left) to normal order.
inline AbElement from_series_left(const std::vector<Series>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "empty coefficient list");
  int order = coeffs.front().order();
  for (const auto& s : coeffs) order = std::min(order, s.order());
  AbElement out = AbElement::zero(order);
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    out += AbElement::from_series(coeffs[m].truncated(order)) * AbElement::a_power(static_cast<int>(m), order);
  return out;
}

/// `a^2 - 6 a b + 45/4 b^2`: terms by descending a-power, then ascending b-power.
inline std::string to_string(const AbElement& u) {
  std::string out;
  for (int m = u.a_degree(); m >= 0; --m) {
    const Series& s = u.coefficients()[m];
    for (int n = 0; n <= s.order(); ++n) {
      const Rat& c = s[n];
      if (sgn(c) == 0) continue;
      Rat mag = abs(c);
      std::string mono;
      auto add = [&](const std::string& part) { mono += (mono.empty() ? "" : " ") + part; };
      if (m >= 1) add(m == 1 ? "a" : "a^" + std::to_string(m));
      if (n >= 1) add(n == 1 ? "b" : "b^" + std::to_string(n));
      std::string term = mag == 1 && !mono.empty() ? mono : (mono.empty() ? to_string(mag) : to_string(mag) + " " + mono);
      if (out.empty())
        out = (sgn(c) < 0 ? "-" : "") + term;
      else
        out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

/// One factor (a − λ·b)·S^{-1} of a product-form operator.
struct Factor {
  Rat lambda;
  Series unit;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Ordered product (a − λ_1 b)·S_1^{-1} ··· (a − λ_k b)·S_k^{-1}.
using FactorForm = std::vector<Factor>;

/// `(a - 5/2 b) [1 + 3b^2]^-1 (a - 7/2 b)`; trivial units are omitted.
inline std::string to_string(const FactorForm& f) {
  std::string out;
  for (const auto& [lambda, unit] : f) {
    if (!out.empty()) out += " ";
    if (sgn(lambda) == 0)
      out += "(a)";
    else
      out += "(a " + std::string(sgn(lambda) < 0 ? "+ " : "- ") + to_string(Rat(abs(lambda))) + " b)";
    Series one = Series::one(unit.order());
    if (!(unit == one)) out += " [" + to_string(unit) + "]^-1";
  }
  return out;
}

/// Expands a product form into normal order. The result is known to the
/// smallest unit order.
inline AbElement expand_factor_form(const FactorForm& f) {
  if (f.empty()) throw Error(ErrorKind::InvalidArgument, "empty factor form");
  int order = f.front().unit.order();
  for (const auto& fac : f) order = std::min(order, fac.unit.order());
  AbElement out = AbElement::one(order);
  for (const auto& [lambda, unit] : f) {
    out = out * AbElement::linear(lambda, order);
    out = out * AbElement::from_series(unit.truncated(order).inverse());
  }
  return out;
}

struct Division {
  AbElement quotient;
  AbElement remainder;
};

/// Division u = q·p + r with a_degree(r) < a_degree(p). The divisor must
/// have a unit leading a-coefficient.
inline Division left_divide(const AbElement& u, const AbElement& p) {
  if (!p.leading().is_unit())
    throw Error(ErrorKind::NonMonicDivisor, "leading a-coefficient of divisor is not a unit");
  int order = std::min(u.order(), p.order());
  int d = p.a_degree();
  Series lead_inv = p.leading().truncated(order).inverse();
  AbElement rem = u.truncated(order);
  AbElement quo = AbElement::zero(order);
  while (rem.a_degree() >= d && !rem.is_zero()) {
    int n = rem.a_degree();
    // a^{n-d}·T·p has leading coefficient T·lead(p) in slot n.
    std::vector<Series> tc(static_cast<std::size_t>(n - d) + 1, Series(order));
    tc.back() = rem.leading() * lead_inv;
    AbElement t(std::move(tc));
    quo += t;
    rem -= t * p;
    if (rem.a_degree() >= n && !rem.is_zero())
      throw Error(ErrorKind::OrderUnderflow, "division failed to lower the a-degree");
  }
  return {quo, rem};
}

/// The homogeneous part of total (a,b)-degree k, where a^m·b^ν has degree m+ν.
inline AbElement initial_form(const AbElement& u, int k) {
  int order = u.order();
  std::vector<Series> c;
  for (int m = 0; m <= std::min(k, u.a_degree()); ++m) {
    int nu = k - m;
    Series s(order);
    if (nu <= order) s.at(nu) = u.coefficients()[m][nu];
    c.push_back(std::move(s));
  }
  if (c.empty()) return AbElement::zero(order);
  return AbElement(std::move(c));
}

/// Polynomial in x with coefficients of x^0 .. x^d.
using RatPoly = std::vector<Rat>;

/// Bernstein polynomial B of a degree-k operator, read from its initial form
/// Σ_i a^{k−i}·β_i·b^i as B(x) = Σ_i β_i·(−1)^i·Π_{t=i}^{k−1}(x − t).
/// For a product form its roots are −(λ_j + j − k).
inline RatPoly bernstein_polynomial(const AbElement& u, int k) {
  AbElement in = initial_form(u, k);
  RatPoly out(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    if (k - i > in.a_degree()) continue;
    Rat beta = in.coefficients()[k - i][i];
    if (sgn(beta) == 0) continue;
    RatPoly f{Rat(1)};
    for (int t = i; t < k; ++t) {
      RatPoly g(f.size() + 1);
      for (std::size_t d = 0; d < f.size(); ++d) {
        g[d + 1] += f[d];
        g[d] -= f[d] * t;
      }
      f = std::move(g);
    }
    if (i % 2 == 1) beta = -beta;
    for (std::size_t d = 0; d < f.size(); ++d) out[d] += beta * f[d];
  }
  return out;
}

/// Scales p on the left by the inverse of its leading coefficient so the
/// a^d slot becomes 1. The left ideal generated is unchanged.
inline AbElement make_monic(const AbElement& p) {
  if (!p.leading().is_unit()) throw Error(ErrorKind::NonMonicDivisor, "leading a-coefficient is not a unit");
  return AbElement::from_series(p.leading().inverse()) * p;
}

}  // namespace frescos
