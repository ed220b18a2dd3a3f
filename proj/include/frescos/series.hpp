#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "frescos/error.hpp"
#include "frescos/rational.hpp"

namespace frescos {

/// Series truncation used when no other order is requested.
inline constexpr int kDefaultOrder = 64;

/// Truncated formal power series in b with exact coefficients.
///
/// A series of order N knows its coefficients at b^0 .. b^N; everything
/// above is unknown, not zero, and reading it is an error. Results of
/// arithmetic carry the order that is actually determined by the operands.
class Series {
 public:
  /// The zero series known to order 0.
  Series() : coeffs_(1) {}

  /// The zero series known to `order`.
  explicit Series(int order) : coeffs_(checked_size(order)) {}

  /// Takes ownership of coefficients b^0 .. b^{size-1}; the order is size-1.
  explicit Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  }

  static Series constant(const Rat& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static Series one(int order) { return constant(Rat(1), order); }

  /// c·b^e known to `order`; e beyond the order leaves the zero series.
  static Series monomial(const Rat& c, int e, int order) {
    Series s(order);
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (e <= order) s.coeffs_[static_cast<std::size_t>(e)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rat& coeff(int i) const {
    if (i < 0 || i > order())
      throw Error(ErrorKind::CoefficientBeyondOrder,
                  "coefficient b^" + std::to_string(i) + " requested, known only to order " +
                      std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Rat& operator[](int i) const { return coeff(i); }

  /// Mutable access for builders. Same bounds rule as coeff().
  Rat& at(int i) {
    if (i < 0 || i > order())
      throw Error(ErrorKind::CoefficientBeyondOrder, "coefficient b^" + std::to_string(i) + " beyond order");
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<Rat>& coefficients() const { return coeffs_; }

  bool is_unit() const { return sgn(coeffs_[0]) != 0; }

  /// True when every known coefficient vanishes.
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return sgn(c) == 0; });
  }

  /// Index of the first nonzero known coefficient, or -1.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0) return i;
    return -1;
  }

  /// Highest index carrying a nonzero coefficient, or -1.
  int degree() const {
    for (int i = order(); i >= 0; --i)
      if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0) return i;
    return -1;
  }

  /// Drops knowledge above `order`; asking for more than is known is an error.
  Series truncated(int new_order) const {
    if (new_order > order())
      throw Error(ErrorKind::OrderUnderflow, "cannot raise order " + std::to_string(order()) + " to " +
                                                 std::to_string(new_order));
    return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  /// Re-declares a finite expansion at a larger order. Only sound when the
  /// unknown tail is known to vanish (polynomial literals).
  Series padded(int new_order) const {
    if (new_order <= order()) return truncated(new_order);
    std::vector<Rat> c = coeffs_;
    c.resize(checked_size(new_order));
    return Series(std::move(c));
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Series operator+(const Series& f, const Series& g) {
    int n = std::min(f.order(), g.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = f.coeffs_[i] + g.coeffs_[i];
    return r;
  }

  friend Series operator-(const Series& f, const Series& g) {
    int n = std::min(f.order(), g.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = f.coeffs_[i] - g.coeffs_[i];
    return r;
  }

  friend Series operator*(const Series& f, const Series& g) {
    int n = std::min(f.order(), g.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (sgn(f.coeffs_[i]) == 0) continue;
      for (int j = 0; i + j <= n; ++j)
        if (sgn(g.coeffs_[j]) != 0) r.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return r;
  }

  friend Series operator*(const Rat& c, const Series& f) {
    Series r = f;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }
  friend Series operator*(const Series& f, const Rat& c) { return c * f; }

  Series& operator+=(const Series& g) { return *this = *this + g; }
  Series& operator-=(const Series& g) { return *this = *this - g; }
  Series& operator*=(const Series& g) { return *this = *this * g; }

  /// Multiplicative inverse; the order is preserved.
  Series inverse() const {
    if (!is_unit()) throw Error(ErrorKind::InversionOfNonUnit, "constant term is zero");
    int n = order();
    Series r(n);
    Rat inv0 = 1 / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int i = 1; i <= n; ++i) {
      Rat acc;
      for (int j = 1; j <= i; ++j)
        if (sgn(coeffs_[j]) != 0) acc += coeffs_[j] * r.coeffs_[i - j];
      r.coeffs_[i] = -acc * inv0;
    }
    return r;
  }

  /// d/db; one order of knowledge is lost.
  Series derivative() const {
    if (order() < 1) throw Error(ErrorKind::OrderUnderflow, "derivative of an order-0 series");
    Series r(order() - 1);
    for (int i = 1; i <= order(); ++i) r.coeffs_[i - 1] = coeffs_[i] * i;
    return r;
  }

  /// b^2·f', the term the commutation rule produces. It is known one order
  /// beyond f; the result is kept at f's order.
  Series b2_derivative() const {
    Series r(order());
    for (int i = 1; i + 1 <= order(); ++i) r.coeffs_[i + 1] = coeffs_[i] * i;
    return r;
  }

  /// Multiplication by b^e; knowledge grows by e.
  Series shifted(int e) const {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative shift");
    Series r(order() + e);
    for (int i = 0; i <= order(); ++i) r.coeffs_[i + e] = coeffs_[i];
    return r;
  }

  /// Division by b^e; the low coefficients must vanish and e orders are lost.
  Series unshifted(int e) const {
    if (e < 0 || e > order()) throw Error(ErrorKind::OrderUnderflow, "cannot divide by b^" + std::to_string(e));
    for (int i = 0; i < e; ++i)
      if (sgn(coeffs_[i]) != 0)
        throw Error(ErrorKind::InvalidArgument, "series is not divisible by b^" + std::to_string(e));
    return Series(std::vector<Rat>(coeffs_.begin() + e, coeffs_.end()));
  }

  /// Equality of known data: same order and same coefficients.
  friend bool operator==(const Series& f, const Series& g) { return f.coeffs_ == g.coeffs_; }

  /// Agreement of coefficients b^0 .. b^upto; both must know that far.
  bool agrees_with(const Series& g, int upto) const {
    for (int i = 0; i <= upto; ++i)
      if (coeff(i) != g.coeff(i)) return false;
    return true;
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw Error(ErrorKind::OrderUnderflow, "negative series order " + std::to_string(order));
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Rat> coeffs_;
};

/// `1 + 3b^2 - 1/2b^5`. Only nonzero known coefficients are printed.
inline std::string to_string(const Series& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    const Rat& c = s[i];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    std::string term;
    if (i == 0 || mag != 1) term = to_string(mag);
    if (i >= 1) term += "b";
    if (i >= 2) term += "^" + std::to_string(i);
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

/// Shapes of the first-order resonant equations solved coefficient-wise.
enum class OdeForm {
  /// b·T' − c·T = R, i.e. (n − c)·t_n = r_n.
  A,
  /// b²·X' − c·b·X = R with r_0 = 0, i.e. (n − c)·x_n = r_{n+1}.
  B,
};

/// Solves the resonant equation of the given form. At the resonant index
/// n = c the free coefficient is set to 0 and the matching right-hand side
/// coefficient must vanish; otherwise ResonantObstruction is thrown.
/// Form B loses one order (x_n is fed by r_{n+1}).
inline Series solve_resonant_ode(OdeForm form, int c, const Series& rhs) {
  if (c < 0) throw Error(ErrorKind::InvalidArgument, "resonance constant must be nonnegative");
  if (form == OdeForm::A) {
    Series t(rhs.order());
    for (int n = 0; n <= rhs.order(); ++n) {
      if (n == c) {
        if (sgn(rhs[n]) != 0)
          throw Error(ErrorKind::ResonantObstruction,
                      "form A: rhs coefficient at resonant index " + std::to_string(c) + " is " + to_string(rhs[n]));
        continue;
      }
      t.at(n) = rhs[n] / (n - c);
    }
    return t;
  }
  if (rhs.order() < 1) throw Error(ErrorKind::OrderUnderflow, "form B needs rhs order >= 1");
  if (sgn(rhs[0]) != 0) throw Error(ErrorKind::InvalidArgument, "form B needs a rhs with zero constant term");
  Series x(rhs.order() - 1);
  for (int n = 0; n + 1 <= rhs.order(); ++n) {
    if (n == c) {
      if (sgn(rhs[n + 1]) != 0)
        throw Error(ErrorKind::ResonantObstruction, "form B: rhs coefficient at b^" + std::to_string(c + 1) +
                                                        " is " + to_string(rhs[n + 1]));
      continue;
    }
    x.at(n) = rhs[n + 1] / (n - c);
  }
  return x;
}

}  // namespace frescos
