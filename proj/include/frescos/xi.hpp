#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "frescos/ab_element.hpp"
#include "frescos/error.hpp"
#include "frescos/linalg.hpp"
#include "frescos/presentation.hpp"
#include "frescos/series.hpp"

namespace frescos {

/// Truncated element of Ξ_λ^{(N)} ⊗ V: Σ c·s^{λ+m−1}·(Log s)^j ⊗ v_i over
/// components i = 1..dim, shifts m = 0..M and log powers j = 0..N, with
/// 0 < λ ≤ 1. Terms of shift above M are dropped; since a and b only raise
/// the shift, this is an exact quotient.
class XiExpansion {
 public:
  XiExpansion() = default;
  XiExpansion(const Rat& lambda, int dim, int max_shift, int max_log)
      : lambda_(lambda), dim_(dim), shifts_(max_shift), logs_(max_log) {
    if (sgn(lambda) <= 0 || lambda > 1) throw Error(ErrorKind::InvalidArgument, "base exponent must lie in (0, 1]");
    if (dim < 1 || max_shift < 0 || max_log < 0) throw Error(ErrorKind::InvalidArgument, "bad expansion shape");
    c_.assign(size(), Rat(0));
  }

  const Rat& lambda() const { return lambda_; }
  int dim() const { return dim_; }
  int max_shift() const { return shifts_; }
  int max_log() const { return logs_; }
  std::size_t size() const { return static_cast<std::size_t>(dim_) * (shifts_ + 1) * (logs_ + 1); }
  std::size_t layer_size() const { return static_cast<std::size_t>(dim_) * (logs_ + 1); }

  /// Layer-major flat index: shift, then component, then log power.
  std::size_t index(int component, int shift, int logpow) const {
    if (component < 1 || component > dim_ || shift < 0 || shift > shifts_ || logpow < 0 || logpow > logs_)
      throw Error(ErrorKind::IndexOutOfRange, "term (" + std::to_string(component) + ", " + std::to_string(shift) + ", " +
                                                  std::to_string(logpow) + ") outside the expansion");
    return (static_cast<std::size_t>(shift) * dim_ + (component - 1)) * (logs_ + 1) + logpow;
  }

  const Rat& coeff(int component, int shift, int logpow) const { return c_[index(component, shift, logpow)]; }
  Rat& at(int component, int shift, int logpow) { return c_[index(component, shift, logpow)]; }
  const Vec& flat() const { return c_; }
  Vec& flat() { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return sgn(x) == 0; });
  }

  /// Smallest shift carrying a nonzero term, or -1.
  int lowest_shift() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return static_cast<int>(i / layer_size());
    return -1;
  }

  /// Highest log power present, or -1.
  int highest_log() const {
    int h = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) h = std::max(h, static_cast<int>(i % (logs_ + 1)));
    return h;
  }

  /// Same terms in a larger or smaller frame; dropped terms must be at
  /// shifts above the new bound.
  XiExpansion reshaped(int max_shift, int max_log) const {
    XiExpansion r(lambda_, dim_, max_shift, max_log);
    for (int m = 0; m <= std::min(shifts_, max_shift); ++m)
      for (int i = 1; i <= dim_; ++i)
        for (int j = 0; j <= logs_; ++j) {
          const Rat& c = coeff(i, m, j);
          if (sgn(c) == 0) continue;
          if (j > max_log) throw Error(ErrorKind::InvalidArgument, "log power exceeds the new frame");
          r.at(i, m, j) = c;
        }
    return r;
  }

  XiExpansion with_flat(Vec v) const {
    XiExpansion r = *this;
    r.c_ = std::move(v);
    return r;
  }

  friend XiExpansion operator+(const XiExpansion& x, const XiExpansion& y) {
    XiExpansion r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
    return r;
  }
  friend XiExpansion operator*(const Rat& c, const XiExpansion& x) {
    XiExpansion r = x;
    for (auto& v : r.c_) v *= c;
    return r;
  }

  friend bool operator==(const XiExpansion&, const XiExpansion&) = default;

 private:
  Rat lambda_ = 1;
  int dim_ = 1, shifts_ = 0, logs_ = 0;
  Vec c_;
};

/// `s^(3/2) * log^2 @ v1 + ...`; exponents are λ + m − 1.
inline std::string to_string(const XiExpansion& x) {
  std::string out;
  for (int m = 0; m <= x.max_shift(); ++m)
    for (int i = 1; i <= x.dim(); ++i)
      for (int j = 0; j <= x.max_log(); ++j) {
        const Rat& c = x.coeff(i, m, j);
        if (sgn(c) == 0) continue;
        Rat mag = abs(c);
        std::string term;
        if (mag != 1) term = to_string(mag) + " * ";
        term += "s^(" + to_string(Rat(x.lambda() + m - 1)) + ")";
        if (j == 1) term += " * log";
        if (j > 1) term += " * log^" + std::to_string(j);
        if (x.dim() > 1) term += " @ v" + std::to_string(i);
        if (out.empty())
          out = (sgn(c) < 0 ? "-" : "") + term;
        else
          out += (sgn(c) < 0 ? " - " : " + ") + term;
      }
  return out.empty() ? "0" : out;
}

enum class XiOp { A, B };

namespace detail {

/// Applies a or b, then discards log powers below `min_log` (the quotient by
/// Ξ^{(min_log−1)} ⊗ V, which both operators preserve).
inline XiExpansion xi_apply_projected(XiOp op, const XiExpansion& x, int min_log) {
  XiExpansion r(x.lambda(), x.dim(), x.max_shift(), x.max_log());
  for (int m = 0; m < x.max_shift(); ++m)
    for (int i = 1; i <= x.dim(); ++i)
      for (int j = 0; j <= x.max_log(); ++j) {
        const Rat& c = x.coeff(i, m, j);
        if (sgn(c) == 0) continue;
        if (op == XiOp::A) {
          r.at(i, m + 1, j) += c;
          continue;
        }
        // ∫ s^{μ−1}·Log^j = s^μ·Σ_{t≤j} (−1)^{j−t}·(j!/t!)·Log^t / μ^{j−t+1}
        Rat mu = x.lambda() + m;
        Rat factor = c / mu;
        for (int t = j; t >= 0; --t) {
          r.at(i, m + 1, t) += factor;
          factor *= Rat(-t) / mu;
        }
      }
  if (min_log > 0)
    for (int m = 0; m <= r.max_shift(); ++m)
      for (int i = 1; i <= r.dim(); ++i)
        for (int j = 0; j < std::min(min_log, r.max_log() + 1); ++j) r.at(i, m, j) = 0;
  return r;
}

struct Closure {
  std::vector<Vec> basis;
  std::vector<int> layer_dims;
};

/// Span of Ã·φ (projected), with pivots at the lowest index. Ã·φ is the
/// b-span of φ, aφ, …, a^D·φ once D reaches the layer size.
inline Closure xi_closure(const XiExpansion& phi, int min_log) {
  const std::size_t n = phi.size();
  std::vector<std::optional<Vec>> by_pivot(n);
  auto insert = [&](Vec v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(v[i]) == 0) continue;
      if (!by_pivot[i]) {
        Rat inv = 1 / v[i];
        for (auto& c : v) c *= inv;
        by_pivot[i] = std::move(v);
        return;
      }
      const Vec& u = *by_pivot[i];
      Rat f = v[i];
      for (std::size_t t = i; t < n; ++t)
        if (sgn(u[t]) != 0) v[t] -= f * u[t];
    }
  };
  XiExpansion ai = phi;
  if (min_log > 0)
    for (int m = 0; m <= ai.max_shift(); ++m)
      for (int i = 1; i <= ai.dim(); ++i)
        for (int j = 0; j < std::min(min_log, ai.max_log() + 1); ++j) ai.at(i, m, j) = 0;
  for (std::size_t i = 0; i <= phi.layer_size() && !ai.is_zero(); ++i) {
    XiExpansion x = ai;
    while (!x.is_zero()) {
      insert(x.flat());
      x = xi_apply_projected(XiOp::B, x, min_log);
    }
    ai = xi_apply_projected(XiOp::A, ai, min_log);
  }
  Closure c;
  c.layer_dims.assign(static_cast<std::size_t>(phi.max_shift()) + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (by_pivot[i]) {
      ++c.layer_dims[i / phi.layer_size()];
      c.basis.push_back(*by_pivot[i]);
    }
  return c;
}

/// Rank of the (projected) module from stable layer dimensions.
inline int closure_rank(const Closure& c, int max_shift) {
  int r = c.layer_dims.back();
  int stable_from = max_shift;
  while (stable_from > 0 && c.layer_dims[stable_from - 1] == r) --stable_from;
  if (max_shift - stable_from < r + 1)
    throw Error(ErrorKind::TruncationTooSmall, "closure has not stabilized by shift " + std::to_string(max_shift));
  return r;
}

}  // namespace detail

inline XiExpansion xi_apply(XiOp op, const XiExpansion& x) { return detail::xi_apply_projected(op, x, 0); }

struct XiModule {
  XiExpansion generator;
  int rank = 0;
  /// φ, aφ, …, a^{rank−1}φ.
  std::vector<XiExpansion> basis;
  std::vector<int> layer_dims;
};

inline XiModule xi_generate_module(const XiExpansion& phi) {
  if (phi.is_zero()) throw Error(ErrorKind::InvalidArgument, "the generator is zero");
  detail::Closure c = detail::xi_closure(phi, 0);
  XiModule out;
  out.generator = phi;
  out.rank = detail::closure_rank(c, phi.max_shift());
  out.layer_dims = c.layer_dims;
  XiExpansion x = phi;
  for (int i = 0; i < out.rank; ++i) {
    out.basis.push_back(x);
    x = xi_apply(XiOp::A, x);
  }
  return out;
}

/// Ranks of S_j = E ∩ (Ξ^{(j−1)} ⊗ V) for j = 1..N+1, computed as
/// rank E − rank of the image of E in Ξ / Ξ^{(j−1)}.
inline std::vector<int> xi_log_filtration(const XiModule& e) {
  std::vector<int> ranks;
  for (int j = 1; j <= e.generator.max_log() + 1; ++j) {
    int image = 0;
    if (j <= e.generator.max_log()) {
      detail::Closure c = detail::xi_closure(e.generator, j);
      image = c.basis.empty() ? 0 : detail::closure_rank(c, e.generator.max_shift());
    }
    ranks.push_back(e.rank - image);
  }
  return ranks;
}

/// Smallest j with S_j = E.
inline int semisimple_depth(const std::vector<int>& filtration) {
  for (std::size_t j = 0; j < filtration.size(); ++j)
    if (filtration[j] == filtration.back()) return static_cast<int>(j) + 1;
  return static_cast<int>(filtration.size());
}

/// Monic a^d + Σ_{m<d} a^m·c_m(b) of degree rank annihilating φ. Coefficients
/// are reported to order M − v₀ − 2·rank − 1, v₀ the lowest shift of φ.
inline AbElement xi_minimal_annihilator(const XiModule& e) {
  const XiExpansion& phi = e.generator;
  const int M = phi.max_shift();
  const int d = e.rank;
  const int known = M - phi.lowest_shift() - 2 * d - 1;
  if (known < 1) throw Error(ErrorKind::TruncationTooSmall, "shift truncation too small for an annihilator of degree " + std::to_string(d));
  // powers[m][n] = a^m b^n φ
  std::vector<std::vector<Vec>> powers(static_cast<std::size_t>(d) + 1);
  XiExpansion bn = phi;
  for (int n = 0; n <= M; ++n) {
    XiExpansion x = bn;
    for (int m = 0; m <= d; ++m) {
      powers[m].push_back(x.flat());
      x = xi_apply(XiOp::A, x);
    }
    bn = xi_apply(XiOp::B, bn);
  }
  std::vector<Vec> cols;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n <= M; ++n) cols.push_back(powers[m][n]);
  Matrix sys = Matrix::from_columns(cols, phi.size());
  Vec rhs = powers[d][0];
  for (auto& c : rhs) c = -c;
  auto sol = solve(sys, rhs);
  if (!sol) throw Error(ErrorKind::NotMonogenicAtTruncation, "no annihilator of degree " + std::to_string(d) + " at this truncation");
  std::vector<Series> coeffs(static_cast<std::size_t>(d) + 1, Series(known));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n <= known; ++n) coeffs[m].at(n) = (*sol)[static_cast<std::size_t>(m * (M + 1) + n)];
  coeffs[d] = Series::one(known);
  return AbElement(std::move(coeffs));
}

/// Rational roots of a polynomial (coefficients ascending) that lie in
/// `base` + ℤ, with multiplicity.
inline std::vector<Rat> roots_in_class(RatPoly f, const Rat& base) {
  while (f.size() > 1 && sgn(f.back()) == 0) f.pop_back();
  std::vector<Rat> roots;
  if (f.size() <= 1) return roots;
  Rat lead = f.back();
  for (auto& c : f) c /= lead;
  Rat bound = 1;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, Rat(1 + abs(f[i])));
  Rat start = base + floor(Rat(-bound - base));
  for (Rat r = start; r <= bound; r += 1) {
    for (;;) {
      // Synthetic division by (x − r).
      RatPoly q(f.size() - 1);
      Rat acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) {
        acc = acc * r + f[i];
        if (i > 0) q[i - 1] = acc;
      }
      if (sgn(acc) != 0 || f.size() <= 1) break;
      roots.push_back(r);
      f = std::move(q);
      if (f.size() <= 1) break;
    }
    if (f.size() <= 1) break;
  }
  return roots;
}

/// Product-form presentation of Ã·φ. Peels the rank-1 quotient at the top of
/// the principal chain: solve P_m(T·ε) = 0 in E_{λ_m} with T(0) = 1, then
/// P_m = P_{m−1}·(a − λ_m b)·T^{-1}.
inline Presentation model_from_xi(const XiModule& e) {
  const int k = e.rank;
  AbElement p = xi_minimal_annihilator(e);
  std::vector<Rat> roots = roots_in_class(bernstein_polynomial(p, k), -e.generator.lambda());
  if (static_cast<int>(roots.size()) != k)
    throw Error(ErrorKind::NotMonogenicAtTruncation, "Bernstein polynomial has " + std::to_string(roots.size()) +
                                                         " roots in the class, expected " + std::to_string(k));
  std::vector<Rat> v;
  for (const auto& r : roots) v.push_back(-r);
  std::sort(v.begin(), v.end());
  std::vector<Rat> lambdas;
  for (int j = 1; j <= k; ++j) lambdas.push_back(v[j - 1] + (k - j));

  FactorForm factors(static_cast<std::size_t>(k));
  for (int m = k; m >= 1; --m) {
    const Rat& lam = lambdas[m - 1];
    const int K = p.order();
    const int tk = K - m;
    if (tk < 0) throw Error(ErrorKind::TruncationTooSmall, "series order exhausted while peeling factor " + std::to_string(m));
    // Columns: P(b^n ε) for n = 0..tk, in E_λ with a·(Tε) = (λbT + b²T')ε.
    std::vector<Vec> cols;
    for (int n = 0; n <= tk; ++n) {
      Series t = Series::monomial(1, n, K);
      Series r = p.coefficients()[m] * t;
      for (int i = m - 1; i >= 0; --i) r = Series::monomial(lam, 1, K) * r + r.b2_derivative() + p.coefficients()[i] * t;
      cols.push_back(r.coefficients());
    }
    Matrix sys(static_cast<std::size_t>(K) + 1, static_cast<std::size_t>(tk));
    Vec rhs(static_cast<std::size_t>(K) + 1);
    for (int row = 0; row <= K; ++row) {
      rhs[row] = -cols[0][row];
      for (int n = 1; n <= tk; ++n) sys(row, n - 1) = cols[n][row];
    }
    std::optional<Vec> sol = solve(sys, rhs);
    if (!sol) throw Error(ErrorKind::NotMonogenicAtTruncation, "no quotient map onto E_" + to_string(lam));
    Series t(tk);
    t.at(0) = 1;
    for (int n = 1; n <= tk; ++n) t.at(n) = (*sol)[n - 1];
    factors[m - 1] = {lam, t};
    Division dv = left_divide(p, AbElement::linear(lam, tk) * AbElement::from_series(t.inverse()));
    if (!dv.remainder.is_zero())
      throw Error(ErrorKind::NotMonogenicAtTruncation, "factor (a - " + to_string(lam) + " b) does not divide on the right");
    p = dv.quotient;
  }
  int order = factors.front().unit.order();
  for (const auto& f : factors) order = std::min(order, f.unit.order());
  for (auto& f : factors) f.unit = f.unit.truncated(order);
  return Presentation::validate(std::move(factors));
}

}  // namespace frescos
