#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "frescos/ab_element.hpp"
#include "frescos/error.hpp"
#include "frescos/presentation.hpp"
#include "frescos/series.hpp"

namespace frescos {

/// Coordinates G_1..G_k in the adapted basis e_1..e_k.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(int rank, int order) : coords_(static_cast<std::size_t>(rank), Series(order)) {}
  explicit ModuleElement(std::vector<Series> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) return;
    int n = order();
    for (auto& c : coords_)
      if (c.order() != n) c = c.truncated(n);
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  int order() const {
    int n = coords_.front().order();
    for (const auto& c : coords_) n = std::min(n, c.order());
    return n;
  }

  /// 1-based coordinate.
  const Series& operator[](int j) const { return coords_.at(static_cast<std::size_t>(j - 1)); }
  Series& operator[](int j) { return coords_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Series>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Series& s) { return s.is_zero(); });
  }

  /// Largest j with G_j ≠ 0, or 0.
  int top() const {
    for (int j = rank(); j >= 1; --j)
      if (!(*this)[j].is_zero()) return j;
    return 0;
  }

  friend ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) {
    std::vector<Series> c;
    for (int j = 1; j <= x.rank(); ++j) c.push_back(x[j] + y[j]);
    return ModuleElement(std::move(c));
  }
  friend ModuleElement operator-(const ModuleElement& x, const ModuleElement& y) {
    std::vector<Series> c;
    for (int j = 1; j <= x.rank(); ++j) c.push_back(x[j] - y[j]);
    return ModuleElement(std::move(c));
  }
  /// Scalar series acting coordinate-wise.
  friend ModuleElement operator*(const Series& s, const ModuleElement& x) {
    std::vector<Series> c;
    for (const auto& g : x.coords_) c.push_back(s * g);
    return ModuleElement(std::move(c));
  }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::vector<Series> coords_;
};

inline std::string to_string(const ModuleElement& x) {
  std::string out;
  for (int j = 1; j <= x.rank(); ++j) {
    if (x[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + to_string(x[j]) + "] e" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

/// Free module with basis e_1..e_k over series known to a fixed order, where
///   a·e_j = (λ_j b + b²·S_j'/S_j)·e_j + S_j·e_{j−1},  e_0 = 0,
/// so that (a − λ_j b)·S_j^{-1}·e_j = e_{j−1} and e_k generates.
class AdaptedModel {
 public:
  AdaptedModel(const Presentation& p, int order) : presentation_(p.truncated(std::min(order, p.order()))) {
    order_ = presentation_.order();
    for (int j = 1; j <= rank(); ++j) {
      const Series& s = presentation_.unit(j);
      diag_.push_back(Series::monomial(presentation_.lambda(j), 1, order_) + s.b2_derivative() * s.inverse());
    }
  }
  explicit AdaptedModel(const Presentation& p) : AdaptedModel(p, p.order()) {}

  int rank() const { return presentation_.rank(); }
  int order() const { return order_; }
  const Presentation& presentation() const { return presentation_; }

  ModuleElement zero() const { return ModuleElement(rank(), order_); }

  ModuleElement basis(int j) const {
    if (j < 1 || j > rank()) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(j));
    ModuleElement x = zero();
    x[j] = Series::one(order_);
    return x;
  }

  /// Element with the given coordinates, padded with zeros up to the rank.
  ModuleElement element(std::vector<Series> coords) const {
    if (static_cast<int>(coords.size()) > rank()) throw Error(ErrorKind::IndexOutOfRange, "too many coordinates");
    for (auto& c : coords) c = c.truncated(std::min(c.order(), order_));
    while (static_cast<int>(coords.size()) < rank()) coords.emplace_back(order_);
    return ModuleElement(std::move(coords));
  }

  ModuleElement apply_a(const ModuleElement& x) const {
    check(x);
    ModuleElement y(rank(), x.order());
    for (int j = 1; j <= rank(); ++j) {
      const Series& c = x[j];
      if (c.is_zero()) continue;
      y[j] += c * diag_[j - 1] + c.b2_derivative();
      if (j > 1) y[j - 1] += c * presentation_.unit(j);
    }
    return y;
  }

  ModuleElement apply_b(const ModuleElement& x) const {
    check(x);
    std::vector<Series> c;
    for (const auto& g : x.coords()) c.push_back(g.shifted(1).truncated(g.order()));
    return ModuleElement(std::move(c));
  }

  /// u·x for u = Σ a^m c_m, by Horner in a.
  ModuleElement apply(const AbElement& u, const ModuleElement& x) const {
    check(x);
    const int d = u.a_degree();
    ModuleElement r = u.coefficients()[d] * x;
    for (int m = d - 1; m >= 0; --m) r = apply_a(r) + u.coefficients()[m] * x;
    return r;
  }

  /// The model of F_m: factors 1..m.
  AdaptedModel submodel(int m) const { return AdaptedModel(sub_quotient(presentation_, 1, m), order_); }

  /// Coordinates of an element of F_m viewed in the F_m model.
  ModuleElement restrict_to(const ModuleElement& x, int m) const {
    for (int j = m + 1; j <= x.rank(); ++j)
      if (!x[j].is_zero()) throw Error(ErrorKind::InvalidArgument, "element is not in F_" + std::to_string(m));
    return ModuleElement(std::vector<Series>(x.coords().begin(), x.coords().begin() + m));
  }

  /// Product form of the annihilator of g: for m = k..1 take
  /// Σ_m = S_m·G_m/G_m(0) and replace g by (a − λ_m b)·Σ_m^{-1}·g ∈ F_{m−1}.
  Presentation regenerate(ModuleElement g) const {
    check(g);
    FactorForm out(static_cast<std::size_t>(rank()));
    for (int m = rank(); m >= 1; --m) {
      for (int j = m + 1; j <= rank(); ++j)
        if (!g[j].is_zero()) throw Error(ErrorKind::NotAGenerator, "stage " + std::to_string(m) + " left F_" + std::to_string(m));
      const Series& gm = g[m];
      if (sgn(gm[0]) == 0)
        throw Error(ErrorKind::NotAGenerator, "coordinate G_" + std::to_string(m) + " has zero constant term");
      Series sigma = (Rat(1) / gm[0]) * (presentation_.unit(m).truncated(gm.order()) * gm);
      out[static_cast<std::size_t>(m - 1)] = {presentation_.lambda(m), sigma};
      ModuleElement h = sigma.inverse() * g;
      g = apply_a(h) - Series::monomial(presentation_.lambda(m), 1, h.order()) * h;
    }
    return Presentation::validate(std::move(out));
  }

 private:
  void check(const ModuleElement& x) const {
    if (x.rank() != rank())
      throw Error(ErrorKind::InvalidArgument, "element of rank " + std::to_string(x.rank()) + " in a rank " +
                                                  std::to_string(rank()) + " model");
  }

  Presentation presentation_;
  int order_ = 0;
  std::vector<Series> diag_;
};

}  // namespace frescos
