#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "frescos/ab_element.hpp"
#include "frescos/error.hpp"
#include "frescos/rational.hpp"
#include "frescos/series.hpp"

namespace frescos {

/// A fresco Ã/Ã·P given by the factor list of P = (a − λ_1 b)S_1^{-1} ··· (a − λ_k b)S_k^{-1}.
///
/// Construction through validate() enforces the geometric bound
/// λ_j + j > k and unit constant terms equal to 1.
class Presentation {
 public:
  static Presentation validate(FactorForm factors) {
    if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "a presentation needs at least one factor");
    const int k = static_cast<int>(factors.size());
    for (int j = 1; j <= k; ++j) {
      const Factor& f = factors[j - 1];
      if (f.unit[0] != 1)
        throw Error(ErrorKind::NonUnitSeries,
                    "factor " + std::to_string(j) + ": unit must have constant term 1, got " + to_string(f.unit[0]));
      if (f.lambda + j <= k)
        throw Error(ErrorKind::NotGeometric, "factor " + std::to_string(j) + ": lambda + j = " +
                                                 to_string(Rat(f.lambda + j)) + " <= k = " + std::to_string(k));
    }
    return Presentation(std::move(factors));
  }

  int rank() const { return static_cast<int>(factors_.size()); }
  const FactorForm& factors() const { return factors_; }

  /// 1-based accessors.
  const Rat& lambda(int j) const { return factor(j).lambda; }
  const Series& unit(int j) const { return factor(j).unit; }
  const Factor& factor(int j) const {
    if (j < 1 || j > rank())
      throw Error(ErrorKind::IndexOutOfRange, "factor index " + std::to_string(j) + " outside 1.." + std::to_string(rank()));
    return factors_[static_cast<std::size_t>(j - 1)];
  }

  std::vector<Rat> lambdas() const {
    std::vector<Rat> out;
    for (const auto& f : factors_) out.push_back(f.lambda);
    return out;
  }

  /// Smallest unit order.
  int order() const {
    int n = factors_.front().unit.order();
    for (const auto& f : factors_) n = std::min(n, f.unit.order());
    return n;
  }

  /// λ_{j+1} − λ_j + 1 as a rational, j = 1..k−1.
  Rat gap(int j) const {
    if (j < 1 || j >= rank()) throw Error(ErrorKind::IndexOutOfRange, "gap index " + std::to_string(j));
    return lambda(j + 1) - lambda(j) + 1;
  }

  /// Integral gap p_j; needs a [λ]-primitive presentation.
  int p(int j) const {
    Rat g = gap(j);
    if (!is_integer(g)) throw Error(ErrorKind::NotPrimitive, "gap p_" + std::to_string(j) + " = " + to_string(g) + " is not an integer");
    return static_cast<int>(to_long(g));
  }

  std::vector<int> gaps() const {
    std::vector<int> out;
    for (int j = 1; j < rank(); ++j) out.push_back(p(j));
    return out;
  }

  bool primitive() const {
    for (int j = 2; j <= rank(); ++j)
      if (!is_integer(Rat(lambda(j) - lambda(1)))) return false;
    return true;
  }

  /// j ↦ λ_j + j non-decreasing.
  bool principal() const {
    for (int j = 1; j < rank(); ++j)
      if (lambda(j + 1) + 1 < lambda(j)) return false;
    return true;
  }

  /// All units truncated to `n`.
  Presentation truncated(int n) const {
    FactorForm f = factors_;
    for (auto& x : f) x.unit = x.unit.truncated(n);
    return Presentation(std::move(f));
  }

  AbElement expand() const { return expand_factor_form(factors_); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  explicit Presentation(FactorForm f) : factors_(std::move(f)) {}

  FactorForm factors_;
};

inline std::string to_string(const Presentation& p) { return to_string(p.factors()); }

inline FactorForm trivial_factors(const std::vector<Rat>& lambdas, int order) {
  FactorForm f;
  for (const auto& l : lambdas) f.push_back({l, Series::one(order)});
  return f;
}

struct BernsteinData {
  FactorForm element;
  std::vector<Rat> roots;
  Rat mu;
};

/// Bernstein element (trivial units), roots −(λ_j + j − k) and μ = Σ λ_j.
inline BernsteinData bernstein(const Presentation& p) {
  BernsteinData out;
  const int k = p.rank();
  out.element = trivial_factors(p.lambdas(), p.order());
  for (int j = 1; j <= k; ++j) {
    out.roots.push_back(-(p.lambda(j) + j - k));
    out.mu += p.lambda(j);
  }
  return out;
}

/// Principal reordering of J-H numbers μ_1..μ_k: sort μ_i + i, subtract j.
inline std::vector<Rat> fundamental_invariants(const std::vector<Rat>& jh_numbers) {
  std::vector<Rat> shifted;
  for (std::size_t i = 0; i < jh_numbers.size(); ++i) {
    if (!is_integer(Rat(jh_numbers[i] - jh_numbers[0])))
      throw Error(ErrorKind::MixedPrimitiveClasses,
                  to_string(jh_numbers[i]) + " and " + to_string(jh_numbers[0]) + " differ by a non-integer");
    shifted.push_back(jh_numbers[i] + static_cast<long>(i + 1));
  }
  std::sort(shifted.begin(), shifted.end());
  for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] -= static_cast<long>(j + 1);
  return shifted;
}

/// Factors i..j of a principal presentation: the quotient F_j / F_{i−1}.
inline Presentation sub_quotient(const Presentation& p, int i, int j) {
  if (i < 1 || j > p.rank() || i > j)
    throw Error(ErrorKind::IndexOutOfRange, "sub-quotient (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") outside rank " + std::to_string(p.rank()));
  if (!p.principal()) throw Error(ErrorKind::NotPrincipal, "sub-quotients need a principal presentation");
  FactorForm f(p.factors().begin() + (i - 1), p.factors().begin() + j);
  return Presentation::validate(std::move(f));
}

/// Replaces a by a + δ·b: every λ_j moves by δ.
inline Presentation twist(const Presentation& p, const Rat& delta) {
  FactorForm f = p.factors();
  for (auto& x : f) x.lambda += delta;
  return Presentation::validate(std::move(f));
}

/// Same class with S_k = 1 (generator changed to S_k^{-1}·[1]).
inline Presentation normalize_last_unit(const Presentation& p) {
  FactorForm f = p.factors();
  f.back().unit = Series::one(f.back().unit.order());
  return Presentation::validate(std::move(f));
}

}  // namespace frescos
