#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frescos/ab_element.hpp"
#include "frescos/adapted_model.hpp"
#include "frescos/error.hpp"
#include "frescos/linalg.hpp"
#include "frescos/presentation.hpp"

namespace frescos {

/// E / b^M E as a k·M dimensional space with basis b^m·e_j, indexed
/// layer-major as m·k + (j − 1). b^M E is stable under a, so A and B are
/// the exact quotient actions and A·B − B·A = B² holds on the whole space.
struct TruncatedRep {
  Presentation source;
  int rank = 0;
  int depth = 0;
  Matrix A;
  Matrix B;

  std::size_t dim() const { return static_cast<std::size_t>(rank) * depth; }
  std::size_t index(int j, int m) const { return static_cast<std::size_t>(m) * rank + (j - 1); }

  /// Vector of a model element (coordinates read to b^{M−1}).
  Vec embed(const ModuleElement& x) const {
    if (x.order() < depth - 1) throw Error(ErrorKind::OrderUnderflow, "element known only to order " + std::to_string(x.order()));
    Vec v(dim());
    for (int j = 1; j <= rank; ++j)
      for (int m = 0; m < depth; ++m) v[index(j, m)] = x[j][m];
    return v;
  }

  /// Coordinate series of a vector, known to order M − 1.
  ModuleElement extract(const Vec& v) const {
    std::vector<Series> c(static_cast<std::size_t>(rank), Series(depth - 1));
    for (int j = 1; j <= rank; ++j)
      for (int m = 0; m < depth; ++m) c[j - 1].at(m) = v[index(j, m)];
    return ModuleElement(std::move(c));
  }

  Vec basis_vector(int j, int m = 0) const {
    Vec v(dim());
    v[index(j, m)] = 1;
    return v;
  }
};

inline TruncatedRep truncate_rep(const Presentation& p, int M) {
  if (M < 4) throw Error(ErrorKind::InvalidArgument, "oracle depth must be at least 4");
  if (p.order() < M - 1) throw Error(ErrorKind::OrderUnderflow, "presentation known to order " + std::to_string(p.order()) +
                                                                    ", oracle depth " + std::to_string(M) + " needs " +
                                                                    std::to_string(M - 1));
  AdaptedModel model(p, M - 1);
  TruncatedRep r{p, p.rank(), M, Matrix(), Matrix()};
  const std::size_t n = r.dim();
  r.A = Matrix(n, n);
  r.B = Matrix(n, n);
  for (int j = 1; j <= r.rank; ++j)
    for (int m = 0; m < M; ++m) {
      ModuleElement x = model.zero();
      x[j] = Series::monomial(1, m, M - 1);
      Vec col = r.embed(model.apply_a(x));
      for (std::size_t i = 0; i < n; ++i) r.A(i, r.index(j, m)) = col[i];
      if (m + 1 < M) r.B(r.index(j, m + 1), r.index(j, m)) = 1;
    }
  return r;
}

inline TruncatedRep truncate_rep(const AdaptedModel& model, int M) { return truncate_rep(model.presentation(), M); }

inline std::string dump(const TruncatedRep& r) { return "A\n" + dump(r.A) + "B\n" + dump(r.B); }

/// Monic operator a^d + Σ_{m<d} a^m·c_m(b) of least degree with u·x = 0 in
/// E/b^M E. Coefficients are reported to order M − k − 1.
inline AbElement minimal_annihilator(const TruncatedRep& r, const Vec& x) {
  bool nonzero = false;
  for (const auto& c : x) nonzero = nonzero || sgn(c) != 0;
  if (!nonzero) throw Error(ErrorKind::DegenerateTruncation, "the vector vanishes in the truncation");
  const int M = r.depth;
  const int known = M - r.rank - 1;
  if (known < 0) throw Error(ErrorKind::DegenerateTruncation, "oracle depth too small for rank");
  // powers[m][n] = A^m B^n x
  std::vector<std::vector<Vec>> powers;
  std::vector<Vec> bx{x};
  for (int n = 1; n < M; ++n) bx.push_back(r.B * bx.back());
  powers.push_back(bx);
  for (int d = 1; d <= r.rank; ++d) {
    std::vector<Vec> next;
    for (const auto& v : powers.back()) next.push_back(r.A * v);
    powers.push_back(std::move(next));
    std::vector<Vec> cols;
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < M; ++n) cols.push_back(powers[m][n]);
    Matrix sys = Matrix::from_columns(cols, r.dim());
    Vec rhs = powers[d][0];
    for (auto& c : rhs) c = -c;
    auto sol = solve(sys, rhs);
    if (!sol) continue;
    std::vector<Series> coeffs(static_cast<std::size_t>(d) + 1, Series(known));
    for (int m = 0; m < d; ++m)
      for (int n = 0; n <= known; ++n) coeffs[m].at(n) = (*sol)[static_cast<std::size_t>(m * M + n)];
    coeffs[d] = Series::one(known);
    return AbElement(std::move(coeffs));
  }
  throw Error(ErrorKind::DegenerateTruncation, "no annihilator of degree <= rank in the truncation");
}

struct SubmoduleInfo {
  int rank = 0;
  bool normal = false;
  std::size_t dimension = 0;
  /// dim E/F, present when the closure contains the whole top layer.
  std::optional<std::size_t> codim;
  /// Pivot count per b-layer.
  std::vector<int> layer_dims;
};

/// Closure of the generators under A and B with layer statistics.
inline SubmoduleInfo submodule_analysis(const TruncatedRep& r, const std::vector<Vec>& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  const std::size_t n = r.dim();
  // Echelon basis keyed by first nonzero index.
  std::vector<std::optional<Vec>> by_pivot(n);
  std::vector<Vec> queue;
  auto insert = [&](Vec v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(v[i]) == 0) continue;
      if (!by_pivot[i]) {
        Rat inv = 1 / v[i];
        for (auto& c : v) c *= inv;
        by_pivot[i] = v;
        queue.push_back(v);
        return;
      }
      const Vec& u = *by_pivot[i];
      Rat f = v[i];
      for (std::size_t t = i; t < n; ++t)
        if (sgn(u[t]) != 0) v[t] -= f * u[t];
    }
  };
  for (const auto& g : gens) insert(g);
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    insert(r.A * v);
    insert(r.B * v);
  }
  SubmoduleInfo info;
  info.layer_dims.assign(static_cast<std::size_t>(r.depth), 0);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i)
    if (by_pivot[i]) {
      ++info.layer_dims[i / r.rank];
      basis.push_back(*by_pivot[i]);
    }
  info.dimension = basis.size();
  const int M = r.depth;
  if (M < 3 || info.layer_dims[M - 2] != info.layer_dims[M - 1])
    throw Error(ErrorKind::TruncationTooSmall, "layer dimensions have not stabilized at depth " + std::to_string(M));
  info.rank = info.layer_dims[M - 1];

  // Normality: (F ∩ bE) and bF agree modulo b^{M−1}.
  const std::size_t safe = static_cast<std::size_t>(r.rank) * (M - 1);
  std::vector<Vec> in_bE, bF;
  for (const auto& v : basis) {
    bool in_layer0 = false;
    for (int j = 0; j < r.rank; ++j) in_layer0 = in_layer0 || sgn(v[j]) != 0;
    if (!in_layer0) in_bE.push_back(Vec(v.begin(), v.begin() + safe));
    Vec w = r.B * v;
    bF.push_back(Vec(w.begin(), w.begin() + safe));
  }
  auto dim_of = [&](const std::vector<Vec>& vs) {
    if (vs.empty()) return std::size_t{0};
    return frescos::rank(Matrix::from_columns(vs, safe));
  };
  info.normal = dim_of(in_bE) == dim_of(bF);
  if (info.layer_dims[M - 1] == r.rank) info.codim = n - info.dimension;
  return info;
}

}  // namespace frescos
