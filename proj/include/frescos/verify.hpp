#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frescos/ab_element.hpp"
#include "frescos/adapted_model.hpp"
#include "frescos/alpha.hpp"
#include "frescos/identities.hpp"
#include "frescos/linalg.hpp"
#include "frescos/oracle.hpp"
#include "frescos/presentation.hpp"
#include "frescos/sampling.hpp"
#include "frescos/xi.hpp"

namespace frescos {

/// Outcome of one randomized cross-check.
struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  /// First few disagreements, human-readable.
  std::vector<std::string> failures;
  /// Facts worth reporting that are not pass/fail counts.
  std::vector<std::string> notes;

  bool ok() const { return failed == 0 && passed > 0; }

  void record(bool holds, const std::string& what) {
    if (holds) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct VerifyOptions {
  int samples = 50;
  /// Series truncation N.
  int order = 32;
  /// Oracle depth M.
  int depth = 32;
};

namespace detail {

inline AbElement random_ab_element(Rng& rng, int max_degree, int order) {
  std::vector<Series> c;
  int d = uniform_int(rng, 0, max_degree);
  for (int m = 0; m <= d; ++m) {
    Series s(order);
    for (int n = 0; n <= std::min(4, order); ++n)
      if (uniform_int(rng, 0, 1) == 0) s.at(n) = random_rat(rng);
    c.push_back(s);
  }
  return AbElement(std::move(c));
}

/// Σ λ_j read off a monic degree-k operator: −(x^{k−1} coefficient of
/// the Bernstein polynomial) = Σ (λ_j + j − k).
inline Rat mu_from_operator(const AbElement& u, int k) {
  RatPoly b = bernstein_polynomial(u, k);
  return b[static_cast<std::size_t>(k - 1)] + rat(k * (k - 1), 2);
}

inline std::optional<Presentation> try_regenerate(const AdaptedModel& model, const ModuleElement& g) {
  try {
    return model.regenerate(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAGenerator) throw;
    return std::nullopt;
  }
}

inline bool same_to(const AbElement& u, const AbElement& v, int order) {
  int o = std::min({order, u.order(), v.order()});
  return u.truncated(o) == v.truncated(o);
}

}  // namespace detail

/// a·b − b·a = b², a·b^ν = b^ν(a + νb) for ν ≤ 8, and the same relations
/// multiplied on both sides by random elements of a-degree ≤ 3.
inline SuiteResult verify_commutation(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"commutation"};
  const int N = opt.order;
  IdentityCheck base = check_commutation(8, N);
  r.record(base.holds, base.difference);
  AbElement a = AbElement::a(N), b = AbElement::b(N);
  for (int i = 0; i < opt.samples; ++i) {
    AbElement u = detail::random_ab_element(rng, 3, N), v = detail::random_ab_element(rng, 3, N);
    AbElement lhs = u * (a * b - b * a) * v;
    AbElement rhs = u * b * b * v;
    bool holds = lhs == rhs;
    for (int nu = 1; nu <= 8 && holds; ++nu) {
      AbElement bn = AbElement::from_series(Series::monomial(1, nu, N));
      holds = u * a * bn * v == u * bn * (a + Rat(nu) * b) * v;
    }
    holds = holds && (u * a) * v == u * (a * v);
    r.record(holds, "u = " + to_string(u) + ", v = " + to_string(v));
  }
  return r;
}

/// Initial form of the expanded presentation is the Bernstein element, and
/// P_E = P_F·P_G for every principal split F = F_i, G = E/F_i.
inline SuiteResult verify_bernstein(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"bernstein"};
  for (int i = 0; i < opt.samples; ++i) {
    const int k = uniform_int(rng, 1, 4);
    Presentation p = random_presentation(rng, k, opt.order);
    AbElement init = initial_form(p.expand(), k);
    AbElement pe = expand_factor_form(bernstein(p).element);
    r.record(detail::same_to(init, pe, opt.order), "initial form of " + to_string(p));
    for (int s = 1; s < k; ++s) {
      AbElement pf = initial_form(sub_quotient(p, 1, s).expand(), s);
      AbElement pg = initial_form(sub_quotient(p, s + 1, k).expand(), k - s);
      r.record(detail::same_to(init, pf * pg, opt.order), "split at " + std::to_string(s) + " of " + to_string(p));
    }
  }
  return r;
}

/// Exchange identity on random rational pairs; the unit-exchange and
/// V-identities on small gaps are reported as notes.
inline SuiteResult verify_exchange(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"exchange"};
  for (int i = 0; i < opt.samples; ++i) {
    IdentityCheck c = check_exchange_identity(random_rat(rng, 9, 6), random_rat(rng, 9, 6), opt.order);
    r.record(c.holds, c.name + ": " + c.difference);
  }
  for (int p1 = 1; p1 <= 3; ++p1) {
    IdentityCheck c = check_unit_exchange_identity(Rat(2) + random_rat(rng), p1, random_rat(rng), opt.order);
    r.notes.push_back(c.name + (c.holds ? ": holds" : ": fails, difference " + c.difference));
    r.record(c.holds, c.name);
  }
  for (int p1 = 1; p1 <= 2; ++p1)
    for (int p2 = 1; p2 <= 2; ++p2) {
      IdentityCheck c = check_v_identity(Rat(3) + random_rat(rng), p1, p2, random_rat(rng), opt.order);
      r.notes.push_back(c.name + (c.holds ? ": holds" : ": fails, difference " + c.difference));
      r.record(c.holds, c.name);
    }
  return r;
}

/// α of rank-2 presentations is unchanged by regenerating from random
/// generators of the same module.
inline SuiteResult verify_rank2_invariance(Rng& rng, const VerifyOptions& opt, int generators = 10) {
  SuiteResult r{"rank2-alpha-invariance"};
  for (int i = 0; i < opt.samples; ++i) {
    Presentation p = random_presentation(rng, 2, opt.order);
    const Rat alpha = classify_rank2(p).alpha;
    AdaptedModel model(p);
    for (int g = 0; g < generators; ++g) {
      auto q = detail::try_regenerate(model, random_generator(rng, model));
      if (!q) {
        ++r.skipped;
        continue;
      }
      Rat beta = classify_rank2(*q).alpha;
      r.record(beta == alpha, to_string(p) + " -> " + to_string(*q) + ": " + to_string(alpha) + " vs " + to_string(beta));
    }
  }
  return r;
}

/// Recursive α against the rank-3 closed form, the S_2 = 1 specialization
/// and the worked example λ = (3, 3, 3), S_1 = 1 + b².
inline SuiteResult verify_rank3(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"rank3-alpha"};
  const int N = opt.order;
  for (int i = 0; i < opt.samples; ++i) {
    Presentation p = random_f0(rng, 3, N);
    Rat rec = alpha_invariant(p), closed = rank3_alpha_formula(p);
    r.record(rec == closed, to_string(p) + ": recursion " + to_string(rec) + ", formula " + to_string(closed));
    FactorForm f = p.factors();
    f[1].unit = Series::one(N);
    Presentation q = Presentation::validate(std::move(f));
    Presentation qn = normalize_last_unit(q);
    Rat expect = qn.unit(1)[q.p(1) + q.p(2)];
    Rat got = alpha_invariant(q);
    r.record(got == expect, to_string(q) + ": alpha " + to_string(got) + ", coefficient " + to_string(expect));
  }
  Presentation ex = Presentation::validate(
      {{Rat(3), Series::one(N) + Series::monomial(1, 2, N)}, {Rat(3), Series::one(N)}, {Rat(3), Series::one(N)}});
  Rat alpha = alpha_invariant(ex);
  ThemeClass sub = subtheme_class(ex);
  r.record(alpha == 1, "worked example alpha = " + to_string(alpha));
  r.record(sub == ThemeClass{Rat(3), Rat(4), 2, Rat(1)}, "worked example subtheme " + to_string(sub));
  return r;
}

/// Random F₀ presentation with the last free coefficient of S_1 moved so
/// that α vanishes. α is affine in that coefficient.
inline Presentation f0_with_zero_alpha(Rng& rng, int rank, int order) {
  Presentation p = random_f0(rng, rank, order);
  int total = 0;
  for (int j = 1; j < rank; ++j) total += p.p(j);
  auto with_coeff = [&](const Rat& t) {
    FactorForm f = p.factors();
    f[0].unit.at(total) = t;
    return Presentation::validate(std::move(f));
  };
  Rat a0 = alpha_invariant(with_coeff(0)), a1 = alpha_invariant(with_coeff(1));
  if (a1 == a0) return with_coeff(0);
  return with_coeff(-a0 / (a1 - a0));
}

/// Trivial units with positive gaps are semi-simple, a zero gap is not,
/// and on F₀ semi-simplicity is equivalent to α = 0.
inline SuiteResult verify_semisimplicity(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"semisimplicity"};
  const int N = opt.order;
  for (int i = 0; i < opt.samples; ++i) {
    int k = uniform_int(rng, 1, 4);
    Presentation p = random_presentation(rng, k, N, {1, 3, true});
    r.record(is_semisimple(p), "trivial units " + to_string(p));
    if (k >= 2) {
      Presentation q = random_presentation(rng, k, N, {0, 3, uniform_int(rng, 0, 1) == 1});
      FactorForm f = q.factors();
      int j = uniform_int(rng, 1, k - 1);
      // Force p_j = 0 and keep the rest principal: λ_{j+1} = λ_j − 1 and
      // later factors shift by the same amount.
      Rat drop = f[j].lambda - (f[j - 1].lambda - 1);
      for (int t = j; t < k; ++t) f[t].lambda -= drop;
      try {
        Presentation z = Presentation::validate(std::move(f));
        r.record(!is_semisimple(z), "zero gap " + to_string(z));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotGeometric) throw;
        ++r.skipped;
      }
    }
    int rank = uniform_int(rng, 2, 4);
    Presentation g = uniform_int(rng, 0, 1) == 0 ? random_f0(rng, rank, N) : f0_with_zero_alpha(rng, rank, N);
    Rat alpha = alpha_invariant(g);
    r.record(is_semisimple(g) == (sgn(alpha) == 0), "F0 instance " + to_string(g) + " alpha " + to_string(alpha));
  }
  return r;
}

/// Oracle annihilator of e_k and of random generators against the engine,
/// modulo b^{M−k}.
inline SuiteResult verify_oracle(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"oracle-annihilator"};
  const int M = opt.depth;
  for (int i = 0; i < opt.samples; ++i) {
    const int k = uniform_int(rng, 1, 3);
    Presentation p = random_presentation(rng, k, std::max(opt.order, M));
    TruncatedRep rep = truncate_rep(p, M);
    AbElement ann = minimal_annihilator(rep, rep.basis_vector(k));
    AbElement eng = make_monic(p.expand());
    r.record(detail::same_to(ann, eng, M - k - 1), "e_k of " + to_string(p));
    AdaptedModel model(p);
    ModuleElement g = random_generator(rng, model);
    auto q = detail::try_regenerate(model, g);
    if (!q) {
      ++r.skipped;
      continue;
    }
    AbElement ann_g = minimal_annihilator(rep, rep.embed(g));
    r.record(detail::same_to(ann_g, make_monic(q->expand()), M - k - 1), "generator " + to_string(g) + " of " + to_string(p));
  }
  return r;
}

/// Ã·s^{λ−1}(Log s)^N for N ≤ 3 and five λ: rank, Bernstein element and
/// log filtration.
inline SuiteResult verify_xi_themes(const VerifyOptions& opt) {
  SuiteResult r{"xi-themes"};
  const Rat lambdas[] = {rat(1, 2), rat(1, 3), rat(2, 3), rat(1), rat(5, 7)};
  for (const auto& lambda : lambdas)
    for (int n = 0; n <= 3; ++n) {
      XiExpansion phi(lambda, 1, opt.depth, n);
      phi.at(1, 0, n) = 1;
      std::string tag = "lambda " + to_string(lambda) + ", N " + std::to_string(n);
      XiModule e = xi_generate_module(phi);
      r.record(e.rank == n + 1, tag + ": rank " + std::to_string(e.rank));
      std::vector<Rat> expect;
      for (int j = n; j >= 0; --j) expect.push_back(lambda + j);
      AbElement ann = xi_minimal_annihilator(e);
      AbElement pe = expand_factor_form(trivial_factors(expect, ann.order()));
      r.record(detail::same_to(initial_form(ann, n + 1), pe, ann.order()), tag + ": Bernstein element " + to_string(initial_form(ann, n + 1)));
      r.record(model_from_xi(e).lambdas() == expect, tag + ": extracted lambdas");
      std::vector<int> filt = xi_log_filtration(e), want;
      for (int j = 1; j <= n + 1; ++j) want.push_back(j);
      r.record(filt == want, tag + ": log filtration");
    }
  return r;
}

/// dim E/bE = k = μ(bE) − μ(E) through the oracle.
inline SuiteResult verify_codimension(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"codimension"};
  const int M = opt.depth;
  for (int i = 0; i < opt.samples; ++i) {
    const int k = uniform_int(rng, 1, 3);
    Presentation p = random_presentation(rng, k, std::max(opt.order, M));
    TruncatedRep rep = truncate_rep(p, M);
    std::vector<Vec> gens;
    for (int j = 1; j <= k; ++j) gens.push_back(rep.basis_vector(j, 1));
    SubmoduleInfo be = submodule_analysis(rep, gens);
    Rat mu_e = detail::mu_from_operator(minimal_annihilator(rep, rep.basis_vector(k)), k);
    Rat mu_be = detail::mu_from_operator(minimal_annihilator(rep, rep.basis_vector(k, 1)), k);
    bool holds = be.codim && *be.codim == static_cast<std::size_t>(k) && mu_be - mu_e == k && mu_e == bernstein(p).mu;
    r.record(holds, to_string(p) + ": codim " + (be.codim ? std::to_string(*be.codim) : "?") + ", mu(bE) - mu(E) = " +
                        to_string(Rat(mu_be - mu_e)));
  }
  return r;
}

/// Rank 2 with p_1 ≥ 1: the kernel of a − λ_1·b, solved coefficient by
/// coefficient at the given order, is the line through S_1^{-1}·e_1.
/// A free b^{M−1}·e_2 coefficient survives the truncation and couples
/// to b^{M−2}·e_1, so kernels are compared on layers m < M − 2.
inline SuiteResult verify_rank2_kernel(Rng& rng, const VerifyOptions& opt) {
  SuiteResult r{"rank2-kernel"};
  const int M = opt.order;
  for (int i = 0; i < opt.samples; ++i) {
    Presentation p = random_presentation(rng, 2, M + 1, {2, 4, false});
    if (p.p(1) < 1) {
      ++r.skipped;
      continue;
    }
    TruncatedRep rep = truncate_rep(p, M);
    Matrix op = rep.A;
    for (std::size_t a = 0; a < rep.dim(); ++a)
      for (std::size_t c = 0; c < rep.dim(); ++c) op(a, c) -= p.lambda(1) * rep.B(a, c);
    std::vector<Vec> kernel = nullspace(op);
    const std::size_t safe = static_cast<std::size_t>(M - 2) * 2;
    std::vector<Vec> cols;
    for (const auto& v : kernel) cols.push_back(Vec(v.begin(), v.begin() + static_cast<long>(safe)));
    ModuleElement line = p.unit(1).truncated(M - 1).inverse() * AdaptedModel(p, M - 1).basis(1);
    Vec w = rep.embed(line);
    Vec ws(w.begin(), w.begin() + static_cast<long>(safe));
    Matrix proj = Matrix::from_columns(cols, safe);
    std::size_t rk = rank(proj);
    cols.push_back(ws);
    std::size_t rk_with = rank(Matrix::from_columns(cols, safe));
    r.record(rk == 1 && rk_with == 1, to_string(p) + ": kernel rank below the top layers " + std::to_string(rk));
  }
  return r;
}

}  // namespace frescos
