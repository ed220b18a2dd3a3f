#pragma once

#include <string>
#include <vector>

#include "frescos/alpha.hpp"
#include "frescos/dsl.hpp"
#include "frescos/identities.hpp"
#include "frescos/json_io.hpp"
#include "frescos/presentation.hpp"
#include "frescos/verify.hpp"
#include "frescos/xi.hpp"

namespace frescos {

/// Smallest series order the analyses accept for p.
inline int required_order(const Presentation& p) {
  int bound = 2 * p.rank() + 8;
  for (int j = 1; j < p.rank(); ++j) {
    Rat g = p.gap(j);
    bound += is_integer(g) && g > 1 ? static_cast<int>(to_long(g)) : 1;
  }
  return bound;
}

namespace detail {

inline Json error_json(const Error& e) {
  Json j{{"error", std::string(e.name())}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SemanticError*>(&e)) j["cause"] = std::string(error_name(s->cause()));
  return j;
}

inline Json gaps_json(const Presentation& p) {
  if (!p.primitive()) return nullptr;
  Json out = Json::array();
  for (int j = 1; j < p.rank(); ++j) out.push_back(p.p(j));
  return out;
}

}  // namespace detail

/// Invariants block: λ_j, p_j, μ, Bernstein roots, structural flags and α
/// when it is defined.
inline Json analyze_report(const Presentation& p) {
  BernsteinData bd = bernstein(p);
  Json out{{"input", to_dsl(p)},
           {"rank", p.rank()},
           {"lambdas", rats_json(p.lambdas())},
           {"p", detail::gaps_json(p)},
           {"mu", rat_json(bd.mu)},
           {"bernstein_roots", rats_json(bd.roots)},
           {"bernstein_element", to_string(bd.element)},
           {"geometric", true},
           {"primitive", p.primitive()},
           {"principal", p.principal()}};
  Json notes = Json::array();
  out["alpha"] = nullptr;
  out["semisimple"] = nullptr;
  if (p.primitive() && p.principal()) {
    try {
      out["semisimple"] = is_semisimple(p);
    } catch (const Error& e) {
      notes.push_back("semisimple: " + std::string(e.what()));
    }
    try {
      out["alpha"] = rat_json(p.rank() == 2 ? classify_rank2(p).alpha : alpha_invariant(p));
    } catch (const Error& e) {
      notes.push_back("alpha: " + std::string(e.what()));
    }
  }
  out["diagnostics"] = {{"order", p.order()}, {"notes", notes}};
  return out;
}

/// α, semi-simplicity and, when α ≠ 0, β with both theme classes.
inline Json alpha_report(const Presentation& p) {
  Json out{{"input", to_dsl(p)}};
  Rat alpha;
  if (p.rank() == 2) {
    Rank2Class c = classify_rank2(p);
    alpha = c.alpha;
    out["alpha"] = rat_json(alpha);
    out["semisimple"] = c.is_semisimple;
    out["case"] = c.which == Rank2Case::Case1 ? "p1 = 0" : "p1 >= 1";
    if (c.which == Rank2Case::Case1) return out;
  } else {
    alpha = alpha_invariant(p);
    out["alpha"] = rat_json(alpha);
    out["semisimple"] = sgn(alpha) == 0;
  }
  if (sgn(alpha) != 0) {
    out["subtheme"] = to_json(subtheme_class(p));
    out["quotient_theme"] = to_json(quotient_theme_class(p));
    out["beta"] = rat_json(beta_invariant(p));
  }
  return out;
}

inline Json ss_report(const Presentation& p) { return Json{{"input", to_dsl(p)}, {"semisimple", is_semisimple(p)}}; }

inline Json subtheme_report(const Presentation& p) {
  return Json{{"input", to_dsl(p)},
              {"alpha", rat_json(alpha_invariant(p))},
              {"subtheme", to_json(subtheme_class(p))},
              {"quotient_theme", to_json(quotient_theme_class(p))},
              {"beta", rat_json(beta_invariant(p))}};
}

/// Generation, log filtration and extracted presentation of Ã·φ.
inline Json xi_report(const XiExpansion& phi) {
  XiModule e = xi_generate_module(phi);
  std::vector<int> filt = xi_log_filtration(e);
  AbElement ann = xi_minimal_annihilator(e);
  Presentation p = model_from_xi(e);
  Json out{{"input", to_dsl(phi)},
           {"lambda", rat_json(phi.lambda())},
           {"rank", e.rank},
           {"log_filtration", filt},
           {"semisimple_depth", semisimple_depth(filt)},
           {"annihilator", to_string(ann)},
           {"presentation", to_dsl(p)},
           {"bernstein_roots", rats_json(bernstein(p).roots)},
           {"semisimple", is_semisimple(p)}};
  out["diagnostics"] = {{"max_shift", phi.max_shift()}, {"annihilator_order", ann.order()}, {"presentation_order", p.order()}};
  return out;
}

inline Json suite_json(const SuiteResult& r) {
  Json out{{"name", r.name}, {"ok", r.ok()}, {"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  if (!r.failures.empty()) out["failures"] = r.failures;
  return out;
}

/// Oracle cross-checks on one presentation: the annihilator of e_k and of
/// random generators against the engine, and dim E/bE against μ.
inline SuiteResult verify_presentation(const Presentation& p, Rng& rng, const VerifyOptions& opt) {
  SuiteResult r("input " + to_dsl(p));
  const int k = p.rank(), M = opt.depth;
  TruncatedRep rep = truncate_rep(p, M);
  AbElement eng = make_monic(p.expand());
  r.record(detail::same_to(minimal_annihilator(rep, rep.basis_vector(k)), eng, M - k - 1), "annihilator of e_k");
  r.record(detail::same_to(initial_form(p.expand(), k), expand_factor_form(bernstein(p).element), p.order()),
           "initial form is the Bernstein element");
  std::vector<Vec> gens;
  for (int j = 1; j <= k; ++j) gens.push_back(rep.basis_vector(j, 1));
  SubmoduleInfo be = submodule_analysis(rep, gens);
  Rat mu_e = detail::mu_from_operator(minimal_annihilator(rep, rep.basis_vector(k)), k);
  Rat mu_be = detail::mu_from_operator(minimal_annihilator(rep, rep.basis_vector(k, 1)), k);
  r.record(be.codim && *be.codim == static_cast<std::size_t>(k) && mu_be - mu_e == k, "dim E/bE = mu(bE) - mu(E) = k");
  AdaptedModel model(p);
  for (int i = 0; i < opt.samples; ++i) {
    ModuleElement g = random_generator(rng, model);
    auto q = detail::try_regenerate(model, g);
    if (!q) {
      ++r.skipped;
      continue;
    }
    r.record(detail::same_to(minimal_annihilator(rep, rep.embed(g)), make_monic(q->expand()), M - k - 1),
             "generator " + to_string(g));
    if (k == 2 && p.primitive() && p.principal())
      r.record(classify_rank2(*q).alpha == classify_rank2(p).alpha, "alpha after regeneration from " + to_string(g));
  }
  return r;
}

/// Exchange, unit-exchange, V- and commutation identities on random data.
inline Json identities_report(Rng& rng, int samples, int order) {
  Json checks = Json::array();
  bool all = true;
  auto add = [&](const IdentityCheck& c) {
    all = all && c.holds;
    checks.push_back({{"name", c.name}, {"holds", c.holds}, {"difference", c.difference}});
  };
  add(check_commutation(8, order));
  for (int i = 0; i < samples; ++i) add(check_exchange_identity(random_rat(rng, 9, 6), random_rat(rng, 9, 6), order));
  for (int p1 = 1; p1 <= 3; ++p1) add(check_unit_exchange_identity(Rat(2) + random_rat(rng), p1, random_rat(rng), order));
  for (int p1 = 1; p1 <= 2; ++p1)
    for (int p2 = 1; p2 <= 2; ++p2) add(check_v_identity(Rat(3) + random_rat(rng), p1, p2, random_rat(rng), order));
  return Json{{"all_hold", all}, {"checks", checks}};
}

/// Indented `key: value` rendering of a report.
inline void render_text(const Json& j, std::string& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_object() || (v.is_array() && !flat(v))) {
        out += pad + it.key() + ":\n";
        render_text(v, out, indent + 2);
      } else if (v.is_array()) {
        std::string line;
        for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar(x);
        out += pad + it.key() + ": [" + line + "]\n";
      } else {
        out += pad + it.key() + ": " + scalar(v) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out += pad + "-\n";
        render_text(v, out, indent + 2);
      } else {
        out += pad + "- " + scalar(v) + "\n";
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

inline std::string render_text(const Json& j) {
  std::string out;
  render_text(j, out);
  return out;
}

}  // namespace frescos
