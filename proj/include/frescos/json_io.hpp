#pragma once

#include <string>
#include <vector>

#include "frescos/alpha.hpp"
#include "frescos/error.hpp"
#include "frescos/presentation.hpp"
#include "frescos/series.hpp"
#include "frescos/xi.hpp"
#include "json.hpp"

namespace frescos {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidArgument, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

inline Rat rat_field(const Json& j) {
  if (!j.is_string()) throw Error(ErrorKind::InvalidArgument, "rationals are encoded as strings, got " + j.dump());
  return parse_rat(j.get<std::string>());
}

inline int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::InvalidArgument, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline Json rat_json(const Rat& r) { return to_string(r); }

inline Json rats_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rat_json(r));
  return out;
}

inline Json to_json(const Series& s) {
  return Json{{"order", s.order()}, {"coeffs", rats_json(s.coefficients())}};
}

inline Series series_from_json(const Json& j) {
  const Json& coeffs = detail::field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "'coeffs' must be a non-empty array");
  std::vector<Rat> c;
  for (const auto& x : coeffs) c.push_back(detail::rat_field(x));
  Series s(std::move(c));
  if (j.contains("order")) {
    int order = detail::int_field(j, "order");
    if (order < s.order()) throw Error(ErrorKind::InvalidArgument, "more coefficients than the declared order");
    s = s.padded(order);
  }
  return s;
}

inline Json to_json(const Presentation& p) {
  Json factors = Json::array();
  for (const auto& f : p.factors()) factors.push_back({{"lambda", rat_json(f.lambda)}, {"unit", to_json(f.unit)}});
  return Json{{"factors", factors}};
}

inline Presentation presentation_from_json(const Json& j) {
  const Json& factors = detail::field(j, "factors");
  if (!factors.is_array()) throw Error(ErrorKind::InvalidArgument, "'factors' must be an array");
  FactorForm f;
  for (const auto& x : factors) f.push_back({detail::rat_field(detail::field(x, "lambda")), series_from_json(detail::field(x, "unit"))});
  return Presentation::validate(std::move(f));
}

/// Terms as [component, shift, logpow, coeff] quadruples.
inline Json to_json(const XiExpansion& x) {
  Json terms = Json::array();
  for (int m = 0; m <= x.max_shift(); ++m)
    for (int i = 1; i <= x.dim(); ++i)
      for (int l = 0; l <= x.max_log(); ++l)
        if (sgn(x.coeff(i, m, l)) != 0) terms.push_back(Json::array({i, m, l, rat_json(x.coeff(i, m, l))}));
  return Json{{"lambda", rat_json(x.lambda())},
              {"dim", x.dim()},
              {"max_shift", x.max_shift()},
              {"max_log", x.max_log()},
              {"terms", terms}};
}

inline XiExpansion xi_from_json(const Json& j) {
  XiExpansion x(detail::rat_field(detail::field(j, "lambda")), detail::int_field(j, "dim"), detail::int_field(j, "max_shift"),
                detail::int_field(j, "max_log"));
  for (const auto& t : detail::field(j, "terms")) {
    if (!t.is_array() || t.size() != 4) throw Error(ErrorKind::InvalidArgument, "expansion terms are quadruples");
    x.at(t[0].get<int>(), t[1].get<int>(), t[2].get<int>()) += detail::rat_field(t[3]);
  }
  return x;
}

inline Json to_json(const ThemeClass& t) {
  return Json{{"lambdas", rats_json({t.lambda_low, t.lambda_high})}, {"p", t.p}, {"parameter", rat_json(t.parameter)}};
}

}  // namespace frescos
