#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "frescos/error.hpp"
#include "frescos/presentation.hpp"
#include "frescos/rational.hpp"
#include "frescos/series.hpp"
#include "frescos/xi.hpp"

namespace frescos {

/// Validation failure of a well-formed input. `cause` is the engine error.
class SemanticError : public Error {
 public:
  SemanticError(ErrorKind cause, const std::string& what, int line)
      : Error(ErrorKind::SemanticError, "line " + std::to_string(line) + ": " + what), cause_(cause), line_(line) {}

  ErrorKind cause() const noexcept { return cause_; }
  int line() const noexcept { return line_; }

 private:
  ErrorKind cause_;
  int line_;
};

struct DslOptions {
  /// Series truncation for presentation units.
  int order = 64;
  /// Shift truncation for expansions.
  int max_shift = 32;
};

using Payload = std::variant<Presentation, XiExpansion>;

struct DslLine {
  int line = 0;
  std::string text;
  Payload payload;
};

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Next character without skipping blanks.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, line_, static_cast<int>(pos_) + 1);
  }
  int line() const { return line_; }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  /// Unsigned `p` or `p/q`.
  Rat unsigned_rat() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (peek_raw() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    std::string_view lit = text_.substr(start, pos_ - start);
    try {
      return parse_rat(lit);
    } catch (const Error& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Rat signed_rat() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Rat r = unsigned_rat();
    return neg ? Rat(-r) : r;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

/// Terms `±c var^e` until a character that cannot continue the sum.
inline std::vector<std::pair<long, Rat>> parse_poly_terms(Cursor& cur, char var) {
  std::vector<std::pair<long, Rat>> terms;
  bool first = true;
  for (;;) {
    Rat sign = 1;
    if (cur.accept('-'))
      sign = -1;
    else if (!cur.accept('+') && !first)
      break;
    Rat c = 1;
    bool has_coeff = false;
    if (cur.at_digit()) {
      c = cur.unsigned_rat();
      has_coeff = true;
    }
    long e = 0;
    if (cur.accept(var)) {
      e = 1;
      if (cur.accept('^')) e = cur.integer();
    } else if (!has_coeff) {
      cur.fail(std::string("expected a coefficient or '") + var + "'");
    }
    terms.emplace_back(e, sign * c);
    first = false;
  }
  return terms;
}

inline Series series_from_terms(const std::vector<std::pair<long, Rat>>& terms, int order, int line) {
  Series s(order);
  for (const auto& [e, c] : terms) {
    if (e > order)
      throw SemanticError(ErrorKind::CoefficientBeyondOrder,
                          "term b^" + std::to_string(e) + " beyond the series order " + std::to_string(order), line);
    s.at(static_cast<int>(e)) += c;
  }
  return s;
}

inline Rat ceil(const Rat& r) { return -floor(Rat(-r)); }

struct XiTerm {
  Rat coeff = 1;
  Rat exponent = 0;
  int logpow = 0;
  int component = 1;
  std::vector<std::pair<long, Rat>> factor{{0, Rat(1)}};
};

inline XiTerm parse_xi_term(Cursor& cur) {
  XiTerm t;
  auto starts_atom = [&] {
    char c = cur.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 's' || c == 'l' || c == '[';
  };
  if (!starts_atom()) cur.fail("expected a number, s, log or [...]");
  // Atoms multiply; `*` between them is optional.
  while (starts_atom()) {
    if (cur.at_digit()) {
      t.coeff *= cur.unsigned_rat();
    } else if (cur.accept_word("log")) {
      t.logpow += cur.accept('^') ? static_cast<int>(cur.integer()) : 1;
    } else if (cur.accept('s')) {
      if (!cur.accept('^'))
        t.exponent += 1;
      else if (cur.accept('(')) {
        t.exponent += cur.signed_rat();
        cur.expect(')');
      } else {
        t.exponent += Rat(cur.integer());
      }
    } else if (cur.accept('[')) {
      auto inner = parse_poly_terms(cur, 's');
      cur.expect(']');
      std::vector<std::pair<long, Rat>> prod;
      for (const auto& [e1, c1] : t.factor)
        for (const auto& [e2, c2] : inner) prod.emplace_back(e1 + e2, c1 * c2);
      t.factor = std::move(prod);
    } else {
      cur.fail("unexpected identifier");
    }
    if (cur.accept('*') && !starts_atom()) cur.fail("expected a factor after '*'");
  }
  if (cur.accept('@')) {
    if (!cur.accept('v')) cur.fail("expected a component 'v<i>'");
    t.component = static_cast<int>(cur.integer());
    if (t.component < 1) cur.fail("components are numbered from 1");
  }
  return t;
}

inline void expect_end(Cursor& cur) {
  if (!cur.done()) cur.fail("unexpected trailing input");
}

}  // namespace detail

/// `1 + 3b^2 - 1/2b^5`, padded to `order`.
inline Series parse_series(std::string_view text, int order, int line = 1) {
  detail::Cursor cur(text, line);
  auto terms = detail::parse_poly_terms(cur, 'b');
  detail::expect_end(cur);
  return detail::series_from_terms(terms, order, line);
}

/// `fresco: (5/2 | 1 + 3b^2) (7/2 | 1)`; the `fresco:` prefix is optional.
inline Presentation parse_presentation(std::string_view text, int order, int line = 1) {
  detail::Cursor cur(text, line);
  if (cur.accept_word("fresco")) cur.expect(':');
  FactorForm f;
  while (cur.accept('(')) {
    Rat lambda = cur.signed_rat();
    cur.expect('|');
    auto terms = detail::parse_poly_terms(cur, 'b');
    cur.expect(')');
    f.push_back({lambda, detail::series_from_terms(terms, order, line)});
  }
  if (f.empty()) cur.fail("expected a factor '(lambda | unit)'");
  detail::expect_end(cur);
  try {
    return Presentation::validate(std::move(f));
  } catch (const SemanticError&) {
    throw;
  } catch (const Error& e) {
    throw SemanticError(e.kind(), e.what(), line);
  }
}

/// `s^(3/2) * log^2 * [1 + 2s] @ v1 + ...`, optionally prefixed by `xi:`.
inline XiExpansion parse_xi(std::string_view text, int max_shift, int line = 1) {
  detail::Cursor cur(text, line);
  if (cur.accept_word("xi")) cur.expect(':');
  std::vector<detail::XiTerm> terms;
  bool first = true;
  for (;;) {
    Rat sign = 1;
    if (cur.accept('-'))
      sign = -1;
    else if (!cur.accept('+') && !first)
      break;
    detail::XiTerm t = detail::parse_xi_term(cur);
    t.coeff *= sign;
    terms.push_back(std::move(t));
    first = false;
  }
  detail::expect_end(cur);

  Rat base = terms.front().exponent + 1;
  Rat lambda = base - detail::ceil(base) + 1;
  int dim = 1, logs = 0;
  for (const auto& t : terms) {
    if (!is_integer(Rat(t.exponent - terms.front().exponent)))
      throw SemanticError(ErrorKind::MixedPrimitiveClasses,
                          "exponents " + to_string(t.exponent) + " and " + to_string(terms.front().exponent) +
                              " differ by a non-integer",
                          line);
    if (t.exponent + 1 - lambda < 0)
      throw SemanticError(ErrorKind::InvalidArgument, "exponent " + to_string(t.exponent) + " is below lambda - 1", line);
    dim = std::max(dim, t.component);
    logs = std::max(logs, t.logpow);
  }
  XiExpansion x(lambda, dim, max_shift, logs);
  for (const auto& t : terms) {
    long shift0 = to_long(Rat(t.exponent + 1 - lambda));
    for (const auto& [e, c] : t.factor) {
      long shift = shift0 + e;
      if (shift > max_shift) continue;
      x.at(t.component, static_cast<int>(shift), t.logpow) += t.coeff * c;
    }
  }
  if (x.is_zero()) throw SemanticError(ErrorKind::InvalidArgument, "expansion is zero at this truncation", line);
  return x;
}

/// One request: a presentation (`fresco:` or a leading '(') or an expansion.
inline Payload parse_dsl(std::string_view text, const DslOptions& opt = {}, int line = 1) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::string_view rest = text.substr(i);
  if (rest.starts_with("fresco") || rest.starts_with("(")) return parse_presentation(text, opt.order, line);
  return parse_xi(text, opt.max_shift, line);
}

struct SourceLine {
  int line = 0;
  std::string text;
};

/// Non-blank lines with `#` comments removed.
inline std::vector<SourceLine> request_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(start, end - start);
    body = body.substr(0, body.find('#'));
    ++line;
    if (body.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({line, std::string(body)});
    start = end + 1;
  }
  return out;
}

/// One request per line; blank lines and `#` comments are skipped.
inline std::vector<DslLine> parse_dsl_lines(std::string_view text, const DslOptions& opt = {}) {
  std::vector<DslLine> out;
  for (auto& [line, body] : request_lines(text)) out.push_back({line, body, parse_dsl(body, opt, line)});
  return out;
}

/// Inverse of parse_presentation.
inline std::string to_dsl(const Presentation& p) {
  std::string out = "fresco:";
  for (const auto& f : p.factors()) out += " (" + to_string(f.lambda) + " | " + to_string(f.unit) + ")";
  return out;
}

inline std::string to_dsl(const XiExpansion& x) { return "xi: " + to_string(x); }

}  // namespace frescos
