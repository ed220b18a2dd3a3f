#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "frescos/error.hpp"

namespace frescos {

/// Exact rational scalar. gmpxx keeps results canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses `p/q` or `p` with an optional sign; rejects anything else.
inline Rat parse_rat(std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::InvalidArgument, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  std::size_t slash = text.find('/');
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!all_digits(i, text.size())) throw bad();
  } else if (!all_digits(i, slash) || !all_digits(slash + 1, text.size())) {
    throw bad();
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rat r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Integer value of an integral rational that fits in a long.
inline long to_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw Error(ErrorKind::InvalidArgument, "expected a machine integer, got " + to_string(r));
  return r.get_num().get_si();
}

inline Rat floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

}  // namespace frescos
