#pragma once
#include <gmpxx.h>

#include <string>

#include "uam/errors.hpp"

namespace uam {

// All scalar arithmetic is exact rational arithmetic on GMP mpq.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// "p/q" or "p"; mpq_class's string constructor does not canonicalise, so do
// it here and validate the denominator.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  Rat r;
  try {
    r = Rat(s);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("bad rational literal '" + s + "'");
  }
  if (sgn(r.get_den()) == 0) throw DivisionByZero("rational literal '" + s + "' has denominator 0");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(Rat base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw DivisionByZero("0 to a negative power");
    base = 1 / base;
    e = -e;
  }
  Rat acc = 1;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace uam
