#pragma once

#include <gmpxx.h>

#include <string>

namespace qlat {

/// Exact arbitrary-precision integer. Rank numbers, Gaussian coefficients and
/// chain counts are always carried exactly; no floating point enters lattice
/// arithmetic anywhere.
using Int = mpz_class;

/// Exact rational, always kept in canonical form (gcd 1, positive denominator).
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Serialized as "p/q" even when the denominator is 1, so JSON output stays
/// lossless and uniformly typed.
inline std::string rat_string(const Rat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// base^exp for small nonnegative exponents.
inline Int int_pow(long base, long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

}  // namespace qlat
