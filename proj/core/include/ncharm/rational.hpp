#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncharm {

// Exact arbitrary-precision rational. All arithmetic in the library is exact;
// no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// Accepts "num" or "num/den"; canonicalizes.
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || s.empty())
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace ncharm
