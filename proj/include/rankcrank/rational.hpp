#pragma once

// Exact arithmetic domains shared by every module. GMP's C++ classes keep
// mpq_class canonical (lowest terms, positive denominator), which is the
// representation contract relied on throughout.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rankcrank {

using Int = mpz_class;
using Rational = mpq_class;

inline Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// (a+b+c)! / (a! b! c!)
inline Int multinomial3(long a, long b, long c) {
  return binomial(a + b + c, a) * binomial(b + c, b);
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

// 2^e as an exact rational; e may be negative.
inline Rational pow2_rational(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

// num/den with both factors exact.
inline Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational frac(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

// "num" when integral, "num/den" otherwise; never a float.
inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("not a rational: " + s);
  }
  mpq_canonicalize(q.get_mpq_t());
  return q;
}

}  // namespace rankcrank
