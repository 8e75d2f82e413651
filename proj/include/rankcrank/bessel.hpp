#pragma once

// Modified Bessel functions of half-integer order at multiprecision, via
// the sinh/cosh closed forms of I_{1/2}, I_{-1/2}, I_{3/2} and the
// three-term order shift I_{a-1}(y) = (2a/y) I_a(y) + I_{a+1}(y). A direct
// power-series summation serves as the independent cross-check route.

#include <stdexcept>

#include "rankcrank/bigfloat.hpp"
#include "rankcrank/rational.hpp"

namespace rankcrank {

constexpr long kMaxBesselTwoNu = 41;

// y_n = pi/6 sqrt(24n - 1)
inline BigFloat y_of_n(long n, mpfr_prec_t prec) {
  if (n < 1) throw std::invalid_argument("y_of_n: n must be >= 1");
  mpfr_prec_t wp = prec + 32;
  BigFloat root = BigFloat(Int(Int(24) * n - 1), wp).sqrt();
  return (BigFloat::pi(wp) * root / BigFloat(6, wp)).rounded_to(prec);
}

namespace detail {

inline void check_bessel_args(long two_nu, const BigFloat& y) {
  if (two_nu % 2 == 0) throw std::invalid_argument("bessel_i_half: order must be half-integral");
  if (two_nu > kMaxBesselTwoNu || two_nu < -kMaxBesselTwoNu) {
    throw std::invalid_argument("bessel_i_half: |2*nu| must be <= 41");
  }
  if (!(y.sign() > 0)) throw std::invalid_argument("bessel_i_half: y must be positive");
}

}  // namespace detail

// I_{two_nu/2}(y) through the order-shift recurrence, anchored at the
// closed forms I_{1/2} = sqrt(2/(pi y)) sinh y, I_{-1/2} = ... cosh y.
inline BigFloat bessel_i_half(long two_nu, const BigFloat& y) {
  detail::check_bessel_args(two_nu, y);
  mpfr_prec_t wp = y.precision() + 32;
  BigFloat yw = y.rounded_to(wp);
  BigFloat pref = (BigFloat(2, wp) / (BigFloat::pi(wp) * yw)).sqrt();
  BigFloat sh = yw.sinh();
  BigFloat ch = yw.cosh();
  BigFloat i_half = pref * sh;          // I_{1/2}
  BigFloat i_three_half = pref * (ch - sh / yw);  // I_{3/2}

  if (two_nu == 1) return i_half.rounded_to(y.precision());
  if (two_nu == 3) return i_three_half.rounded_to(y.precision());

  if (two_nu > 3) {
    // upward: I_{a+1} = I_{a-1} - (2a/y) I_a, starting at a = 3/2
    BigFloat lo = i_half, mid = i_three_half;
    for (long two_a = 3; two_a < two_nu; two_a += 2) {
      BigFloat next = lo - (BigFloat(two_a, wp) / yw) * mid;
      lo = mid;
      mid = next;
    }
    return mid.rounded_to(y.precision());
  }

  // downward: I_{a-1} = (2a/y) I_a + I_{a+1}, starting at a = 1/2
  BigFloat hi = i_three_half, mid = i_half;
  for (long two_a = 1; two_a > two_nu; two_a -= 2) {
    BigFloat next = (BigFloat(two_a, wp) / yw) * mid + hi;
    hi = mid;
    mid = next;
  }
  return mid.rounded_to(y.precision());
}

// Independent oracle: I_nu(y) = sum_m (y/2)^{2m+nu} / (m! Gamma(m+nu+1)),
// summed at twice the working precision.
inline BigFloat bessel_i_half_series(long two_nu, const BigFloat& y) {
  detail::check_bessel_args(two_nu, y);
  mpfr_prec_t wp = 2 * y.precision() + 64;
  BigFloat yw = y.rounded_to(wp);
  BigFloat half_y = yw / BigFloat(2, wp);
  BigFloat nu = BigFloat(two_nu, wp) / BigFloat(2, wp);
  BigFloat term = half_y.pow(nu) / (nu + BigFloat(1, wp)).gamma();
  BigFloat sum = term;
  BigFloat q = half_y * half_y;
  BigFloat eps = bigfloat_pow2(-(static_cast<long>(wp) - 8), wp);
  double hump = half_y.to_double();
  for (long m = 1; m < 1000000; ++m) {
    term = term * q / (BigFloat(m, wp) * (BigFloat(m, wp) + nu));
    sum += term;
    if (static_cast<double>(m) > hump + 8 && term.abs() < sum.abs() * eps) break;
  }
  return sum.rounded_to(y.precision());
}

// Scaled residual of the index-shift approximation
//   I_{3/2-2l}(y_n) ~ I_{3/2}(y_n) - 3/pi (24n-1)^{-1/2} (2l)(2l-3) I_{1/2}(y_n),
// divided by the expected remainder scale n^{-1} I_{-1/2}(y_n).
inline BigFloat check_shift_lemma(long ell, long n, mpfr_prec_t prec) {
  if (ell < 0 || ell > 10) throw std::invalid_argument("check_shift_lemma: need 0 <= ell <= 10");
  if (n < 1) throw std::invalid_argument("check_shift_lemma: n must be >= 1");
  mpfr_prec_t wp = prec + 32;
  BigFloat y = y_of_n(n, wp);
  BigFloat lhs = bessel_i_half(3 - 4 * ell, y);
  BigFloat i32 = bessel_i_half(3, y);
  BigFloat i12 = bessel_i_half(1, y);
  BigFloat im12 = bessel_i_half(-1, y);
  BigFloat corr = BigFloat(3, wp) / BigFloat::pi(wp) /
                  BigFloat(Int(Int(24) * n - 1), wp).sqrt() *
                  BigFloat((2 * ell) * (2 * ell - 3), wp) * i12;
  BigFloat resid = (lhs - (i32 - corr)).abs();
  BigFloat scale = im12 / BigFloat(n, wp);
  return (resid / scale).rounded_to(prec);
}

}  // namespace rankcrank
