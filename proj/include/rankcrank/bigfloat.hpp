#pragma once

// Value-semantic wrapper around mpfr_t. Precision is carried per value and
// is explicit at every construction site; rounding is always to nearest.
// Binary operations produce a result at the larger operand precision.

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rankcrank/rational.hpp"

namespace rankcrank {

class BigFloat {
 public:
  static constexpr mpfr_prec_t kMinPrec = 64;
  static constexpr mpfr_prec_t kDefaultPrec = 256;

  explicit BigFloat(mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_ui(v_, 0, MPFR_RNDN);
  }

  BigFloat(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }

  BigFloat(const Int& z, mpfr_prec_t prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }

  BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  BigFloat rounded_to(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  BigFloat sqrt() const { return unary(mpfr_sqrt); }
  BigFloat exp() const { return unary(mpfr_exp); }
  BigFloat log() const { return unary(mpfr_log); }
  BigFloat sinh() const { return unary(mpfr_sinh); }
  BigFloat cosh() const { return unary(mpfr_cosh); }
  BigFloat gamma() const { return unary(mpfr_gamma); }
  BigFloat abs() const { return unary(mpfr_abs); }

  BigFloat pow(const BigFloat& e) const {
    BigFloat r(std::max(precision(), e.precision()));
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    return r;
  }

  BigFloat pow_si(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Scientific notation with a digit count derived from the precision
  // unless overridden. Deterministic for fixed precision.
  std::string str(int digits = 0) const {
    if (digits <= 0) {
      digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 1;
    }
    if (digits < 2) digits = 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t checked(mpfr_prec_t prec) {
    if (prec < kMinPrec) throw std::invalid_argument("BigFloat: precision must be >= 64 bits");
    return prec;
  }

  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  BigFloat unary(UnaryFn fn) const {
    BigFloat r(precision());
    fn(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// 2^e at the given precision (exact).
inline BigFloat bigfloat_pow2(long e, mpfr_prec_t prec) {
  BigFloat r(1, prec);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

}  // namespace rankcrank
