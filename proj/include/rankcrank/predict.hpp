#pragma once

// Asymptotic predictors for partition counts, crank/rank moments and their
// difference:
//   M_{2k}(n), N_{2k}(n) ~ pi c (24n-1)^{k-3/4} I_{3/2}(y_n)
//                          + c~ (24n-1)^{k-5/4} I_{1/2}(y_n)
//   D_{2k}(n) ~ k(2k-1) xi_{2k-2} (24n-1)^{k-5/4} I_{1/2}(y_n)
//   p(n)      ~ 2 pi (24n-1)^{-3/4} I_{3/2}(y_n)
// with exact rational constants converted to floats at working precision.

#include <stdexcept>
#include <string>

#include "rankcrank/bessel.hpp"
#include "rankcrank/bigfloat.hpp"
#include "rankcrank/constants.hpp"

namespace rankcrank {

enum class PredKind { crank, rank, diff, partition };

inline std::string to_string(PredKind k) {
  switch (k) {
    case PredKind::crank: return "crank";
    case PredKind::rank: return "rank";
    case PredKind::diff: return "diff";
    case PredKind::partition: return "partition";
  }
  return "?";
}

inline PredKind pred_kind_from_string(const std::string& s) {
  if (s == "crank") return PredKind::crank;
  if (s == "rank") return PredKind::rank;
  if (s == "diff") return PredKind::diff;
  if (s == "partition") return PredKind::partition;
  throw std::invalid_argument("unknown kind: " + s);
}

struct Prediction {
  PredKind kind = PredKind::partition;
  long k = 0;
  long n = 0;
  int term_count = 1;
  BigFloat value;
};

inline Prediction predict(PredKind kind, long k, long n, int terms, mpfr_prec_t prec) {
  if (n < 1) throw std::invalid_argument("predict: n must be >= 1");
  if (terms != 1 && terms != 2) throw std::invalid_argument("predict: terms must be 1 or 2");
  if ((kind == PredKind::diff || kind == PredKind::partition) && terms != 1) {
    throw std::invalid_argument("predict: this kind supports a single term only");
  }
  if (kind == PredKind::diff && k < 1) throw std::invalid_argument("predict: diff needs k >= 1");
  if (k < 0) throw std::invalid_argument("predict: k must be >= 0");

  mpfr_prec_t wp = prec + 32;
  BigFloat y = y_of_n(n, wp);
  BigFloat base(Int(Int(24) * n - 1), wp);
  BigFloat quarter(frac(1, 4), wp);
  BigFloat kf(k, wp);
  BigFloat value(wp);

  switch (kind) {
    case PredKind::partition: {
      value = BigFloat(2, wp) * BigFloat::pi(wp) * base.pow(-BigFloat(3, wp) * quarter) *
              bessel_i_half(3, y);
      break;
    }
    case PredKind::diff: {
      BigFloat c(frac(1, 2) * Rational((2 * k) * (2 * k - 1)) * xi(k - 1), wp);
      value = c * base.pow(kf - BigFloat(5, wp) * quarter) * bessel_i_half(1, y);
      break;
    }
    case PredKind::crank:
    case PredKind::rank: {
      BigFloat main_c(xi(k), wp);  // lambda_{2k} = xi_{2k}
      value = BigFloat::pi(wp) * main_c * base.pow(kf - BigFloat(3, wp) * quarter) *
              bessel_i_half(3, y);
      if (terms == 2) {
        Rational second = (kind == PredKind::crank) ? xi_tilde(k) : lambda_tilde(k);
        value += BigFloat(second, wp) * base.pow(kf - BigFloat(5, wp) * quarter) *
                 bessel_i_half(1, y);
      }
      break;
    }
  }

  Prediction p;
  p.kind = kind;
  p.k = k;
  p.n = n;
  p.term_count = terms;
  p.value = value.rounded_to(prec);
  return p;
}

}  // namespace rankcrank
