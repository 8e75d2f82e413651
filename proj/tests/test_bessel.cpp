#include <catch2/catch_amalgamated.hpp>

#include "rankcrank/bessel.hpp"
#include "rankcrank/predict.hpp"
#include "rankcrank/qseries.hpp"

using namespace rankcrank;

namespace {

BigFloat bf(double x, mpfr_prec_t prec = 256) {
  // doubles used in tests are exactly representable
  Rational r(x);
  return BigFloat(r, prec);
}

double rel_diff(const BigFloat& a, const BigFloat& b) {
  return ((a - b).abs() / b.abs()).to_double();
}

}  // namespace

TEST_CASE("y_of_n") {
  BigFloat y1 = y_of_n(1, 256);
  CHECK(std::abs(y1.to_double() - 2.5108) < 1e-3);
  CHECK_THROWS_AS(y_of_n(0, 256), std::invalid_argument);
  BigFloat prev = y1;
  for (long n = 2; n <= 50; ++n) {
    BigFloat y = y_of_n(n, 256);
    CHECK(y > prev);
    prev = y;
  }
}

TEST_CASE("half-order closed forms") {
  for (double yv : {0.75, 2.5, 25.0}) {
    BigFloat y = bf(yv);
    BigFloat ratio = bessel_i_half(1, y) / bessel_i_half(-1, y);
    BigFloat tanh_y = y.sinh() / y.cosh();
    CHECK(rel_diff(ratio, tanh_y) < 1e-70);
  }
  // I_{3/2}(y) = sqrt(2/(pi y)) (cosh y - sinh y / y), against the series
  BigFloat y = bf(1.0);
  BigFloat ref = bessel_i_half_series(3, y);
  CHECK(rel_diff(bessel_i_half(3, y), ref) < 1e-70);
}

TEST_CASE("order-shift relation at the bottom step") {
  // I_{-1/2}(y) = 1/y I_{1/2}(y) + I_{3/2}(y)
  for (long n : {1L, 10L, 100L}) {
    BigFloat y = y_of_n(n, 256);
    BigFloat lhs = bessel_i_half(-1, y);
    BigFloat rhs = bessel_i_half(1, y) / y + bessel_i_half(3, y);
    CHECK(rel_diff(lhs, rhs) < 1e-70);
  }
}

TEST_CASE("recurrence route agrees with series summation") {
  for (double yv : {2.5, 25.0, 80.0}) {
    BigFloat y = bf(yv);
    for (long ell = 0; ell <= 10; ++ell) {
      long two_nu = 3 - 4 * ell;
      BigFloat a = bessel_i_half(two_nu, y);
      BigFloat b = bessel_i_half_series(two_nu, y);
      BigFloat rd = (a - b).abs() / b.abs();
      CHECK(rd <= bigfloat_pow2(-128, 256));
    }
  }
}

TEST_CASE("boundary orders, both recurrence directions") {
  for (double yv : {2.5, 25.0}) {
    BigFloat y = bf(yv);
    for (long two_nu : {5L, 21L, 41L, -41L}) {
      BigFloat a = bessel_i_half(two_nu, y);
      BigFloat b = bessel_i_half_series(two_nu, y);
      CHECK((a - b).abs() / b.abs() <= bigfloat_pow2(-128, 256));
    }
  }
}

TEST_CASE("positivity at the orders used") {
  for (long n : {1L, 10L, 100L, 1000L}) {
    BigFloat y = y_of_n(n, 256);
    for (long ell = 0; ell <= 10; ++ell) {
      CHECK(bessel_i_half(3 - 4 * ell, y).sign() > 0);
    }
    CHECK(bessel_i_half(1, y).sign() > 0);
    CHECK(bessel_i_half(-1, y).sign() > 0);
  }
}

TEST_CASE("bessel argument validation") {
  BigFloat y = bf(2.5);
  CHECK_THROWS_AS(bessel_i_half(2, y), std::invalid_argument);
  CHECK_THROWS_AS(bessel_i_half(43, y), std::invalid_argument);
  CHECK_THROWS_AS(bessel_i_half(-43, y), std::invalid_argument);
  CHECK_THROWS_AS(bessel_i_half(1, bf(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(bessel_i_half(1, bf(-1.0)), std::invalid_argument);
  CHECK_THROWS_AS(BigFloat(32), std::invalid_argument);
}

TEST_CASE("shift lemma residuals") {
  // l = 0: degenerate, residual exactly zero
  CHECK(check_shift_lemma(0, 10, 256).is_zero());
  // l = 1: the two-term form is the exact relation
  CHECK(check_shift_lemma(1, 10, 256).to_double() < 1e-30);
  CHECK(check_shift_lemma(1, 1000, 256).to_double() < 1e-30);
  // l = 2, 3: bounded over growing n
  for (long ell : {2L, 3L}) {
    double prev = -1;
    for (long n : {10L, 100L, 1000L}) {
      double r = check_shift_lemma(ell, n, 256).to_double();
      CHECK(r < 100.0);
      if (prev >= 0) CHECK(r <= 2 * prev);
      prev = r;
    }
  }
  CHECK_THROWS_AS(check_shift_lemma(11, 10, 256), std::invalid_argument);
  CHECK_THROWS_AS(check_shift_lemma(1, 0, 256), std::invalid_argument);
}

TEST_CASE("partition predictor") {
  auto p = partition_counts(100);
  Prediction pr = predict(PredKind::partition, 0, 100, 1, 256);
  BigFloat exact(p[100], 256);
  CHECK(rel_diff(pr.value, exact) < 5e-3);
  CHECK(pr.term_count == 1);
}

TEST_CASE("crank predictor error scale") {
  // M_2(n) = 2 n p(n); two-term relative error is ~ 1/(24n)
  auto p = partition_counts(400);
  for (long n : {100L, 200L, 400L}) {
    Int m2 = Int(2 * n) * p[static_cast<size_t>(n)];
    Prediction pr = predict(PredKind::crank, 1, n, 2, 256);
    double rel = rel_diff(pr.value, BigFloat(m2, 256));
    double scaled = rel * 24.0 * static_cast<double>(n);
    CHECK(scaled > 0.5);
    CHECK(scaled < 2.0);
  }
}

TEST_CASE("two-term crank predictor collapses at k = 1") {
  // tilde{xi}_2 = 0, so one- and two-term predictions coincide
  for (long n : {10L, 50L}) {
    Prediction a = predict(PredKind::crank, 1, n, 1, 256);
    Prediction b = predict(PredKind::crank, 1, n, 2, 256);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("predictors are monotone in n") {
  for (PredKind kind : {PredKind::crank, PredKind::rank, PredKind::diff}) {
    long k = (kind == PredKind::diff) ? 1 : 2;
    BigFloat prev = predict(kind, k, 10, 1, 256).value;
    for (long n : {20L, 50L, 100L, 400L, 1000L}) {
      BigFloat v = predict(kind, k, n, 1, 256).value;
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("predictor argument validation") {
  CHECK_THROWS_AS(predict(PredKind::partition, 0, 100, 2, 256), std::invalid_argument);
  CHECK_THROWS_AS(predict(PredKind::diff, 1, 100, 2, 256), std::invalid_argument);
  CHECK_THROWS_AS(predict(PredKind::diff, 0, 100, 1, 256), std::invalid_argument);
  CHECK_THROWS_AS(predict(PredKind::crank, 1, 0, 1, 256), std::invalid_argument);
  CHECK_THROWS_AS(predict(PredKind::crank, 1, 10, 3, 256), std::invalid_argument);
}
