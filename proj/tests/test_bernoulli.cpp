#include <catch2/catch_amalgamated.hpp>

#include "rankcrank/bernoulli.hpp"

using namespace rankcrank;

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == frac(-1, 2));
  CHECK(bernoulli_number(2) == frac(1, 6));
  CHECK(bernoulli_number(4) == frac(-1, 30));
  CHECK(bernoulli_number(12) == frac(-691, 2730));
  for (long n = 3; n <= 41; n += 2) CHECK(bernoulli_number(n) == 0);
  CHECK_THROWS_AS(bernoulli_number(-1), std::invalid_argument);
}

TEST_CASE("Bernoulli polynomials") {
  // B_2(x) = x^2 - x + 1/6
  CHECK(bernoulli_poly(2, frac(1, 3)) == frac(-1, 18));
  CHECK(bernoulli_poly(0, frac(5, 7)) == 1);
  // B_n(0) = B_n
  for (long n = 0; n <= 12; ++n) CHECK(bernoulli_poly(n, Rational(0)) == bernoulli_number(n));
}

TEST_CASE("Bernoulli polynomial at one half") {
  CHECK(bernoulli_half(0) == 1);
  CHECK(bernoulli_half(2) == frac(-1, 12));
  CHECK(bernoulli_half(4) == frac(7, 240));
  // odd orders vanish
  for (long n = 1; n <= 39; n += 2) CHECK(bernoulli_half(n) == 0);
  // closed form agrees with direct polynomial evaluation
  for (long n = 0; n <= 40; ++n) CHECK(bernoulli_half(n) == bernoulli_poly(n, frac(1, 2)));
  // (-1)^k B_{2k}(1/2) > 0
  for (long k = 0; k <= 20; ++k) {
    Rational v = bernoulli_half(2 * k);
    CHECK(((k % 2 == 0) ? v : -v) > 0);
  }
}

TEST_CASE("convolution identity at 1/2") {
  // k = 1: both sides are 1/24
  Rational lhs = Rational(binomial(1, 1)) * bernoulli_number(2) / Rational(4) * bernoulli_half(0);
  CHECK(lhs == frac(1, 24));
  CHECK(frac(-1, 2) * bernoulli_half(2) == frac(1, 24));
  for (long k = 1; k <= 20; ++k) CHECK(check_convolution_half(k));
}

TEST_CASE("general convolution identity") {
  CHECK(check_general_convolution(0, frac(3, 5), frac(-2, 9)));
  CHECK(check_general_convolution(2, Rational(0), frac(1, 2)));
  const Rational grid[] = {Rational(0), frac(1, 2), Rational(1), frac(-1, 2)};
  for (long n = 0; n <= 12; ++n) {
    for (const auto& x : grid) {
      for (const auto& y : grid) CHECK(check_general_convolution(n, x, y));
    }
  }
}

TEST_CASE("triple convolution identity") {
  // k = 1: LHS = 3 B_2(1/2) = -1/4, RHS = 0 - C(2,2)/4 * 1
  Rational lhs = Rational(3) * bernoulli_half(2);
  CHECK(lhs == frac(-1, 4));
  CHECK(check_triple_convolution(1));
  CHECK(check_triple_convolution(2));
  for (long k = 1; k <= 12; ++k) CHECK(check_triple_convolution(k));
}
