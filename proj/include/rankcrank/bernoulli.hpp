#pragma once

// Bernoulli numbers (convention B_1 = -1/2), Bernoulli polynomials at
// rational arguments, and the convolution identities used to solve the
// moment-constant recurrences.

#include <mutex>
#include <stdexcept>
#include <vector>

#include "rankcrank/rational.hpp"

namespace rankcrank {

// Growable table of B_0, B_1, ...; entries never change once computed.
class BernoulliCache {
 public:
  static Rational number(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli: n must be >= 0");
    static BernoulliCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    cache.grow(n);
    return cache.values_[static_cast<size_t>(n)];
  }

 private:
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, solved for B_n.
  void grow(long n) {
    while (static_cast<long>(values_.size()) <= n) {
      long m = static_cast<long>(values_.size());
      if (m == 0) {
        values_.emplace_back(1);
        continue;
      }
      if (m >= 3 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rational acc(0);
      for (long j = 0; j < m; ++j) {
        acc += Rational(binomial(m + 1, j)) * values_[static_cast<size_t>(j)];
      }
      values_.push_back(-acc / Rational(m + 1));
    }
  }

  std::mutex mu_;
  std::vector<Rational> values_;
};

inline Rational bernoulli_number(long n) { return BernoulliCache::number(n); }

// B_n(x) = sum_j C(n,j) B_j x^{n-j}
inline Rational bernoulli_poly(long n, const Rational& x) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: n must be >= 0");
  Rational acc(0);
  Rational xpow(1);
  for (long j = n; j >= 0; --j) {
    acc += Rational(binomial(n, j)) * bernoulli_number(j) * xpow;
    xpow *= x;
  }
  return acc;
}

// B_n(1/2): zero for odd n, (2^{1-n} - 1) B_n for even n.
inline Rational bernoulli_half(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli_half: n must be >= 0");
  if (n % 2 == 1) return Rational(0);
  return (pow2_rational(1 - n) - 1) * bernoulli_number(n);
}

// sum_{j=1}^{k} C(2k-1,2j-1) B_{2j}/(4j) B_{2k-2j}(1/2) = -1/2 B_{2k}(1/2)
inline bool check_convolution_half(long k) {
  if (k < 1) throw std::invalid_argument("check_convolution_half: k must be >= 1");
  Rational lhs(0);
  for (long j = 1; j <= k; ++j) {
    lhs += Rational(binomial(2 * k - 1, 2 * j - 1)) * bernoulli_number(2 * j) /
           Rational(4 * j) * bernoulli_half(2 * k - 2 * j);
  }
  return lhs == frac(-1, 2) * bernoulli_half(2 * k);
}

// sum_j C(n,j) B_j(x) B_{n-j}(y) = -(n-1) B_n(x+y) + n (x+y-1) B_{n-1}(x+y)
inline bool check_general_convolution(long n, const Rational& x, const Rational& y) {
  if (n < 0) throw std::invalid_argument("check_general_convolution: n must be >= 0");
  Rational lhs(0);
  for (long j = 0; j <= n; ++j) {
    lhs += Rational(binomial(n, j)) * bernoulli_poly(j, x) * bernoulli_poly(n - j, y);
  }
  Rational s = x + y;
  Rational rhs = Rational(-(n - 1)) * bernoulli_poly(n, s);
  if (n >= 1) rhs += Rational(n) * (s - 1) * bernoulli_poly(n - 1, s);
  return lhs == rhs;
}

// Triple analogue over 2a+2b+2c = 2k:
//   sum multinomial(2k;2a,2b,2c) B_{2a}(1/2) B_{2b}(1/2) B_{2c}(1/2)
//     = C(2k-1,2) B_{2k}(1/2) - C(2k,2)/4 B_{2k-2}(1/2)
inline bool check_triple_convolution(long k) {
  if (k < 1) throw std::invalid_argument("check_triple_convolution: k must be >= 1");
  Rational lhs(0);
  for (long a = 0; a <= k; ++a) {
    for (long b = 0; a + b <= k; ++b) {
      long c = k - a - b;
      lhs += Rational(multinomial3(2 * a, 2 * b, 2 * c)) * bernoulli_half(2 * a) *
             bernoulli_half(2 * b) * bernoulli_half(2 * c);
    }
  }
  Rational rhs = Rational(binomial(2 * k - 1, 2)) * bernoulli_half(2 * k) -
                 Rational(binomial(2 * k, 2)) * frac(1, 4) * bernoulli_half(2 * k - 2);
  return lhs == rhs;
}

}  // namespace rankcrank
