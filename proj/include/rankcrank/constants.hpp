#pragma once

// The asymptotic constants attached to crank/rank moments: the xi family,
// its primed and tilde variants, the triple-product constants, and the
// alpha/beta constants of the moment growth laws. Every constant is
// available both in closed form and through the recurrence that defines it,
// so the two routes can be compared exactly.

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "rankcrank/bernoulli.hpp"
#include "rankcrank/rational.hpp"

namespace rankcrank {

// xi_{2k} = (-1)^k 2 B_{2k}(1/2)
inline Rational xi(long k) {
  if (k < 0) throw std::invalid_argument("xi: k must be >= 0");
  Rational v = Rational(2) * bernoulli_half(2 * k);
  return (k % 2 == 0) ? v : -v;
}

// xi'_0 = 0 and xi'_{2k} = -(2k)(2k-1)/4 xi_{2k-2} for k > 0.
inline Rational xi_prime(long k) {
  if (k < 0) throw std::invalid_argument("xi_prime: k must be >= 0");
  if (k == 0) return Rational(0);
  return frac(-(2 * k) * (2 * k - 1), 4) * xi(k - 1);
}

// Unwinding weight of one recurrence step:
//   u(k, j) = 2 C(2k-1, 2j-1) B_{2j}/(4j) (-1)^{j+1}.
inline Rational xi_step_weight(long k, long j) {
  Rational w = Rational(2 * binomial(2 * k - 1, 2 * j - 1)) * bernoulli_number(2 * j) /
               Rational(4 * j);
  return (j % 2 == 1) ? w : -w;
}

// xi_{2k} = sum_{j=1}^{k} u(k,j) xi_{2k-2j}, from the base case xi_0 = 2.
inline Rational xi_via_recurrence(long k) {
  if (k < 0) throw std::invalid_argument("xi_via_recurrence: k must be >= 0");
  std::vector<Rational> v;
  v.emplace_back(2);
  for (long kk = 1; kk <= k; ++kk) {
    Rational acc(0);
    for (long j = 1; j <= kk; ++j) acc += xi_step_weight(kk, j) * v[static_cast<size_t>(kk - j)];
    v.push_back(acc);
  }
  return v[static_cast<size_t>(k)];
}

// xi'_{2k} = sum_{j=1}^{k-1} u(k,j) xi'_{2k-2j} - (2k-1)/2 xi_{2k-2},
// where the lower-order xi values are themselves taken from the recurrence.
inline Rational xi_prime_via_recurrence(long k) {
  if (k < 0) throw std::invalid_argument("xi_prime_via_recurrence: k must be >= 0");
  std::vector<Rational> v;
  v.emplace_back(0);
  for (long kk = 1; kk <= k; ++kk) {
    Rational acc(0);
    for (long j = 1; j <= kk - 1; ++j) acc += xi_step_weight(kk, j) * v[static_cast<size_t>(kk - j)];
    acc -= frac(2 * kk - 1, 2) * xi_via_recurrence(kk - 1);
    v.push_back(acc);
  }
  return v[static_cast<size_t>(k)];
}

// tilde{xi}_{2k} = -3 (2k)(2k-3) xi_{2k} + xi'_{2k}
inline Rational xi_tilde(long k) {
  if (k < 0) throw std::invalid_argument("xi_tilde: k must be >= 0");
  return Rational(-3 * (2 * k) * (2 * k - 3)) * xi(k) + xi_prime(k);
}

inline Rational lambda(long k) { return xi(k); }

// tilde{lambda}_0 = 0; for k > 0,
// tilde{lambda}_{2k} = -3 (2k)(2k-3) xi_{2k} - 3/4 (2k)(2k-1) xi_{2k-2}.
inline Rational lambda_tilde(long k) {
  if (k < 0) throw std::invalid_argument("lambda_tilde: k must be >= 0");
  if (k == 0) return Rational(0);
  return Rational(-3 * (2 * k) * (2 * k - 3)) * xi(k) -
         frac(3, 4) * Rational((2 * k) * (2 * k - 1)) * xi(k - 1);
}

// xi_{2a,2b,2c} = 1/4 xi_{2a} xi_{2b} xi_{2c}
inline Rational xi_triple(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("xi_triple: indices must be >= 0");
  return frac(1, 4) * xi(a) * xi(b) * xi(c);
}

// xi'_{2a,2b,2c} = 1/4 (xi' xi xi + xi xi' xi + xi xi xi')
inline Rational xi_triple_prime(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("xi_triple_prime: indices must be >= 0");
  return frac(1, 4) * (xi_prime(a) * xi(b) * xi(c) + xi(a) * xi_prime(b) * xi(c) +
                       xi(a) * xi(b) * xi_prime(c));
}

// tilde variant at total weight k = a+b+c.
inline Rational xi_triple_tilde(long a, long b, long c) {
  long k = a + b + c;
  return Rational(-3 * (2 * k) * (2 * k - 3)) * xi_triple(a, b, c) + xi_triple_prime(a, b, c);
}

namespace detail {

// Triple recursion: every nonzero slot unwinds one xi-recurrence step;
// slots at 0 are frozen (their factor needs no unwinding). Inner sums with
// an empty index range vanish.
inline Rational xi_triple_rec_impl(std::array<long, 3> t,
                                   std::map<std::array<long, 3>, Rational>& memo) {
  if (t[0] == 0 && t[1] == 0 && t[2] == 0) return Rational(2);
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;

  std::vector<int> live;
  for (int s = 0; s < 3; ++s) {
    if (t[static_cast<size_t>(s)] > 0) live.push_back(s);
  }
  Rational acc(0);
  std::vector<long> jj(live.size(), 1);
  for (;;) {
    Rational w(1);
    std::array<long, 3> lower = t;
    for (size_t i = 0; i < live.size(); ++i) {
      long slot = t[static_cast<size_t>(live[i])];
      w *= xi_step_weight(slot, jj[i]);
      lower[static_cast<size_t>(live[i])] = slot - jj[i];
    }
    acc += w * xi_triple_rec_impl(lower, memo);
    // advance the multi-index
    size_t pos = 0;
    while (pos < live.size()) {
      if (++jj[pos] <= t[static_cast<size_t>(live[pos])]) break;
      jj[pos] = 1;
      ++pos;
    }
    if (pos == live.size()) break;
  }
  memo.emplace(t, acc);
  return acc;
}

inline Rational xi_triple_prime_rec_impl(std::array<long, 3> t,
                                         std::map<std::array<long, 3>, Rational>& memo) {
  if (t[0] == 0 && t[1] == 0 && t[2] == 0) return Rational(0);
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;

  std::vector<int> live;
  for (int s = 0; s < 3; ++s) {
    if (t[static_cast<size_t>(s)] > 0) live.push_back(s);
  }
  Rational acc(0);
  std::vector<long> jj(live.size(), 1);
  for (;;) {
    Rational w(1);
    std::array<long, 3> lower = t;
    for (size_t i = 0; i < live.size(); ++i) {
      long slot = t[static_cast<size_t>(live[i])];
      w *= xi_step_weight(slot, jj[i]);
      lower[static_cast<size_t>(live[i])] = slot - jj[i];
    }
    acc += w * xi_triple_prime_rec_impl(lower, memo);
    size_t pos = 0;
    while (pos < live.size()) {
      if (++jj[pos] <= t[static_cast<size_t>(live[pos])]) break;
      jj[pos] = 1;
      ++pos;
    }
    if (pos == live.size()) break;
  }
  // the 1/(4 slot) xi'_{2 slot} * (other xi factors) terms; slots at 0
  // contribute nothing because xi'_0 = 0. Seeded by the single-index
  // recurrences to keep the route independent of the closed forms.
  for (int s : live) {
    Rational term = frac(1, 4 * t[static_cast<size_t>(s)]) *
                    xi_prime_via_recurrence(t[static_cast<size_t>(s)]);
    for (int o = 0; o < 3; ++o) {
      if (o != s) term *= xi_via_recurrence(t[static_cast<size_t>(o)]);
    }
    acc += term;
  }
  memo.emplace(t, acc);
  return acc;
}

}  // namespace detail

inline Rational xi_triple_via_recurrence(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) {
    throw std::invalid_argument("xi_triple_via_recurrence: indices must be >= 0");
  }
  std::map<std::array<long, 3>, Rational> memo;
  return detail::xi_triple_rec_impl({a, b, c}, memo);
}

inline Rational xi_triple_prime_via_recurrence(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) {
    throw std::invalid_argument("xi_triple_prime_via_recurrence: indices must be >= 0");
  }
  std::map<std::array<long, 3>, Rational> memo;
  return detail::xi_triple_prime_rec_impl({a, b, c}, memo);
}

// alpha_{2k} = (-24)^k B_{2k}(1/2)
inline Rational alpha(long k) {
  if (k < 0) throw std::invalid_argument("alpha: k must be >= 0");
  Rational p(pow_int(-24, static_cast<unsigned long>(k)));
  return p * bernoulli_half(2 * k);
}

// beta_{2k} = beta_coeff(k) * sqrt(6)/pi with
// beta_coeff(k) = 2k(2k-1) (-24)^{k-1} B_{2k-2}(1/2), defined for k >= 1.
inline Rational beta_coeff(long k) {
  if (k < 1) throw std::invalid_argument("beta_coeff: k must be >= 1");
  Rational p(pow_int(-24, static_cast<unsigned long>(k - 1)));
  return Rational((2 * k) * (2 * k - 1)) * p * bernoulli_half(2 * k - 2);
}

// 2 sum_{j=1}^{k-1} C(2k-1,2j-1) B_{2j}/(4j) (-1)^{j+1} xi'_{2k-2j}
//   = (1 - 1/k) xi'_{2k}
inline bool check_xi_prime_identity(long k) {
  if (k < 1) throw std::invalid_argument("check_xi_prime_identity: k must be >= 1");
  Rational lhs(0);
  for (long j = 1; j <= k - 1; ++j) lhs += xi_step_weight(k, j) * xi_prime(k - j);
  return lhs == (Rational(1) - frac(1, k)) * xi_prime(k);
}

// Leading-order matching:
//   sum multinomial(2k;...) xi_{2a,2b,2c} = C(2k-1,2) xi_{2k} + C(2k,2)/4 xi_{2k-2}
// and its second-order analogue with tilde-xi triples against tilde-lambda.
inline bool check_leading_order_matching(long k) {
  if (k < 1) throw std::invalid_argument("check_leading_order_matching: k must be >= 1");
  Rational lhs1(0), lhs2(0);
  for (long a = 0; a <= k; ++a) {
    for (long b = 0; a + b <= k; ++b) {
      long c = k - a - b;
      Rational mult(multinomial3(2 * a, 2 * b, 2 * c));
      lhs1 += mult * xi_triple(a, b, c);
      lhs2 += mult * xi_triple_tilde(a, b, c);
    }
  }
  Rational rhs1 = Rational(binomial(2 * k - 1, 2)) * xi(k) +
                  Rational(binomial(2 * k, 2)) * frac(1, 4) * xi(k - 1);
  Rational rhs2 = Rational(binomial(2 * k - 1, 2)) * lambda_tilde(k) +
                  Rational(binomial(2 * k, 2)) * frac(1, 4) * lambda_tilde(k - 1);
  return lhs1 == rhs1 && lhs2 == rhs2;
}

// All constants for one index k, each from its closed form.
struct ConstantSet {
  long k = 0;
  Rational xi;
  Rational xi_prime;
  Rational xi_tilde;
  Rational lambda;
  Rational lambda_tilde;
  Rational alpha;
  Rational beta_coeff;  // rational factor multiplying sqrt(6)/pi; 0 at k = 0
};

inline ConstantSet constant_set(long k) {
  ConstantSet s;
  s.k = k;
  s.xi = xi(k);
  s.xi_prime = xi_prime(k);
  s.xi_tilde = xi_tilde(k);
  s.lambda = lambda(k);
  s.lambda_tilde = lambda_tilde(k);
  s.alpha = alpha(k);
  s.beta_coeff = (k >= 1) ? beta_coeff(k) : Rational(0);
  return s;
}

struct TripleConstantSet {
  std::array<long, 3> idx{0, 0, 0};
  Rational xi3;
  Rational xi3_prime;
  Rational xi3_tilde;
};

inline TripleConstantSet triple_constant_set(long a, long b, long c) {
  TripleConstantSet s;
  s.idx = {a, b, c};
  s.xi3 = xi_triple(a, b, c);
  s.xi3_prime = xi_triple_prime(a, b, c);
  s.xi3_tilde = xi_triple_tilde(a, b, c);
  return s;
}

}  // namespace rankcrank
