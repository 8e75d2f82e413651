#pragma once

// Truncated power series in q with exact rational coefficients, plus the
// standard q-expansions built on them: Euler's product, the partition
// generating function, divisor series Phi_j, and Eisenstein series E_k.

#include <stdexcept>
#include <utility>
#include <vector>

#include "rankcrank/bernoulli.hpp"
#include "rankcrank/rational.hpp"

namespace rankcrank {

// A series known modulo q^{T+1}. Binary operations on mismatched truncation
// orders resolve to the minimum order.
class QSeries {
 public:
  explicit QSeries(long order) : order_(order) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
  }

  QSeries(long order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 0 || c_.size() != static_cast<size_t>(order) + 1) {
      throw std::invalid_argument("QSeries: coefficient count must be order+1");
    }
  }

  static QSeries constant(const Rational& value, long order) {
    QSeries s(order);
    s.c_[0] = value;
    return s;
  }

  long order() const { return order_; }

  const Rational& coeff(long n) const {
    if (n < 0 || n > order_) throw std::out_of_range("QSeries::coeff");
    return c_[static_cast<size_t>(n)];
  }

  Rational& at(long n) {
    if (n < 0 || n > order_) throw std::out_of_range("QSeries::at");
    return c_[static_cast<size_t>(n)];
  }

  QSeries truncated(long new_order) const {
    if (new_order < 0) throw std::invalid_argument("QSeries::truncated");
    if (new_order >= order_) return *this;
    std::vector<Rational> c(c_.begin(), c_.begin() + new_order + 1);
    return QSeries(new_order, std::move(c));
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    long t = std::min(a.order_, b.order_);
    QSeries r(t);
    for (long n = 0; n <= t; ++n) r.c_[n] = a.c_[n] + b.c_[n];
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    long t = std::min(a.order_, b.order_);
    QSeries r(t);
    for (long n = 0; n <= t; ++n) r.c_[n] = a.c_[n] - b.c_[n];
    return r;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    long t = std::min(a.order_, b.order_);
    QSeries r(t);
    Rational tmp;
    for (long i = 0; i <= t; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; i + j <= t; ++j) {
        if (b.c_[j] == 0) continue;
        tmp = a.c_[i] * b.c_[j];
        r.c_[i + j] += tmp;
      }
    }
    return r;
  }

  friend QSeries operator*(const Rational& s, const QSeries& a) {
    QSeries r(a.order_);
    for (long n = 0; n <= a.order_; ++n) r.c_[n] = s * a.c_[n];
    return r;
  }

  friend QSeries operator-(const QSeries& a) { return Rational(-1) * a; }

  // Multiplicative inverse; requires a nonzero constant term.
  QSeries inverse() const {
    if (c_[0] == 0) {
      throw std::invalid_argument("QSeries::inverse: zero constant term");
    }
    QSeries r(order_);
    Rational lead = Rational(1) / c_[0];
    r.c_[0] = lead;
    for (long n = 1; n <= order_; ++n) {
      Rational acc(0);
      for (long j = 1; j <= n; ++j) {
        if (c_[j] == 0) continue;
        acc += c_[j] * r.c_[n - j];
      }
      r.c_[n] = -lead * acc;
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  long order_;
  std::vector<Rational> c_;
};

inline QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries series_inverse(const QSeries& a) { return a.inverse(); }

// q d/dq: coefficient of q^n becomes n * a_n.
inline QSeries delta_q(const QSeries& a) {
  QSeries r(a.order());
  for (long n = 1; n <= a.order(); ++n) r.at(n) = Rational(n) * a.coeff(n);
  return r;
}

// prod_{n>=1} (1 - q^n) expanded by the pentagonal number theorem:
// sum_{k in Z} (-1)^k q^{k(3k-1)/2}.
inline QSeries euler_product(long order) {
  QSeries r(order);
  r.at(0) = 1;
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2;
    long g2 = k * (3 * k + 1) / 2;
    if (g1 > order && g2 > order) break;
    Rational sign((k % 2 == 0) ? 1 : -1);
    if (g1 <= order) r.at(g1) = sign;
    if (g2 <= order) r.at(g2) = sign;
  }
  return r;
}

// Exact p(0..T) from the pentagonal recurrence
//   p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<Int> partition_counts(long order) {
  if (order < 0) throw std::invalid_argument("partition_counts: negative order");
  std::vector<Int> p(static_cast<size_t>(order) + 1);
  p[0] = 1;
  for (long n = 1; n <= order; ++n) {
    Int acc(0);
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      long g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      if (k % 2 == 1) {
        if (g1 <= n) acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        if (g1 <= n) acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p;
}

// P(q) = sum p(n) q^n = 1 / prod (1 - q^n).
inline QSeries partition_series(long order) {
  auto p = partition_counts(order);
  QSeries r(order);
  for (long n = 0; n <= order; ++n) r.at(n) = Rational(p[static_cast<size_t>(n)]);
  return r;
}

// Phi_j(q) = sum_{n>=1} sigma_j(n) q^n, sigma_j(n) = sum_{d|n} d^j.
inline QSeries divisor_series(long j, long order) {
  if (j < 1) throw std::invalid_argument("divisor_series: j must be >= 1");
  QSeries r(order);
  for (long d = 1; d <= order; ++d) {
    Int dj = pow_int(d, static_cast<unsigned long>(j));
    Rational term(dj);
    for (long m = d; m <= order; m += d) r.at(m) += term;
  }
  return r;
}

// E_k = 1 - (2k / B_k) Phi_{k-1}, defined for even k >= 2.
inline QSeries eisenstein_series(long k, long order) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument("eisenstein_series: k must be even and >= 2");
  }
  Rational factor = Rational(-2 * k) / bernoulli_number(k);
  QSeries r = factor * divisor_series(k - 1, order);
  r.at(0) = 1;
  return r;
}

}  // namespace rankcrank
