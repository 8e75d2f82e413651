#pragma once

// Truncated series in q whose q^n coefficient is an integer Laurent
// polynomial in x, supported on -n <= m <= n. Rows are stored in full so
// that single factors 1/(1 - x^{s} q^{j}) — which are not x -> 1/x
// symmetric — stay exact; the crank/rank tables produced downstream are
// symmetric and are verified as such.

#include <stdexcept>
#include <vector>

#include "rankcrank/rational.hpp"

namespace rankcrank {

class BiSeries {
 public:
  explicit BiSeries(long order) : order_(order) {
    if (order < 0) throw std::invalid_argument("BiSeries: negative order");
    rows_.resize(static_cast<size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) {
      rows_[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n + 1), Int(0));
    }
  }

  static BiSeries one(long order) {
    BiSeries b(order);
    b.rows_[0][0] = 1;
    return b;
  }

  long order() const { return order_; }

  // Coefficient of x^m q^n; zero outside the stored support.
  const Int& coeff(long m, long n) const {
    static const Int zero(0);
    if (n < 0 || n > order_ || m < -n || m > n) return zero;
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
  }

  Int& at(long m, long n) {
    if (n < 0 || n > order_ || m < -n || m > n) throw std::out_of_range("BiSeries::at");
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
  }

  bool is_symmetric() const {
    for (long n = 0; n <= order_; ++n) {
      for (long m = 1; m <= n; ++m) {
        if (coeff(m, n) != coeff(-m, n)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

  // In-place *this /= (1 - x^s q^j), i.e. multiplication by the geometric
  // series in x^s q^j:  r(m,n) = a(m,n) + r(m - s, n - j).
  void mul_linear_inverse_inplace(int s, long j) {
    check_factor(s, j);
    for (long n = j; n <= order_; ++n) {
      auto& row = rows_[static_cast<size_t>(n)];
      for (long m = -n; m <= n; ++m) row[static_cast<size_t>(m + n)] += coeff(m - s, n - j);
    }
  }

  // In-place *this *= (1 - x^s q^j). Rows are processed top-down so each
  // subtraction reads pre-update state.
  void mul_linear_inplace(int s, long j) {
    check_factor(s, j);
    for (long n = order_; n >= j; --n) {
      auto& row = rows_[static_cast<size_t>(n)];
      for (long m = -n; m <= n; ++m) row[static_cast<size_t>(m + n)] -= coeff(m - s, n - j);
    }
  }

  // In-place *this *= (1 - q^j).
  void mul_one_minus_qpow_inplace(long j) {
    if (j < 1) throw std::invalid_argument("BiSeries: factor exponent must be >= 1");
    for (long n = order_; n >= j; --n) {
      auto& row = rows_[static_cast<size_t>(n)];
      for (long m = -(n - j); m <= n - j; ++m) row[static_cast<size_t>(m + n)] -= coeff(m, n - j);
    }
  }

  // *this += q^shift * other
  void add_q_shifted(const BiSeries& other, long shift) {
    if (shift < 0) throw std::invalid_argument("BiSeries::add_q_shifted: negative shift");
    for (long n = shift; n <= order_; ++n) {
      auto& row = rows_[static_cast<size_t>(n)];
      long w = n - shift;
      if (w > other.order_) continue;
      for (long m = -w; m <= w; ++m) row[static_cast<size_t>(m + n)] += other.coeff(m, n - shift);
    }
  }

  Int row_sum(long n) const {
    Int acc(0);
    for (const auto& v : rows_.at(static_cast<size_t>(n))) acc += v;
    return acc;
  }

  // sum_m m^e c(m,n) over the full row.
  Int weighted_row_sum(long n, long exponent) const {
    if (exponent < 0) throw std::invalid_argument("BiSeries::weighted_row_sum");
    if (exponent == 0) return row_sum(n);
    Int acc(0);
    for (long m = -n; m <= n; ++m) {
      if (m == 0) continue;
      const Int& c = coeff(m, n);
      if (c == 0) continue;
      Int mm(m);
      acc += c * pow_int(mm, static_cast<unsigned long>(exponent));
    }
    return acc;
  }

 private:
  static void check_factor(int s, long j) {
    if (s != 1 && s != -1) throw std::invalid_argument("BiSeries: s must be +1 or -1");
    if (j < 1) throw std::invalid_argument("BiSeries: factor exponent must be >= 1");
  }

  long order_;
  std::vector<std::vector<Int>> rows_;
};

// a / (1 - x^s q^m), truncated at a's order.
inline BiSeries bi_mul_linear_inverse(BiSeries a, int s, long m) {
  a.mul_linear_inverse_inplace(s, m);
  return a;
}

}  // namespace rankcrank
