#pragma once

// Crank and rank statistics of integer partitions: the bivariate tables
// M(m,n) and N(m,n), their even moments M_{2k}(n), N_{2k}(n), the moment
// difference D_{2k}, and spt(n). Each quantity is computable by at least
// two independent routes (generating function, divisor-sum recurrence,
// brute-force enumeration) so the routes can cross-validate.

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankcrank/biseries.hpp"
#include "rankcrank/qseries.hpp"
#include "rankcrank/rational.hpp"

namespace rankcrank {

enum class StatKind { crank, rank };
enum class Provenance { recurrence, bivariate, oracle };

struct MomentTable {
  StatKind kind = StatKind::crank;
  long exponent = 0;  // moment order; even in all theorems, odd allowed for checks
  long order = 0;     // values cover 0 <= n <= order
  Provenance provenance = Provenance::bivariate;
  std::vector<Int> values;
};

// C(x;q) = prod_{j>=1} (1-q^j) / ((1-x q^j)(1-x^{-1} q^j)).
// The product convention makes the n = 1 row come out as x - 1 + x^{-1}.
inline BiSeries crank_bivariate(long order) {
  BiSeries b = BiSeries::one(order);
  for (long j = 1; j <= order; ++j) {
    b.mul_linear_inverse_inplace(+1, j);
    b.mul_linear_inverse_inplace(-1, j);
    b.mul_one_minus_qpow_inplace(j);
  }
  return b;
}

// R(x;q) = sum_{r>=0} q^{r^2} / ((xq;q)_r (x^{-1}q;q)_r), built by keeping a
// running product of the paired factors 1/((1-x q^i)(1-x^{-1} q^i)).
inline BiSeries rank_bivariate(long order) {
  BiSeries acc(order);
  acc.at(0, 0) = 1;
  BiSeries f = BiSeries::one(order);
  for (long r = 1; r * r <= order; ++r) {
    f.mul_linear_inverse_inplace(+1, r);
    f.mul_linear_inverse_inplace(-1, r);
    acc.add_q_shifted(f, r * r);
  }
  return acc;
}

// Partitions are handled as weakly decreasing positive parts.
inline long rank_of(const std::vector<long>& parts) {
  if (parts.empty()) return 0;
  return parts.front() - static_cast<long>(parts.size());
}

inline long crank_of(const std::vector<long>& parts) {
  if (parts.empty()) return 0;
  long ones = 0;
  for (long p : parts) {
    if (p == 1) ++ones;
  }
  if (ones == 0) return parts.front();
  long mu = 0;
  for (long p : parts) {
    if (p > ones) ++mu;
  }
  return mu - ones;
}

// Visit every partition of n (weakly decreasing parts). n = 0 visits the
// empty partition once.
template <typename Fn>
inline void for_each_partition(long n, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("for_each_partition: negative n");
  std::vector<long> parts;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      fn(const_cast<const std::vector<long>&>(parts));
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

// Brute-force (crank table, rank table) from explicit enumeration, with the
// crank row at n = 1 replaced by the generating-function convention
// (-1 at m = 0, +1 at m = +-1).
inline std::pair<BiSeries, BiSeries> enumerate_oracle(long n_max) {
  if (n_max < 0) throw std::invalid_argument("enumerate_oracle: negative n_max");
  BiSeries crank_t(n_max), rank_t(n_max);
  for (long n = 0; n <= n_max; ++n) {
    for_each_partition(n, [&](const std::vector<long>& parts) {
      crank_t.at(crank_of(parts), n) += 1;
      rank_t.at(rank_of(parts), n) += 1;
    });
  }
  if (n_max >= 1) {
    crank_t.at(-1, 1) = 1;
    crank_t.at(0, 1) = -1;
    crank_t.at(1, 1) = 1;
  }
  return {std::move(crank_t), std::move(rank_t)};
}

// Crank moment generating functions by the divisor-sum recurrence
//   C_{2k} = 2 sum_{j=1}^{k} C(2k-1,2j-1) Phi_{2j-1} C_{2k-2j},  C_0 = P.
// Returns C_0 .. C_{2k} as a vector indexed by the half-order.
inline std::vector<QSeries> crank_moment_series_all(long k, long order) {
  if (k < 0) throw std::invalid_argument("crank_moment_series_all: k must be >= 0");
  std::vector<QSeries> c;
  c.reserve(static_cast<size_t>(k) + 1);
  c.push_back(partition_series(order));
  std::vector<QSeries> phi;  // phi[j-1] = Phi_{2j-1}
  for (long j = 1; j <= k; ++j) phi.push_back(divisor_series(2 * j - 1, order));
  for (long kk = 1; kk <= k; ++kk) {
    QSeries acc(order);
    for (long j = 1; j <= kk; ++j) {
      Rational w(2 * binomial(2 * kk - 1, 2 * j - 1));
      acc = acc + w * (phi[static_cast<size_t>(j - 1)] * c[static_cast<size_t>(kk - j)]);
    }
    c.push_back(acc);
  }
  return c;
}

inline QSeries crank_moment_series(long k, long order) {
  return crank_moment_series_all(k, order).back();
}

// M_e(n) or N_e(n) = sum_m m^e c(m,n). Even e > 0 uses the row symmetry of
// the assembled tables; odd e is summed in full (and comes out zero).
inline MomentTable moment_from_table(const BiSeries& table, StatKind kind, long exponent) {
  if (exponent < 0) throw std::invalid_argument("moment_from_table: exponent must be >= 0");
  MomentTable t;
  t.kind = kind;
  t.exponent = exponent;
  t.order = table.order();
  t.provenance = Provenance::bivariate;
  t.values.reserve(static_cast<size_t>(t.order) + 1);
  for (long n = 0; n <= t.order; ++n) {
    if (exponent > 0 && exponent % 2 == 0) {
      Int acc(0);
      for (long m = 1; m <= n; ++m) {
        const Int& c = table.coeff(m, n);
        if (c == 0) continue;
        acc += c * pow_int(m, static_cast<unsigned long>(exponent));
      }
      t.values.push_back(2 * acc);
    } else {
      t.values.push_back(table.weighted_row_sum(n, exponent));
    }
  }
  return t;
}

inline QSeries to_qseries(const MomentTable& t) {
  QSeries s(t.order);
  for (long n = 0; n <= t.order; ++n) s.at(n) = Rational(t.values[static_cast<size_t>(n)]);
  return s;
}

// Total count of smallest parts over all partitions of n, by enumeration.
inline Int spt_by_enumeration(long n) {
  if (n < 1) throw std::invalid_argument("spt_by_enumeration: n must be >= 1");
  Int acc(0);
  for_each_partition(n, [&](const std::vector<long>& parts) {
    long smallest = parts.back();
    long mult = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == smallest; ++it) ++mult;
    acc += mult;
  });
  return acc;
}

// spt(n) = n p(n) - N_2(n)/2 from a prebuilt rank table.
inline std::vector<Int> spt_table(const BiSeries& rank_table) {
  MomentTable n2 = moment_from_table(rank_table, StatKind::rank, 2);
  auto p = partition_counts(rank_table.order());
  std::vector<Int> s(static_cast<size_t>(rank_table.order()) + 1);
  for (long n = 1; n <= rank_table.order(); ++n) {
    Int v = Int(n) * p[static_cast<size_t>(n)];
    Int half = n2.values[static_cast<size_t>(n)];
    if (mpz_odd_p(half.get_mpz_t())) throw std::logic_error("spt_table: odd N_2(n)");
    half /= 2;
    s[static_cast<size_t>(n)] = v - half;
  }
  return s;
}

inline Int spt(long n) {
  if (n < 1) throw std::invalid_argument("spt: n must be >= 1");
  return spt_table(rank_bivariate(n))[static_cast<size_t>(n)];
}

// Agreement of the identity route with direct enumeration, n <= min(T, 40).
inline bool spt_check(long order) {
  long cap = std::min<long>(order, 40);
  auto by_identity = spt_table(rank_bivariate(cap));
  for (long n = 1; n <= cap; ++n) {
    if (by_identity[static_cast<size_t>(n)] != spt_by_enumeration(n)) return false;
  }
  return true;
}

// D_{2k}(n) = M_{2k}(n) - N_{2k}(n) from prebuilt tables.
inline MomentTable diff_table(const BiSeries& crank_table, const BiSeries& rank_table, long k) {
  if (k < 1) throw std::invalid_argument("diff_table: k must be >= 1");
  long order = std::min(crank_table.order(), rank_table.order());
  MomentTable m = moment_from_table(crank_table, StatKind::crank, 2 * k);
  MomentTable n = moment_from_table(rank_table, StatKind::rank, 2 * k);
  MomentTable d;
  d.kind = StatKind::crank;
  d.exponent = 2 * k;
  d.order = order;
  d.provenance = Provenance::bivariate;
  d.values.reserve(static_cast<size_t>(order) + 1);
  for (long i = 0; i <= order; ++i) {
    d.values.push_back(m.values[static_cast<size_t>(i)] - n.values[static_cast<size_t>(i)]);
  }
  return d;
}

inline MomentTable diff_table(long k, long order) {
  return diff_table(crank_bivariate(order), rank_bivariate(order), k);
}

}  // namespace rankcrank
