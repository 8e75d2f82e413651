#include <catch2/catch_amalgamated.hpp>

#include "rankcrank/moments.hpp"

using namespace rankcrank;

TEST_CASE("crank and rank of explicit partitions") {
  CHECK(rank_of({3, 1}) == 1);
  CHECK(rank_of({2}) == 1);
  CHECK(rank_of({1, 1}) == -1);
  CHECK(crank_of({2, 1, 1}) == -2);
  CHECK(crank_of({4}) == 4);
  CHECK(crank_of({3, 1}) == 0);
  CHECK(crank_of({1}) == -1);
}

TEST_CASE("crank bivariate table") {
  BiSeries c = crank_bivariate(30);
  CHECK(c.is_symmetric());
  // anomalous row n = 1: x - 1 + 1/x
  CHECK(c.coeff(-1, 1) == 1);
  CHECK(c.coeff(0, 1) == -1);
  CHECK(c.coeff(1, 1) == 1);
  // n = 4: one crank each at m in {0, +-2, +-4}
  CHECK(c.coeff(0, 4) == 1);
  CHECK(c.coeff(2, 4) == 1);
  CHECK(c.coeff(4, 4) == 1);
  CHECK(c.coeff(1, 4) == 0);
  CHECK(c.coeff(3, 4) == 0);
  // row sums give p(n)
  auto p = partition_counts(30);
  for (long n = 0; n <= 30; ++n) CHECK(c.row_sum(n) == p[static_cast<size_t>(n)]);
}

TEST_CASE("rank bivariate table") {
  BiSeries r = rank_bivariate(30);
  CHECK(r.is_symmetric());
  // n = 2: ranks +-1
  CHECK(r.coeff(1, 2) == 1);
  CHECK(r.coeff(-1, 2) == 1);
  CHECK(r.coeff(0, 2) == 0);
  // n = 4: one rank each at m in {0, +-1, +-3}
  CHECK(r.coeff(0, 4) == 1);
  CHECK(r.coeff(1, 4) == 1);
  CHECK(r.coeff(3, 4) == 1);
  CHECK(r.coeff(2, 4) == 0);
  auto p = partition_counts(30);
  for (long n = 0; n <= 30; ++n) CHECK(r.row_sum(n) == p[static_cast<size_t>(n)]);
}

TEST_CASE("enumeration oracle matches the generating functions") {
  long n_max = 20;
  auto [oc, orr] = enumerate_oracle(n_max);
  BiSeries c = crank_bivariate(n_max);
  BiSeries r = rank_bivariate(n_max);
  CHECK(oc == c);
  CHECK(orr == r);
}

TEST_CASE("crank moment series by recurrence") {
  long T = 120;
  auto gf = crank_moment_series_all(4, T);
  CHECK(gf[0] == partition_series(T));
  CHECK(gf[1].coeff(4) == 40);  // M_2(4)
  CHECK(gf[2].coeff(3) == 162);  // M_4(3)
  CHECK(crank_moment_series(1, 10).coeff(4) == 40);

  // dual route: recurrence vs bivariate moments
  BiSeries table = crank_bivariate(T);
  for (long k = 0; k <= 4; ++k) {
    MomentTable m = moment_from_table(table, StatKind::crank, 2 * k);
    for (long n = 0; n <= T; ++n) {
      REQUIRE(gf[static_cast<size_t>(k)].coeff(n) == Rational(m.values[static_cast<size_t>(n)]));
    }
  }
}

TEST_CASE("moments from tables") {
  BiSeries r = rank_bivariate(80);
  BiSeries c = crank_bivariate(80);

  MomentTable n2 = moment_from_table(r, StatKind::rank, 2);
  MomentTable n4 = moment_from_table(r, StatKind::rank, 4);
  CHECK(n2.values[3] == 8);
  CHECK(n4.values[3] == 32);

  // odd moments vanish
  for (long e : {1L, 3L}) {
    MomentTable mo = moment_from_table(c, StatKind::crank, e);
    MomentTable no = moment_from_table(r, StatKind::rank, e);
    for (long n = 0; n <= 80; ++n) {
      CHECK(mo.values[static_cast<size_t>(n)] == 0);
      CHECK(no.values[static_cast<size_t>(n)] == 0);
    }
  }

  // M_0 = N_0 = p(n); M_2(n) = 2 n p(n)
  auto p = partition_counts(80);
  MomentTable m0 = moment_from_table(c, StatKind::crank, 0);
  MomentTable n0 = moment_from_table(r, StatKind::rank, 0);
  MomentTable m2 = moment_from_table(c, StatKind::crank, 2);
  for (long n = 0; n <= 80; ++n) {
    CHECK(m0.values[static_cast<size_t>(n)] == p[static_cast<size_t>(n)]);
    CHECK(n0.values[static_cast<size_t>(n)] == p[static_cast<size_t>(n)]);
    CHECK(m2.values[static_cast<size_t>(n)] == Int(2 * n) * p[static_cast<size_t>(n)]);
  }
  CHECK(m2.values[1] == 2);  // generating-function convention at n = 1
}

TEST_CASE("spt") {
  CHECK(spt_by_enumeration(3) == 5);
  CHECK(spt_by_enumeration(4) == 10);
  CHECK(spt(3) == 5);
  CHECK(spt(4) == 10);
  CHECK(spt_check(40));
}

TEST_CASE("moment differences") {
  BiSeries c = crank_bivariate(120);
  BiSeries r = rank_bivariate(120);
  MomentTable d2 = diff_table(c, r, 1);
  CHECK(d2.values[2] == 6);
  CHECK(d2.values[4] == 20);
  // D_2(n) = 2 spt(n)
  for (long n = 1; n <= 40; ++n) {
    CHECK(d2.values[static_cast<size_t>(n)] == Int(2) * spt_by_enumeration(n));
  }
  // Garvan inequality, small slice
  for (long k = 1; k <= 3; ++k) {
    MomentTable dk = diff_table(c, r, k);
    for (long n = 2; n <= 120; ++n) CHECK(dk.values[static_cast<size_t>(n)] > 0);
  }
  CHECK_THROWS_AS(diff_table(c, r, 0), std::invalid_argument);
}
