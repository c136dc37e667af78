#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cspec/primes.hpp"
#include "oracle/brute_force.hpp"

using namespace cspec;

TEST(SieveTest, SmallTable) {
  const PrimeTable table = sieve(10);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t k = 0; k <= 10; ++k) {
    if (table.is_prime(k)) primes.push_back(k);
  }
  EXPECT_EQ((std::vector<std::uint64_t>{2, 3, 5, 7}), primes);
  EXPECT_EQ(4u, table.pi(10));
  EXPECT_THROW(table.is_prime(11), std::out_of_range);
  EXPECT_THROW(table.pi(11), std::out_of_range);
}

TEST(SieveTest, DegenerateLimits) {
  EXPECT_EQ(0u, PrimeTable(0).pi(0));
  EXPECT_EQ(0u, PrimeTable(1).pi(1));
  EXPECT_EQ(1u, PrimeTable(2).pi(2));
  EXPECT_EQ(0u, count_primes(1));
}

TEST(SieveTest, KnownPrimeCounts) {
  const PrimeTable table(1'000'000);
  EXPECT_EQ(25u, table.pi(100));
  EXPECT_EQ(168u, table.pi(1000));
  EXPECT_EQ(1229u, table.pi(10'000));
  EXPECT_EQ(78498u, table.pi(1'000'000));
  EXPECT_EQ(78498u, count_primes(1'000'000));
  EXPECT_EQ(664579u, count_primes(10'000'000));
}

TEST(SieveTest, AgreesWithTrialDivision) {
  const PrimeTable table(30'000);
  std::uint64_t running = 0;
  for (std::uint64_t k = 0; k <= 30'000; ++k) {
    ASSERT_EQ(oracle::is_prime_trial(k), table.is_prime(k)) << k;
    running += oracle::is_prime_trial(k);
    ASSERT_EQ(running, table.pi(k)) << k;
  }
}

TEST(SieveTest, AgreesWithTrialDivisionAcrossSegmentBoundaries) {
  const std::uint64_t limit = 3 * PrimeTable::kSegmentSize + 777;
  const PrimeTable table(limit);
  for (std::uint64_t boundary : {PrimeTable::kSegmentSize, 2 * PrimeTable::kSegmentSize,
                                 3 * PrimeTable::kSegmentSize}) {
    for (std::uint64_t k = boundary - 500; k <= boundary + 500; ++k) {
      EXPECT_EQ(oracle::is_prime_trial(k), table.is_prime(k)) << k;
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, limit);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t k = pick(rng);
    EXPECT_EQ(oracle::is_prime_trial(k), table.is_prime(k)) << k;
  }
  EXPECT_EQ(count_primes(limit), table.pi(limit));
}

TEST(SieveTest, LargestPrimeAndRanges) {
  const PrimeTable table(100);
  EXPECT_EQ(97u, table.largest_prime_at_most(100));
  EXPECT_EQ(2u, table.largest_prime_at_most(2));
  EXPECT_FALSE(table.largest_prime_at_most(1).has_value());
  EXPECT_EQ((std::vector<std::uint64_t>{11, 13, 17, 19}), table.primes_between(10, 20));
  EXPECT_TRUE(table.primes_between(24, 28).empty());
}

TEST(OmegaSetTest, Examples) {
  const PrimeTable table(2000);
  EXPECT_EQ((std::vector<std::uint64_t>{7}), omega_set(table, 10).omega);
  const auto at23 = omega_set(table, 23);
  EXPECT_EQ((std::vector<std::uint64_t>{13, 17, 19, 23}), at23.omega);
  EXPECT_EQ(23u, at23.p);
  EXPECT_EQ(4u, at23.count);
  const auto at1360 = omega_set(table, 1360);
  EXPECT_EQ(1327u, at1360.p);
  EXPECT_EQ(94u, at1360.count);
  EXPECT_EQ(95u, omega_set(table, 1361).count);
  EXPECT_EQ((std::vector<std::uint64_t>{2, 3}), omega_set(3).omega);
}

TEST(OmegaSetTest, Errors) {
  const PrimeTable table(100);
  EXPECT_THROW(omega_set(table, 2), std::domain_error);
  EXPECT_THROW(omega_set(table, 101), std::out_of_range);
}

TEST(OmegaSetTest, CountIsPrimeCountDifferenceAndMaxIsLargestPrime) {
  const PrimeTable table(20'000);
  for (std::uint64_t n = 3; n <= 20'000; ++n) {
    const auto data = omega_set(table, n);
    ASSERT_EQ(table.pi(n) - table.pi(n / 2), data.count) << n;
    ASSERT_GE(data.count, 1u) << n;  // Bertrand
    ASSERT_EQ(table.largest_prime_at_most(n), data.p) << n;
    for (std::uint64_t t : data.omega) {
      ASSERT_TRUE(2 * t > n && t <= n && oracle::is_prime_trial(t)) << n << " " << t;
    }
  }
}

TEST(FactorialRatioTest, Examples) {
  EXPECT_EQ(1, factorial_ratio(5, 5));
  EXPECT_EQ(20, factorial_ratio(5, 3));
  EXPECT_EQ(1362, factorial_ratio(1362, 1361));
  EXPECT_EQ(1, factorial_ratio(0, 0));
  EXPECT_THROW(factorial_ratio(3, 5), std::domain_error);
}

TEST(FactorialRatioTest, TimesPFactorialIsNFactorial) {
  for (std::uint64_t n = 0; n <= 2000; n += 37) {
    for (std::uint64_t p = 0; p <= n; p += 13) {
      ASSERT_EQ(factorial(n), factorial_ratio(n, p) * factorial(p)) << n << " " << p;
    }
  }
}

TEST(BoundReportTest, UpperInequalityFailsAtOneHundred) {
  const PrimeTable table(100);
  const auto report = bound_report(table, 100);
  EXPECT_EQ(25u, report.pi_exact);
  EXPECT_NEAR(19.99926, report.lower, 1e-4);
  EXPECT_NEAR(24.01654, report.upper, 1e-4);
  EXPECT_TRUE(report.lower_holds);
  EXPECT_FALSE(report.upper_holds);
  EXPECT_EQ(97u, report.largest_prime);
  EXPECT_EQ(3u, report.gap);
}

TEST(BoundReportTest, JustAboveTen) {
  const PrimeTable table(11);
  const auto report = bound_report(table, 11);
  EXPECT_EQ(5u, report.pi_exact);
  EXPECT_NEAR(0.921 * 11 / std::log(11.0), report.lower, 1e-12);
  EXPECT_TRUE(report.lower_holds);
  EXPECT_THROW(bound_report(table, 10), std::domain_error);
}

TEST(BoundReportTest, GapAt1360) {
  const PrimeTable table(1360);
  const auto report = bound_report(table, 1360);
  EXPECT_EQ(1327u, report.largest_prime);
  EXPECT_EQ(33u, report.gap);
  EXPECT_NEAR(std::pow(1360.0, 0.525), report.gap_limit, 1e-9);
  EXPECT_NEAR(44.17, report.gap_limit, 0.01);
  EXPECT_TRUE(report.gap_bound_holds);
}

TEST(BoundReportTest, LowerInequalityHoldsUpToOneHundredThousand) {
  const PrimeTable table(100'000);
  for (std::uint64_t x = 11; x <= 100'000; ++x) {
    ASSERT_TRUE(bound_report(table, x).lower_holds) << x;
  }
}
