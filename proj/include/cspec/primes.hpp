#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cspec/bignat.hpp"

namespace cspec {

// Primality of every integer in [0, limit], built by a segmented sieve and
// immutable afterwards. Storage is one bit per integer plus a rank index, so
// pi(x) is O(1).
class PrimeTable {
 public:
  static constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 20;

  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  // Throws std::out_of_range beyond limit().
  bool is_prime(std::uint64_t k) const;

  // Number of primes <= x.
  std::uint64_t pi(std::uint64_t x) const;

  std::optional<std::uint64_t> largest_prime_at_most(std::uint64_t x) const;

  // Primes in [lo, hi], ascending.
  std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) const;

 private:
  void check(std::uint64_t k) const;

  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> rank_;  // primes strictly before word w
};

PrimeTable sieve(std::uint64_t limit);

// Counts primes <= limit with a segmented sieve in O(sqrt(limit) + segment) memory.
std::uint64_t count_primes(std::uint64_t limit);

// Primes t with n/2 < t <= n, and p = max of them.
struct OmegaData {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> omega;
  std::uint64_t p = 0;
  std::uint64_t count = 0;
};

// Throws std::domain_error for n < 3 and std::out_of_range if n > table.limit().
OmegaData omega_set(const PrimeTable& table, std::uint64_t n);
OmegaData omega_set(std::uint64_t n);

// Pointwise check of the Chebyshev-type constants 0.921 and 1.106 at x, and
// of the prime gap bound n - p < n^0.525 with n = x. Diagnostic only.
struct BoundReport {
  std::uint64_t x = 0;
  std::uint64_t pi_exact = 0;
  double lower = 0.0;
  double upper = 0.0;
  bool lower_holds = false;
  bool upper_holds = false;
  std::uint64_t largest_prime = 0;
  std::uint64_t gap = 0;
  double gap_limit = 0.0;
  bool gap_bound_holds = false;
};

inline constexpr double kChebyshevLower = 0.921;
inline constexpr double kChebyshevUpper = 1.106;
inline constexpr double kGapExponent = 0.525;
inline constexpr double kBoundMargin = 1e-9;

// Requires x > 10; throws std::domain_error otherwise.
BoundReport bound_report(const PrimeTable& table, std::uint64_t x);

// n!/p! exactly. Throws std::domain_error if p > n.
BigNat factorial_ratio(std::uint64_t n, std::uint64_t p);

}  // namespace cspec
