#include "cspec/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cspec {

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Plain sieve for the base primes up to sqrt(limit).
std::vector<std::uint32_t> base_primes(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t k = 2; k <= bound; ++k) {
    if (composite[k]) continue;
    primes.push_back(static_cast<std::uint32_t>(k));
    for (std::uint64_t j = k * k; j <= bound; j += k) composite[j] = true;
  }
  return primes;
}

// Calls visit(lo, flags) for consecutive windows covering [0, limit]; flags[i]
// is nonzero iff lo + i is prime.
template <typename Visit>
void segmented_sieve(std::uint64_t limit, Visit&& visit) {
  const auto primes = base_primes(isqrt(limit));
  std::vector<std::uint8_t> flags;
  for (std::uint64_t lo = 0; lo <= limit; lo += PrimeTable::kSegmentSize) {
    std::uint64_t hi = std::min(limit, lo + PrimeTable::kSegmentSize - 1);
    flags.assign(hi - lo + 1, 1);
    for (std::uint64_t k = lo; k < std::min<std::uint64_t>(2, hi + 1); ++k) flags[k - lo] = 0;
    for (std::uint64_t prime : primes) {
      if (prime * prime > hi) break;
      std::uint64_t start = std::max(prime * prime, (lo + prime - 1) / prime * prime);
      for (std::uint64_t j = start; j <= hi; j += prime) flags[j - lo] = 0;
    }
    visit(lo, flags);
    if (hi == limit) break;
  }
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  const std::size_t words = limit / 64 + 1;
  bits_.assign(words, 0);
  segmented_sieve(limit, [this](std::uint64_t lo, const std::vector<std::uint8_t>& flags) {
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (flags[i]) {
        std::uint64_t k = lo + i;
        bits_[k / 64] |= std::uint64_t{1} << (k % 64);
      }
    }
  });
  rank_.resize(words);
  std::uint64_t running = 0;
  for (std::size_t w = 0; w < words; ++w) {
    rank_[w] = running;
    running += static_cast<std::uint64_t>(std::popcount(bits_[w]));
  }
}

void PrimeTable::check(std::uint64_t k) const {
  if (k > limit_) {
    throw std::out_of_range("prime table covers [0, " + std::to_string(limit_) + "], asked " +
                            std::to_string(k));
  }
}

bool PrimeTable::is_prime(std::uint64_t k) const {
  check(k);
  return (bits_[k / 64] >> (k % 64)) & 1;
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
  check(x);
  std::uint64_t word = bits_[x / 64];
  unsigned keep = static_cast<unsigned>(x % 64) + 1;
  if (keep < 64) word &= (std::uint64_t{1} << keep) - 1;
  return rank_[x / 64] + static_cast<std::uint64_t>(std::popcount(word));
}

std::optional<std::uint64_t> PrimeTable::largest_prime_at_most(std::uint64_t x) const {
  check(x);
  for (std::uint64_t k = x + 1; k-- > 2;) {
    if (is_prime(k)) return k;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> PrimeTable::primes_between(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  if (lo > hi) return out;
  check(hi);
  for (std::uint64_t k = lo; k <= hi; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

PrimeTable sieve(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t count_primes(std::uint64_t limit) {
  std::uint64_t total = 0;
  segmented_sieve(limit, [&total](std::uint64_t, const std::vector<std::uint8_t>& flags) {
    total += static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), 1));
  });
  return total;
}

OmegaData omega_set(const PrimeTable& table, std::uint64_t n) {
  if (n < 3) {
    throw std::domain_error("omega_set requires n >= 3, got " + std::to_string(n));
  }
  OmegaData data;
  data.n = n;
  data.omega = table.primes_between(n / 2 + 1, n);
  data.count = data.omega.size();
  data.p = data.omega.empty() ? 0 : data.omega.back();
  return data;
}

OmegaData omega_set(std::uint64_t n) { return omega_set(PrimeTable(std::max<std::uint64_t>(n, 2)), n); }

BoundReport bound_report(const PrimeTable& table, std::uint64_t x) {
  if (x <= 10) {
    throw std::domain_error("bound_report requires x > 10, got " + std::to_string(x));
  }
  BoundReport report;
  report.x = x;
  report.pi_exact = table.pi(x);
  const double scale = static_cast<double>(x) / std::log(static_cast<double>(x));
  report.lower = kChebyshevLower * scale;
  report.upper = kChebyshevUpper * scale;
  const auto pi = static_cast<double>(report.pi_exact);
  report.lower_holds = pi > report.lower * (1.0 + kBoundMargin);
  report.upper_holds = pi < report.upper * (1.0 - kBoundMargin);

  report.largest_prime = table.largest_prime_at_most(x).value_or(0);
  report.gap = x - report.largest_prime;
  report.gap_limit = std::pow(static_cast<double>(x), kGapExponent);
  report.gap_bound_holds = static_cast<double>(report.gap) < report.gap_limit * (1.0 - kBoundMargin);
  return report;
}

BigNat factorial_ratio(std::uint64_t n, std::uint64_t p) {
  if (p > n) {
    throw std::domain_error("factorial_ratio requires p <= n (n=" + std::to_string(n) +
                            ", p=" + std::to_string(p) + ")");
  }
  return falling_factorial(n, n - p);
}

}  // namespace cspec
