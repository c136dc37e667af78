#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cspec {

// Exact natural numbers. Every class size, group order and factorial ratio
// in the library is one of these; nothing in the class-size path touches
// floating point.
using BigNat = mpz_class;

BigNat factorial(std::uint64_t n);

// n * (n-1) * ... * (n-k+1); 1 when k == 0.
BigNat falling_factorial(std::uint64_t n, std::uint64_t k);

std::string to_decimal(const BigNat& value);
BigNat from_decimal(std::string_view text);

// Number of significant bits; 0 for zero.
std::size_t bit_length(const BigNat& value);

inline bool divides(const BigNat& divisor, const BigNat& value) {
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

}  // namespace cspec
