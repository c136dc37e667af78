#include "cspec/bignat.hpp"

#include <stdexcept>

namespace cspec {

BigNat factorial(std::uint64_t n) {
  BigNat result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigNat falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  BigNat result = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    result *= static_cast<unsigned long>(n - j);
  }
  return result;
}

std::string to_decimal(const BigNat& value) { return value.get_str(10); }

BigNat from_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty decimal literal");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal natural: " + std::string(text));
    }
  }
  return BigNat(std::string(text), 10);
}

std::size_t bit_length(const BigNat& value) {
  if (sgn(value) == 0) {
    return 0;
  }
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace cspec
