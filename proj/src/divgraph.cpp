#include "cspec/divgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cspec {

std::string_view to_string(Convention convention) {
  return convention == Convention::vertices ? "vertices" : "edges";
}

Convention parse_convention(std::string_view text) {
  if (text == "vertices") return Convention::vertices;
  if (text == "edges") return Convention::edges;
  throw std::invalid_argument("unknown chain convention: " + std::string(text));
}

std::size_t chain_height(std::size_t vertices, Convention convention) {
  if (convention == Convention::vertices || vertices == 0) {
    return vertices;
  }
  return vertices - 1;
}

std::vector<std::size_t> longest_divisor_chain(std::span<const BigNat> sorted_unique) {
  const std::size_t count = sorted_unique.size();
  if (count == 0) {
    return {};
  }
  // Divisibility only points upward in value, so index order is topological.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(count, 1);
  std::vector<std::size_t> previous(count, none);
  std::size_t best_end = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const BigNat& target = sorted_unique[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (best[i] + 1 > best[j] && divides(sorted_unique[i], target)) {
        best[j] = best[i] + 1;
        previous[j] = i;
      }
    }
    if (best[j] > best[best_end]) {
      best_end = j;
    }
  }
  std::vector<std::size_t> chain;
  for (std::size_t at = best_end; at != none; at = previous[at]) {
    chain.push_back(at);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

ChainResult height(std::span<const BigNat> values, Convention convention) {
  std::vector<BigNat> sorted(values.begin(), values.end());
  for (const auto& value : sorted) {
    if (sgn(value) <= 0) {
      throw std::invalid_argument("divisibility graph vertices must be positive");
    }
  }
  auto less = [](const BigNat& a, const BigNat& b) { return cmp(a, b) < 0; };
  std::sort(sorted.begin(), sorted.end(), less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  ChainResult result;
  result.convention = convention;
  for (std::size_t index : longest_divisor_chain(sorted)) {
    result.witness.push_back(sorted[index]);
  }
  // Each proper multiple at least doubles, so a chain below M has at most
  // 1 + floor(log2 M) elements.
  if (!sorted.empty() && result.witness.size() > bit_length(sorted.back())) {
    throw std::logic_error("divisor chain of length " + std::to_string(result.witness.size()) +
                           " exceeds the doubling bound for max " + to_decimal(sorted.back()));
  }
  result.height = chain_height(result.witness.size(), convention);
  return result;
}

}  // namespace cspec
