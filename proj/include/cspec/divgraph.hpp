#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cspec/bignat.hpp"

namespace cspec {

// How a chain's length is counted: by its elements or by its edges.
enum class Convention { vertices, edges };

std::string_view to_string(Convention convention);
Convention parse_convention(std::string_view text);

struct ChainResult {
  std::size_t height = 0;
  std::vector<BigNat> witness;  // strictly increasing, each element divides the next
  Convention convention = Convention::vertices;
};

// Longest chain a_1 | a_2 | ... | a_k in a strictly increasing sequence of
// positive integers. Returns the indices of one such chain. Ties are broken
// towards smaller indices, so the result is a function of the input alone.
std::vector<std::size_t> longest_divisor_chain(std::span<const BigNat> sorted_unique);

// h(Theta) for the divisibility digraph on `values` (duplicates ignored,
// self-loops excluded). Throws std::invalid_argument on a zero element, and
// std::logic_error if the chain ever beats 1 + floor(log2 max), which no
// correct chain can.
ChainResult height(std::span<const BigNat> values, Convention convention = Convention::vertices);

// Converts a chain's element count to the requested convention.
std::size_t chain_height(std::size_t vertices, Convention convention);

}  // namespace cspec
