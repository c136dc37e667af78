#include <vector>

#include <gtest/gtest.h>

#include "cspec/divgraph.hpp"
#include "support/divgraph_properties.hpp"

using namespace cspec;

namespace {

constexpr std::uint64_t kSeed = 0x5eed;
constexpr std::size_t kCases = 1000;

std::vector<BigNat> big(std::vector<unsigned long> values) {
  return {values.begin(), values.end()};
}

void expect_suite(const properties::SuiteResult& result) {
  EXPECT_GE(result.cases, kCases);
  EXPECT_EQ(0u, result.failures) << result.name << ": " << result.first_failure;
}

}  // namespace

TEST(DivgraphTest, PowersOfTwo) {
  const auto values = big({2, 4, 8, 16});
  auto chain = height(values);
  EXPECT_EQ(4u, chain.height);
  EXPECT_EQ(values, chain.witness);
  EXPECT_EQ(3u, height(values, Convention::edges).height);
}

TEST(DivgraphTest, Antichain) {
  EXPECT_EQ(1u, height(big({3, 5, 7})).height);
  EXPECT_EQ(0u, height(big({3, 5, 7}), Convention::edges).height);
}

TEST(DivgraphTest, OneDividesEverything) {
  EXPECT_EQ(3u, height(big({6, 1, 3})).height);
  EXPECT_EQ(big({1, 3, 6}), height(big({6, 1, 3})).witness);
}

TEST(DivgraphTest, EmptySetHasHeightZero) {
  EXPECT_EQ(0u, height({}).height);
  EXPECT_EQ(0u, height({}, Convention::edges).height);
}

TEST(DivgraphTest, DuplicatesAreIgnored) {
  EXPECT_EQ(2u, height(big({4, 2, 4, 2})).height);
}

TEST(DivgraphTest, TiesPreferSmallerIndices) {
  // Both 2|6 and 3|6 give length two; the earlier element wins.
  EXPECT_EQ(big({2, 6}), height(big({2, 3, 6})).witness);
}

TEST(DivgraphTest, RejectsZero) {
  EXPECT_THROW(height(big({0, 3})), std::invalid_argument);
}

TEST(DivgraphTest, ConventionNames) {
  EXPECT_EQ(Convention::edges, parse_convention("edges"));
  EXPECT_EQ("vertices", to_string(Convention::vertices));
  EXPECT_THROW(parse_convention("arcs"), std::invalid_argument);
  EXPECT_EQ(0u, chain_height(0, Convention::edges));
  EXPECT_EQ(4u, chain_height(5, Convention::edges));
}

TEST(DivgraphTest, HugeValues) {
  std::vector<BigNat> values;
  BigNat value = 1;
  for (int i = 0; i < 200; ++i) {
    value *= 3;
    values.push_back(value);
  }
  values.push_back(value + 1);
  EXPECT_EQ(200u, height(values).height);
}

TEST(DivgraphPropertyTest, DoublingBound) { expect_suite(properties::doubling_bound(kSeed, kCases)); }

TEST(DivgraphPropertyTest, ScalingInvariance) {
  expect_suite(properties::scaling_invariance(kSeed + 1, kCases));
}

TEST(DivgraphPropertyTest, Monotonicity) { expect_suite(properties::monotonicity(kSeed + 2, kCases)); }

TEST(DivgraphPropertyTest, BruteForceEquality) {
  expect_suite(properties::brute_force_equality(kSeed + 3, kCases));
}
