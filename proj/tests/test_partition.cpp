#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cspec/partition.hpp"
#include "oracle/brute_force.hpp"

using namespace cspec;

namespace {

std::vector<std::vector<unsigned>> collect(const PartitionStream& stream) {
  std::vector<std::vector<unsigned>> out;
  for (const CycleType& type : stream) out.push_back(type.parts());
  return out;
}

}  // namespace

TEST(PartitionTest, ZeroHasOnlyTheEmptyPartition) {
  auto all = collect(partitions(0));
  ASSERT_EQ(1u, all.size());
  EXPECT_TRUE(all[0].empty());
}

TEST(PartitionTest, FourInDecreasingLexOrder) {
  std::vector<std::vector<unsigned>> expected{
      {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(expected, collect(partitions(4)));
}

TEST(PartitionTest, TenHasFortyTwo) { EXPECT_EQ(42u, collect(partitions(10)).size()); }

TEST(PartitionTest, CountsMatchPentagonalRecurrence) {
  const auto p = oracle::partition_numbers(40);
  for (unsigned m = 0; m <= 40; ++m) {
    std::size_t count = 0;
    unsigned previous_support = m;
    for (const CycleType& type : partitions(m)) {
      ++count;
      previous_support = type.support();
      EXPECT_EQ(m, previous_support);
    }
    EXPECT_EQ(p[m], count) << "p(" << m << ")";
  }
}

TEST(PartitionTest, StreamIsStrictlyDecreasingAndDuplicateFree) {
  for (unsigned m = 1; m <= 20; ++m) {
    auto all = collect(partitions(m));
    for (std::size_t i = 1; i < all.size(); ++i) {
      EXPECT_TRUE(all[i - 1] > all[i]) << "m=" << m << " at " << i;
    }
  }
}

TEST(PartitionTest, FixedPointFreeExamples) {
  EXPECT_TRUE(collect(fixed_point_free_partitions(1)).empty());
  std::vector<std::vector<unsigned>> five{{5}, {3, 2}};
  EXPECT_EQ(five, collect(fixed_point_free_partitions(5)));
  std::vector<std::vector<unsigned>> four{{4}, {2, 2}};
  EXPECT_EQ(four, collect(fixed_point_free_partitions(4)));
  auto zero = collect(fixed_point_free_partitions(0));
  ASSERT_EQ(1u, zero.size());
  EXPECT_TRUE(zero[0].empty());
}

TEST(PartitionTest, FixedPointFreeIsFilterOfAll) {
  for (unsigned m = 0; m <= 30; ++m) {
    std::vector<std::vector<unsigned>> filtered;
    for (const auto& parts : collect(partitions(m))) {
      if (parts.empty() || parts.back() >= 2) filtered.push_back(parts);
    }
    EXPECT_EQ(filtered, collect(fixed_point_free_partitions(m))) << "m=" << m;
  }
}

TEST(CycleTypeTest, MultiplicityMapIsCanonical) {
  auto a = CycleType::from_parts({3, 1, 3, 2});
  auto b = CycleType::from_parts({2, 3, 1, 3});
  EXPECT_EQ(a, b);
  EXPECT_EQ(9u, a.support());
  EXPECT_EQ(4u, a.num_parts());
  EXPECT_EQ(2u, a.multiplicity(3));
  EXPECT_EQ(0u, a.multiplicity(5));
  EXPECT_EQ((std::vector<unsigned>{3, 3, 2, 1}), a.parts());
  EXPECT_EQ("(3,3,2,1)", a.to_string());
  EXPECT_EQ(CycleType::from_parts({3, 3, 2}), a.without_fixed_points());
}

TEST(CycleTypeTest, RejectsZeroPart) {
  EXPECT_THROW(CycleType::from_parts({2, 0}), std::invalid_argument);
  EXPECT_THROW(CycleType(CycleType::Multiplicities{{0, 1}}), std::invalid_argument);
}

TEST(CycleTypeTest, ZeroMultiplicityEntriesAreDropped) {
  CycleType type(CycleType::Multiplicities{{2, 0}, {3, 1}});
  EXPECT_EQ(CycleType::from_parts({3}), type);
}

TEST(ParityTest, Examples) {
  EXPECT_EQ(Parity::even, parity(CycleType{}));
  EXPECT_EQ(Parity::odd, parity(CycleType::from_parts({2})));
  EXPECT_EQ(Parity::odd, parity(CycleType::from_parts({3, 2})));
  EXPECT_EQ(Parity::even, parity(CycleType::from_parts({2, 2})));
  EXPECT_EQ(Parity::even, parity(CycleType::from_parts({5, 1, 1})));
}

TEST(ParityTest, AgreesWithInversionCountOnRealPermutations) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& perm : oracle::group_elements(n, false)) {
      auto type = CycleType::from_parts(oracle::cycle_lengths(perm));
      EXPECT_EQ(oracle::is_even(perm), parity(type) == Parity::even);
    }
  }
}

TEST(ParityTest, DisjointUnionIsXor) {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<unsigned> length(1, 9);
  std::uniform_int_distribution<unsigned> count(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<unsigned> left(count(rng)), right(count(rng));
    for (auto& part : left) part = length(rng);
    for (auto& part : right) part = length(rng);
    auto a = CycleType::from_parts(left);
    auto b = CycleType::from_parts(right);
    EXPECT_EQ(parity(a) ^ parity(b), parity(a.disjoint_union(b)));
    EXPECT_EQ(a.support() + b.support(), a.disjoint_union(b).support());
  }
}
