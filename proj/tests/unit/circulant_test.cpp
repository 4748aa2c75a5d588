#include <gtest/gtest.h>

#include <random>

#include "rcsim/circulant.hpp"
#include "rcsim/robustness.hpp"

namespace rcsim {
namespace {

TEST(CirculantTest, OneCirculantIsDirectedCycle) {
  const auto d = make_k_circulant(4, 1);
  EXPECT_EQ(d.edge_count(), 4U);
  EXPECT_TRUE(d.has_edge(1, 2));
  EXPECT_TRUE(d.has_edge(4, 1));
  EXPECT_EQ(d.in_neighbors(1), (AgentSet{4}));
}

TEST(CirculantTest, InNeighborsWrapAround) { EXPECT_EQ(make_k_circulant(5, 3).in_neighbors(1), (AgentSet{3, 4, 5})); }

TEST(CirculantTest, EveryNodeHasDegreeK) {
  for (int n = 3; n <= 30; ++n) {
    for (int k = 1; k < n - 1; ++k) {
      const auto d = make_k_circulant(n, k);
      for (AgentId i = 1; i <= n; ++i) {
        ASSERT_EQ(d.in_neighbors(i).size(), static_cast<std::size_t>(k));
        ASSERT_EQ(d.out_neighbors(i).size(), static_cast<std::size_t>(k));
      }
    }
  }
}

TEST(CirculantTest, FifteenAgentSevenCirculantOutDegree) {
  const auto d = make_k_circulant(15, 7);
  for (AgentId i = 1; i <= 15; ++i) EXPECT_EQ(d.out_neighbors(i).size(), 7U);
}

TEST(CirculantTest, ParameterBounds) {
  EXPECT_THROW(make_k_circulant(1, 1), DomainError);
  EXPECT_THROW(make_k_circulant(5, 0), DomainError);
  EXPECT_THROW(make_k_circulant(5, 4), DomainError);
  EXPECT_NO_THROW(make_k_circulant(5, 3));
}

TEST(PartitionTest, ConsecutiveSplitPutsLargerClassesFirst) {
  EXPECT_EQ(consecutive_partition(7, 3), (OffsetPartition{{1, 2, 3}, {4, 5}, {6, 7}}));
  EXPECT_EQ(consecutive_partition(1, 1), (OffsetPartition{{1}}));
}

TEST(PartitionTest, ValidationCatchesGapsAndOverlaps) {
  EXPECT_THROW(validate_partition({{1, 2, 3}, {4, 5}, {6}}, 7), DomainError);
  EXPECT_THROW(validate_partition({{1, 2, 3}, {3, 4, 5}, {6, 7}}, 7), DomainError);
  EXPECT_THROW(validate_partition({{1, 2}, {}, {3}}, 3), DomainError);
  EXPECT_THROW(validate_partition({{1, 8}}, 7), DomainError);
  EXPECT_NO_THROW(validate_partition({{7, 1}, {2, 3, 4, 5, 6}}, 7));
}

TEST(PartitionTest, ScheduleUnionIsKCirculant) {
  const auto s = make_partitioned_circulant_schedule(15, 7, {{1, 2, 3}, {4, 5}, {6, 7}}, 4);
  Digraph u = s.graphs()[0];
  for (const auto& g : s.graphs()) u.merge(g);
  EXPECT_EQ(u, make_k_circulant(15, 7));
  EXPECT_EQ(s.graphs().size(), 3U);
}

TEST(PartitionTest, SingleClassCycleSchedule) {
  const auto s = make_partitioned_circulant_schedule(4, 1, {{1}}, 2);
  EXPECT_EQ(s.graphs().size(), 1U);
  EXPECT_EQ(s.active(7), make_k_circulant(4, 1));
}

TEST(WitnessTest, LeaderBlockFourToEight) {
  const auto w = k_circulant_witness(15, 7, {4, 5, 6, 7, 8}, 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (ConsecutiveBlock{4, 5}));
  EXPECT_EQ(w->members(15), (AgentSet{4, 5, 6, 7, 8}));
}

TEST(WitnessTest, ZeroRequiresAnySingleton) {
  const auto w = k_circulant_witness(9, 3, {7}, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (ConsecutiveBlock{1, 1}));
}

TEST(WitnessTest, TooShortBlocksGiveNothing) {
  EXPECT_FALSE(k_circulant_witness(15, 3, {4, 5, 6, 7, 8}, 5).has_value());
}

TEST(WitnessTest, WrapsAroundTheRing) {
  const auto w = k_circulant_witness(10, 4, {9, 10, 1}, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->members(10), (AgentSet{9, 10, 1}));
}

TEST(WitnessTest, WitnessImpliesStrongRobustness) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> size(4, 30);
  int confirmed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = size(rng);
    const int k = std::uniform_int_distribution<int>(1, n - 2)(rng);
    AgentSet leaders;
    const int count = std::uniform_int_distribution<int>(1, n)(rng);
    for (int c = 0; c < count; ++c) leaders.insert(std::uniform_int_distribution<int>(1, n)(rng));
    const int r = std::uniform_int_distribution<int>(0, k)(rng);
    if (auto w = k_circulant_witness(n, k, leaders, r)) {
      EXPECT_LE(w->length, k);
      int hits = 0;
      for (AgentId i : w->members(n)) hits += leaders.contains(i) ? 1 : 0;
      EXPECT_GE(hits, r);
      EXPECT_TRUE(is_strongly_r_robust_wrt(make_k_circulant(n, k), leaders, r))
          << "n=" << n << " k=" << k << " r=" << r;
      ++confirmed;
    }
  }
  EXPECT_GT(confirmed, 50);
}

}  // namespace
}  // namespace rcsim
