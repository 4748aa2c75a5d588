#include <gtest/gtest.h>

#include <random>

#include "random_graphs.hpp"
#include "rcsim/circulant.hpp"
#include "rcsim/robustness.hpp"

namespace rcsim {
namespace {

AgentSet range(AgentId a, AgentId b) {
  AgentSet s;
  for (AgentId i = a; i <= b; ++i) s.insert(i);
  return s;
}

TEST(ReachabilityTest, ZeroIsAlwaysReachable) {
  Digraph d(4);
  EXPECT_TRUE(is_r_reachable(d, {2}, 0));
  EXPECT_TRUE(is_r_reachable(d, {1, 2, 3, 4}, 0));
}

TEST(ReachabilityTest, WholeVertexSetIsNotOneReachable) {
  EXPECT_FALSE(is_r_reachable(make_k_circulant(6, 3), range(1, 6), 1));
}

TEST(ReachabilityTest, SevenCirculantPrefixBlock) {
  // Agent 3 hears {11..15, 1, 2}; five of those lie outside {1, 2, 3}.
  const auto d = make_k_circulant(15, 7);
  EXPECT_TRUE(is_r_reachable(d, {1, 2, 3}, 5));
  EXPECT_TRUE(is_r_reachable(d, {3}, 7));
  EXPECT_FALSE(is_r_reachable(d, {3}, 8));
}

TEST(ReachabilityTest, EmptySetIsDomainError) { EXPECT_THROW(is_r_reachable(Digraph(3), {}, 1), DomainError); }

TEST(StrongRobustnessTest, FullSourceIsAlwaysRobust) {
  const auto d = Digraph(5);
  for (int r = 0; r <= 6; ++r) {
    EXPECT_TRUE(is_strongly_r_robust_wrt(d, range(1, 5), r));
    EXPECT_TRUE(brute_force_strong_robustness(d, range(1, 5), r));
  }
}

TEST(StrongRobustnessTest, SevenCirculantLeaderBlock) {
  EXPECT_TRUE(is_strongly_r_robust_wrt(make_k_circulant(15, 7), range(4, 8), 5));
  EXPECT_FALSE(is_strongly_r_robust_wrt(make_k_circulant(15, 7), range(4, 8), 6));
}

TEST(StrongRobustnessTest, ThreeCycleByHand) {
  // C in {{2}, {3}, {2,3}}: each has a member with one outside in-neighbor,
  // but in {2,3} neither member has two.
  const auto d = make_k_circulant(3, 1);
  EXPECT_TRUE(brute_force_strong_robustness(d, {1}, 1));
  EXPECT_FALSE(brute_force_strong_robustness(d, {1}, 2));
  EXPECT_TRUE(is_strongly_r_robust_wrt(d, {1}, 1));
  EXPECT_FALSE(is_strongly_r_robust_wrt(d, {1}, 2));
}

TEST(StrongRobustnessTest, ErrorsAndGuards) {
  EXPECT_THROW(is_strongly_r_robust_wrt(Digraph(3), {}, 1), DomainError);
  EXPECT_THROW(is_strongly_r_robust_wrt(Digraph(3), {4}, 1), DomainError);
  EXPECT_THROW(brute_force_strong_robustness(Digraph(21), {1}, 1), DomainError);
  EXPECT_NO_THROW(brute_force_strong_robustness(Digraph(12), {1}, 1));
}

TEST(StrongRobustnessTest, PropagationMatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(2, 6);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = size(rng);
    const auto d = testing::random_digraph(rng, n, density(rng));
    const auto s = testing::random_nonempty_subset(rng, n);
    for (int r = 0; r <= n; ++r) {
      ASSERT_EQ(is_strongly_r_robust_wrt(d, s, r), brute_force_strong_robustness(d, s, r))
          << "n=" << n << " r=" << r << " trial=" << trial;
    }
  }
}

TEST(StrongRobustnessTest, AddingEdgesNeverBreaksRobustness) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> size(2, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng);
    const auto sub = testing::random_digraph(rng, n, 0.3);
    auto super = testing::random_digraph(rng, n, 0.3);
    super.merge(sub);
    const auto s = testing::random_nonempty_subset(rng, n);
    for (int r = 0; r <= n; ++r) {
      if (is_strongly_r_robust_wrt(sub, s, r)) {
        EXPECT_TRUE(is_strongly_r_robust_wrt(super, s, r));
      }
    }
  }
}

TEST(TimeVaryingRobustnessTest, PartitionedScheduleFifteenAgents) {
  auto s = make_partitioned_circulant_schedule(15, 7, {{1, 2, 3}, {4, 5}, {6, 7}}, 4, 0);
  EXPECT_TRUE(is_strongly_Tt0r_robust_wrt({s, 12}, range(4, 8), 5, 100));
  // A window shorter than the period misses offsets at some steps.
  EXPECT_FALSE(is_strongly_Tt0r_robust_wrt({s, 4}, range(4, 8), 5, 100));
}

TEST(TimeVaryingRobustnessTest, PartitionedScheduleThirtyAgents) {
  auto s = make_partitioned_circulant_schedule(30, 7, {{1, 2, 3}, {4, 5}, {6, 7}}, 10, 0);
  EXPECT_TRUE(is_strongly_Tt0r_robust_wrt({s, 30}, range(1, 7), 7, 200));
  EXPECT_FALSE(is_strongly_Tt0r_robust_wrt({s, 30}, range(1, 7), 8, 200));
}

TEST(TimeVaryingRobustnessTest, ZeroWindowConstantScheduleReducesToStatic) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_digraph(rng, 6, 0.4);
    const auto s = testing::random_nonempty_subset(rng, 6);
    GraphSchedule sched({d}, 3, 2);
    for (int r = 0; r <= 6; ++r) {
      EXPECT_EQ(is_strongly_Tt0r_robust_wrt({sched, 0}, s, r, 2), is_strongly_r_robust_wrt(d, s, r));
    }
  }
}

TEST(TimeVaryingRobustnessTest, PeriodicShortcutMatchesLongHorizon) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Digraph> gs;
    for (int k = 0; k < 3; ++k) gs.push_back(testing::random_digraph(rng, 6, 0.35));
    GraphSchedule sched(gs, 2, 0);
    const auto s = testing::random_nonempty_subset(rng, 6);
    const WindowedUnion wu{sched, 3};
    for (int r = 1; r <= 3; ++r) {
      bool every = true;
      for (Step t = 3; t <= 60; ++t) every = every && is_strongly_r_robust_wrt(union_digraph(wu, t), s, r);
      EXPECT_EQ(is_strongly_Tt0r_robust_wrt(wu, s, r, 60), every);
    }
  }
}

TEST(TimeVaryingRobustnessTest, HorizonBeforeFirstCheckIsDomainError) {
  GraphSchedule s({make_k_circulant(5, 2)}, 1, 0);
  EXPECT_THROW(is_strongly_Tt0r_robust_wrt({s, 4}, {1}, 1, 3), DomainError);
}

TEST(FLocalTest, EmptySetIsLocal) {
  GraphSchedule s({make_k_circulant(6, 4)}, 1);
  EXPECT_TRUE(is_F_local(s, {}, 0, 0, 10));
}

TEST(FLocalTest, SevenCirculantPairOfAdversaries) {
  // Agent 11 hears {4..10}, which contains both 9 and 10.
  GraphSchedule s({make_k_circulant(15, 7)}, 1);
  EXPECT_TRUE(is_F_local(s, {9, 10}, 2, 0, 10));
  EXPECT_FALSE(is_F_local(s, {9, 10}, 1, 0, 10));
}

TEST(FLocalTest, OnlyGraphsActiveInRangeCount) {
  Digraph quiet(4);
  Digraph loud(4);
  loud.add_edge(1, 3);
  loud.add_edge(2, 3);
  GraphSchedule s({quiet, loud}, 5, 0);
  EXPECT_TRUE(is_F_local(s, {1, 2}, 1, 0, 4));
  EXPECT_FALSE(is_F_local(s, {1, 2}, 1, 0, 5));
  EXPECT_THROW(is_F_local(s, {1, 2}, 1, 3, 2), DomainError);
}

}  // namespace
}  // namespace rcsim
