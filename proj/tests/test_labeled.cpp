#include <gtest/gtest.h>

#include "hedonic/catalog.hpp"
#include "hedonic/generators.hpp"
#include "hedonic/labeled.hpp"
#include "hedonic/oracle.hpp"

using namespace hedonic;

TEST(Labeled, FirstBuildCarriesTheMover) {
  auto p = PreferenceProfile::additive(gen::path_graph(2), {{0, 1}, {0, 0}});
  auto run = run_tree_dynamics_labeled(p, Partition::singletons(2), FirstScheduler{});
  ASSERT_EQ(run.outcome.steps, 1);
  EXPECT_FALSE(run.labels[0][0].has_value());
  EXPECT_EQ(run.labels[1][0], 0);
  EXPECT_EQ(run.steps[0].beta, 1);
}

TEST(Labeled, RejectsNonTreesAndNonLAS) {
  Instance tri = make_cycle3();
  EXPECT_THROW(run_tree_dynamics_labeled(tri.profile, tri.initial, FirstScheduler{}), Error);
  Instance mono = make_tree_monotone();
  EXPECT_THROW(run_tree_dynamics_labeled(mono.profile, mono.initial, FirstScheduler{}), Error);
  auto ranked = PreferenceProfile::ranked(gen::path_graph(2), {PlayerTiers{}, PlayerTiers{}});
  EXPECT_THROW(run_tree_dynamics_labeled(ranked, Partition::singletons(2), FirstScheduler{}), Error);
}

TEST(Labeled, SameTrajectoryAsPlainDynamics) {
  gen::Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    Graph g = gen::random_tree(3 + k % 6, rng);
    auto p = gen::random_las(g, rng);
    const Scheduler s = k % 2 ? Scheduler{RandomScheduler{static_cast<std::uint64_t>(k)}} : Scheduler{FirstScheduler{}};
    auto labeled = run_tree_dynamics_labeled(p, Partition::singletons(g.n()), s);
    auto plain = run_dynamics(p, Partition::singletons(g.n()), s);
    ASSERT_EQ(labeled.outcome.states, plain.states);
    ASSERT_EQ(labeled.labels.size(), labeled.outcome.states.size());
  }
}

TEST(Labeled, ClaimsHoldAtEveryStep) {
  gen::Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    Graph g = gen::random_tree(3 + k % 6, rng);
    auto p = gen::random_las(g, rng, 3);
    auto all = enumerate_feasible_partitions(g);
    const Partition& start = all[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(all.size()) - 1))];
    auto run = run_tree_dynamics_labeled(p, start, RandomScheduler{static_cast<std::uint64_t>(k)});
    const auto& states = run.outcome.states;
    for (std::size_t t = 0; t < states.size(); ++t) {
      ASSERT_TRUE(labels_have_unique_own_edge(g, states[t], run.labels[t]));
      if (t + 1 < states.size()) {
        ASSERT_TRUE(labeled_step_utilities_consistent(p, states[t], states[t + 1], run.labels[t], run.steps[t]));
      }
    }
  }
}

TEST(Labeled, BreakCountsAreRecorded) {
  Instance inst = make_tree_exponential(2);
  auto run = run_tree_dynamics_labeled(inst.profile, inst.initial, ScriptedScheduler{inst.script});
  const auto& breaks = run.outcome.per_player_breaks;
  ASSERT_EQ(breaks.size(), static_cast<std::size_t>(inst.graph().n()));
  // x1 leaves y1 each time it moves on to x2, and y1 never moved: labels on (x1,y1) are x1's own.
  EXPECT_EQ(breaks[exponential_x(1)][exponential_y(2, 1)], 0);
  int total = 0;
  for (const auto& row : breaks)
    for (int c : row) total += c;
  EXPECT_GT(total, 0);
}
