#include <gtest/gtest.h>

#include "hedonic/catalog.hpp"
#include "hedonic/graph.hpp"

using namespace hedonic;

TEST(Catalog, EveryInstanceReproduces) {
  for (const auto& name : catalog_names()) {
    const auto report = reproduce(build_example(name));
    EXPECT_TRUE(report.ok) << name << ": " << report.detail;
  }
}

TEST(Catalog, NameForms) {
  EXPECT_EQ(build_example("cycle_n:6").name, "cycle_n:6");
  EXPECT_EQ(build_example("cycle_n(6)").name, "cycle_n:6");
  EXPECT_EQ(build_example("star_lb(2)").graph().n(), 5);
  try {
    build_example("no_such_thing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownExample);
  }
  EXPECT_THROW(build_example("cycle_n:3"), Error);
}

TEST(Catalog, AdvertisedClasses) {
  for (const auto& name : catalog_names()) {
    const Instance inst = build_example(name);
    const auto& p = inst.profile;
    switch (inst.advertised) {
      case PreferenceClass::LAS:
        EXPECT_TRUE(is_las(p)) << name;
        [[fallthrough]];
      case PreferenceClass::Monotone:
        EXPECT_TRUE(is_monotone(p)) << name;
        [[fallthrough]];
      case PreferenceClass::IndividuallyRational:
        EXPECT_TRUE(is_individually_rational(p)) << name;
        break;
      case PreferenceClass::General:
        break;
    }
  }
  EXPECT_FALSE(is_las(make_tree_monotone().profile));
  EXPECT_FALSE(is_las(make_tree_monotone_01().profile));
  EXPECT_FALSE(is_individually_rational(make_star_general().profile));
  EXPECT_FALSE(is_monotone(make_path_ir8().profile));
}

TEST(Catalog, Topologies) {
  EXPECT_EQ(make_path_ir8().graph().classify(), Topology::Path);
  EXPECT_EQ(make_path_2coalitions().graph().classify(), Topology::Path);
  EXPECT_EQ(make_star_general().graph().classify(), Topology::Star);
  EXPECT_EQ(make_star_lb(4).graph().classify(), Topology::Star);
  EXPECT_EQ(make_almost_star().graph().classify(), Topology::Tree);
  EXPECT_EQ(make_tree_monotone().graph().classify(), Topology::Tree);
  EXPECT_EQ(make_tree_exponential(3).graph().classify(), Topology::Tree);
  EXPECT_EQ(make_cycle_n(7).graph().classify(), Topology::Cycle);
  EXPECT_EQ(make_cycle3().graph().classify(), Topology::Cycle);
}

TEST(Catalog, PrintedWheelIsByteExact) {
  const Instance inst = make_path_ir8();
  const char* wheel[] = {"{{a},{b,c,d,e},{f},{g,h}}", "{{a},{b,c,d},{e,f},{g,h}}", "{{a},{b,c},{d,e,f},{g,h}}",
                         "{{a},{b,c},{d,e,f,g},{h}}", "{{a,b},{c},{d,e,f,g},{h}}", "{{a,b},{c,d},{e,f,g},{h}}",
                         "{{a,b},{c,d,e},{f,g},{h}}", "{{a},{b,c,d,e},{f,g},{h}}", "{{a},{b,c,d,e},{f},{g,h}}"};
  const auto run = reproduce(inst).outcome;
  ASSERT_EQ(run.cycle.size(), 9u);
  for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(run.cycle[k].to_string(inst.graph()), wheel[k]);
}

TEST(Catalog, RingCyclePeriods) {
  // The pattern shifts by one position per three steps; the first
  // recurrence comes after a full turn except where coalition sizes line up earlier.
  EXPECT_EQ(reproduce(make_cycle_n(5)).outcome.cycle_length(), 5);
  for (int n = 6; n <= 8; ++n) {
    const auto run = reproduce(make_cycle_n(n)).outcome;
    EXPECT_EQ(run.cycle_length(), 3 * n);
    EXPECT_EQ(run.cycle.front(), make_cycle_n(n).initial);
  }
}

TEST(Catalog, LowerBoundStepCounts) {
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(reproduce(make_path_quadratic(n)).outcome.steps, n * (n - 1) / 2);
  for (int t = 2; t <= 6; ++t) EXPECT_EQ(reproduce(make_star_lb(t)).outcome.steps, t * (t + 1));
  for (int t = 1; t <= 6; ++t) {
    const auto run = reproduce(make_tree_exponential(t)).outcome;
    EXPECT_GE(run.steps, (1 << (t + 1)) - 2);
    EXPECT_EQ(run.steps, (1 << (t + 2)) - 4 - 2 * t);
    EXPECT_EQ(run.per_player_counts[exponential_x(1)], (1 << (t + 1)) - 2);
    EXPECT_TRUE(verify_is(make_tree_exponential(t).profile, run.final_state())) << t;
  }
}

TEST(Catalog, StarLowerBoundCenterOrder) {
  // Spot-check the center's order against the stated conditions, t = 3.
  const Instance inst = make_star_lb(3);
  const Graph& g = inst.graph();
  auto c = [&](const char* s) { return parse_coalition(g, s); };
  const auto& p = inst.profile;
  EXPECT_TRUE(p.strictly_prefers(0, c("c,x1"), c("c")));
  EXPECT_TRUE(p.strictly_prefers(0, c("c,x1,x2"), c("c")));
  EXPECT_TRUE(p.strictly_prefers(0, c("c,x2"), c("c,x1,y1,y2,y3")));
  EXPECT_TRUE(p.strictly_prefers(0, c("c,x1"), c("c,x1,x2,y1")));
  EXPECT_TRUE(p.strictly_prefers(0, c("c,x1,y1,y2"), c("c,x1,y3")));
  EXPECT_EQ(p.compare(0, c("c,x1,y1"), c("c,x1,y3")), Ordering::Indifferent);
  EXPECT_EQ(p.compare(0, c("c,y1"), c("c,x1,x2,y1,y2")), Ordering::Indifferent);
  EXPECT_TRUE(p.strictly_prefers(1, c("c,x1,y2"), c("x1")));
  EXPECT_EQ(p.compare(1, c("c,x1,y2"), c("c,x1")), Ordering::Indifferent);
}

TEST(Catalog, ExponentialScheduleShape) {
  const auto s = exponential_schedule(2);
  // x1 y1, x1 x2, x2 y2, x1 y1, x1 x2, x2 x3, x1 y1, x1 x2
  ASSERT_EQ(s.size(), 8u);
  EXPECT_EQ(s[0], ScriptStep::join(exponential_x(1), exponential_y(2, 1)));
  EXPECT_EQ(s[2], ScriptStep::join(exponential_x(2), exponential_y(2, 2)));
  EXPECT_EQ(s[5], ScriptStep::join(exponential_x(2), exponential_x(3)));
  EXPECT_EQ(s[7], ScriptStep::join(exponential_x(1), exponential_x(2)));
}
