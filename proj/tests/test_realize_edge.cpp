#include <gtest/gtest.h>

#include "edp/generators.hpp"
#include "edp/oracle.hpp"
#include "edp/realize_edge.hpp"

using namespace edp;

TEST(PadToExact, AlreadyFull) {
  DemandGraph d(3);
  d.add(a(1), b(1), 3);
  const auto g = pad_to_exact(d);
  EXPECT_EQ(g.num_edges(), 3);
}

TEST(PadToExact, SingleEdgeAtN4) {
  DemandGraph d(4);
  d.add(a(1), b(1));
  const auto g = pad_to_exact(d);
  EXPECT_EQ(g.num_edges(), 5);
  int synthetic = 0;
  for (const auto& e : g.edges()) synthetic += e.label.synthetic;
  EXPECT_EQ(synthetic, 4);
  EXPECT_LE(g.max_degree(), 4);
}

TEST(PadToExact, EmptyAtN2) {
  const DemandGraph d(2);
  const auto g = pad_to_exact(d);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_TRUE(g.edge(0).label.synthetic);
}

TEST(PadToExact, RejectsTooManyEdges) {
  DemandGraph d(3);
  d.add(a(1), b(1), 4);
  EXPECT_THROW(pad_to_exact(d), std::invalid_argument);
}

TEST(RealizeEdge, MonochromaticAtN2) {
  DemandGraph d(2);
  d.add(a(1), a(2));
  const auto r = realize_edge(d);
  ASSERT_TRUE(r.ok()) << r.report.detail;
  const auto& p = r.realization->paths.at(1);
  ASSERT_EQ(p.size(), 3U);
  EXPECT_EQ(p[1].side, Side::B);
  EXPECT_TRUE(verify_realization(d, *r.realization).ok());
}

TEST(RealizeEdge, FullBundleAtN3) {
  DemandGraph d(3);
  d.add(a(1), b(1), 3);
  const auto r = realize_edge(d);
  ASSERT_TRUE(r.ok()) << r.report.detail;
  EXPECT_TRUE(verify_realization(d, *r.realization).ok());
  EXPECT_EQ(r.realization->paths.size(), 3U);
}

TEST(RealizeEdge, TwoBundlesExceedBound) {
  const DemandGraph d = generate({3, Model::ExtremalBundle, {}, {}, 1});
  EXPECT_EQ(d.num_edges(), 4);
  EXPECT_EQ(realize_edge(d).report.outcome, Outcome::ConditionUnmet);
  EXPECT_EQ(edp_decide(d).status, OracleStatus::Infeasible);
}

TEST(RealizeEdge, DegreeAboveN) {
  DemandGraph d(4);
  d.add(a(1), b(1), 3);
  d.add(a(1), a(2), 2);
  EXPECT_EQ(realize_edge(d).report.outcome, Outcome::ConditionUnmet);
}

TEST(RealizeEdge, EmptyAndTiny) {
  const DemandGraph empty(5);
  const auto r = realize_edge(empty);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.realization->paths.empty());
  EXPECT_EQ(realize_edge(DemandGraph(1)).report.outcome, Outcome::ConditionUnmet);
}

TEST(RealizeEdge, ExtremalBundleMinusOne) {
  for (int n = 2; n <= 30; ++n) {
    DemandGraph d(n);
    d.add(a(1), a(2), n - 1);
    if (n >= 3) d.add(b(1), b(2), n - 2);
    const auto r = realize_edge(d);
    ASSERT_TRUE(r.ok()) << "n=" << n << " " << r.report.detail;
    EXPECT_TRUE(verify_realization(d, *r.realization).ok());
  }
}

TEST(RealizeEdge, RandomFullInstances) {
  for (int n = 4; n <= 24; ++n) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Model m = seed % 3 == 0 ? Model::Uniform : Model::Bundles;
      const DemandGraph d = generate({n, m, 2 * n - 3, n, seed});
      const auto r = realize_edge(d);
      ASSERT_TRUE(r.ok()) << "n=" << n << " seed=" << seed << " " << r.report.detail;
      ASSERT_TRUE(verify_realization(d, *r.realization).ok());
    }
  }
}

TEST(RealizeEdge, LargerInstances) {
  for (int n : {40, 64, 101}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const DemandGraph d = generate({n, Model::Bundles, 2 * n - 3, n, seed});
      const auto r = realize_edge(d);
      ASSERT_TRUE(r.ok()) << "n=" << n << " seed=" << seed << " " << r.report.detail;
      EXPECT_TRUE(verify_realization(d, *r.realization).ok());
    }
  }
}

TEST(RealizeEdge, AgreesWithOracleAtN4) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const DemandGraph d = generate({4, Model::Bundles, 5, 4, seed});
    const auto r = realize_edge(d);
    ASSERT_TRUE(r.ok()) << "seed=" << seed << " " << r.report.detail;
    EXPECT_EQ(edp_decide(d).status, OracleStatus::Feasible);
  }
}
