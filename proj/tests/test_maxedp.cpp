#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "edp/maxedp.hpp"

using namespace edp;

namespace {

// Largest sub-multigraph with every degree <= t, by enumerating copy counts.
int brute_degree_bounded(const DemandGraph& d, int t) {
  const auto& edges = d.edges();
  std::vector<int> deg(static_cast<std::size_t>(2 * d.n()), 0);
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, int taken) -> void {
    if (i == edges.size()) {
      best = std::max(best, taken);
      return;
    }
    const int u = to_slot(edges[i].u, d.n()), v = to_slot(edges[i].v, d.n());
    for (int c = 0; c <= edges[i].multiplicity; ++c) {
      if (deg[u] + c > t || deg[v] + c > t) break;
      deg[u] += c;
      deg[v] += c;
      self(self, i + 1, taken + c);
      deg[u] -= c;
      deg[v] -= c;
    }
  };
  rec(rec, 0, 0);
  return best;
}

void expect_max_degree_at_most(const DemandGraph& d, int t) { EXPECT_LE(d.max_degree(), t); }

}  // namespace

TEST(MaxFlow, SmallNetwork) {
  MaxFlow f(4);
  const int sa = f.add_arc(0, 1, 3);
  f.add_arc(0, 2, 2);
  f.add_arc(1, 2, 1);
  f.add_arc(1, 3, 2);
  f.add_arc(2, 3, 3);
  EXPECT_EQ(f.run(0, 3), 5);
  EXPECT_EQ(f.flow(sa), 3);
}

TEST(DegreeBounded, BundleCappedAtT) {
  DemandGraph d(3);
  d.add(a(1), b(1), 5);
  const auto s = degree_bounded_subgraph(d, 2);
  EXPECT_EQ(s.graph.num_edges(), 2);
}

TEST(DegreeBounded, Star) {
  DemandGraph d(3);
  for (int i = 1; i <= 3; ++i) d.add(a(1), b(i));
  const auto s = degree_bounded_subgraph(d, 2);
  EXPECT_EQ(s.graph.num_edges(), 2);
  expect_max_degree_at_most(s.graph, 2);
}

TEST(DegreeBounded, MatchesBruteForceOnBipartite) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    DemandGraph d(4);
    const int e = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < e; ++i) d.add(a(1 + static_cast<int>(rng() % 4)), b(1 + static_cast<int>(rng() % 4)));
    const int t = 1 + static_cast<int>(rng() % 4);
    const auto s = degree_bounded_subgraph(d, t);
    EXPECT_EQ(s.graph.num_edges(), brute_degree_bounded(d, t)) << "trial " << trial;
    expect_max_degree_at_most(s.graph, t);
  }
}

TEST(DegreeBounded, LabelsMapBack) {
  DemandGraph d(3);
  d.add(a(1), b(1), 2);
  d.add(a(2), b(2));
  const auto s = degree_bounded_subgraph(d, 1);
  const auto inst = d.instances();
  ASSERT_EQ(s.labels.size(), 2U);
  const auto sub_inst = s.graph.instances();
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    const auto& orig = inst[static_cast<std::size_t>(s.labels[i] - 1)];
    EXPECT_EQ(orig.u, sub_inst[i].u);
    EXPECT_EQ(orig.v, sub_inst[i].v);
  }
}

TEST(CapDegrees, NonBipartite) {
  DemandGraph d(3);
  d.add(a(1), a(2), 4);
  d.add(a(1), b(1), 2);
  const auto s = cap_degrees(d, 3);
  expect_max_degree_at_most(s.graph, 3);
  EXPECT_EQ(s.graph.num_edges(), 3);
}

TEST(Approx, BundleAtTOne) {
  DemandGraph d(3);
  d.add(a(1), b(1), 3);
  const auto r = maxedp_approx(d, 1);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.sub.graph.num_edges(), 1);
  EXPECT_EQ(r.realization->paths.begin()->second, (Path{a(1), b(1)}));
  const auto best = maxedp_exact(d);
  EXPECT_EQ(best.sub.graph.num_edges(), 3);
  EXPECT_GE(1.0 / 3.0, 2.0 * 1 / (3.0 * 3) - 1e-12);
  EXPECT_TRUE(r.certificate.holds);
}

TEST(Approx, MatchingKeptWhole) {
  DemandGraph d(5);
  d.add(a(1), b(2));
  d.add(a(2), a(3));
  d.add(b(4), b(5));
  for (int t = 1; t <= 5; ++t) {
    const auto r = maxedp_approx(d, t);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.sub.graph.num_edges(), 3);
    EXPECT_TRUE(verify_realization(r.sub.graph, *r.realization).ok());
  }
}

TEST(Approx, TwoBundlesAtTOne) {
  DemandGraph d(3);
  d.add(a(1), a(2), 2);
  d.add(b(1), b(2), 2);
  const auto r = maxedp_approx(d, 1);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.sub.graph.num_edges(), 2);
  EXPECT_EQ(r.sub.graph.multiplicity(a(1), a(2)), 1);
  EXPECT_EQ(r.sub.graph.multiplicity(b(1), b(2)), 1);
  EXPECT_TRUE(verify_realization(r.sub.graph, *r.realization).ok());
  EXPECT_EQ(maxedp_exact(d).sub.graph.num_edges(), 3);
}

TEST(Approx, RatioOnRandomSmallInstances) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    DemandGraph d(n);
    const int e = 1 + static_cast<int>(rng() % 7);
    while (d.num_edges() < e) {
      const int x = static_cast<int>(rng() % (2 * n)), y = static_cast<int>(rng() % (2 * n));
      if (x != y) d.add(from_slot(x, n), from_slot(y, n));
    }
    const int opt = maxedp_exact(d).sub.graph.num_edges();
    for (int t = 1; t <= n; ++t) {
      const auto r = maxedp_approx(d, t);
      ASSERT_TRUE(r.ok()) << "trial " << trial << " t=" << t;
      ASSERT_TRUE(verify_realization(r.sub.graph, *r.realization).ok());
      EXPECT_GE(r.sub.graph.num_edges() * 3.0 * n, 2.0 * t * opt - 1e-9) << "trial " << trial << " t=" << t;
    }
  }
}

TEST(Approx, RejectsNonPositiveT) {
  const DemandGraph d(2);
  EXPECT_THROW(maxedp_approx(d, 0), std::invalid_argument);
}

TEST(Exact, SingleEdge) {
  DemandGraph d(2);
  d.add(a(1), b(1));
  const auto r = maxedp_exact(d);
  EXPECT_EQ(r.sub.graph.num_edges(), 1);
  EXPECT_TRUE(verify_realization(r.sub.graph, r.realization).ok());
}

TEST(Exact, LargeBundle) {
  DemandGraph d(3);
  d.add(a(1), b(1), 5);
  EXPECT_EQ(maxedp_exact(d).sub.graph.num_edges(), 3);
}

TEST(Exact, DoubledMatchingBelowFull) {
  DemandGraph d(3);
  for (int i = 1; i <= 3; ++i) d.add(a(i), b(i), 2);
  const auto r = maxedp_exact(d);
  EXPECT_LT(r.sub.graph.num_edges(), 6);
  EXPECT_GE(r.sub.graph.num_edges(), 3);
  EXPECT_TRUE(verify_realization(r.sub.graph, r.realization).ok());
}

TEST(Exact, ScaleGuard) {
  DemandGraph d(6);
  d.add(a(1), b(1));
  EXPECT_THROW(maxedp_exact(d), ScaleExceeded);
}
