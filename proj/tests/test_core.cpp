#include <gtest/gtest.h>

#include <vector>

#include "edp/demand_graph.hpp"
#include "edp/labeled_multigraph.hpp"
#include "edp/oracle.hpp"
#include "edp/realization.hpp"

using namespace edp;

namespace {

int count_edge(const LabeledMultigraph& g, VertexId u, VertexId v) { return g.multiplicity(u, v); }

}  // namespace

TEST(Vertex, ParseAndPrint) {
  EXPECT_EQ(VertexId::parse("a3"), a(3));
  EXPECT_EQ(VertexId::parse("b12"), b(12));
  EXPECT_FALSE(VertexId::parse("c1"));
  EXPECT_FALSE(VertexId::parse("a0"));
  EXPECT_FALSE(VertexId::parse("a"));
  EXPECT_FALSE(VertexId::parse("a1x"));
  EXPECT_EQ(b(7).to_string(), "b7");
  EXPECT_EQ(to_slot(b(2), 5), 6);
  EXPECT_EQ(from_slot(6, 5), b(2));
}

TEST(DemandGraph, MergesPairsAndCounts) {
  DemandGraph d(3);
  d.add(a(1), b(1), 2);
  d.add(b(1), a(1));
  d.add(a(1), a(2));
  EXPECT_EQ(d.edges().size(), 2U);
  EXPECT_EQ(d.num_edges(), 4);
  EXPECT_EQ(d.multiplicity(b(1), a(1)), 3);
  EXPECT_EQ(d.degree(a(1)), 4);
  EXPECT_EQ(d.max_degree(), 4);
  EXPECT_EQ(d.crossing_edges(), 3);
  EXPECT_EQ(d.edges_within(Side::A), 1);
  EXPECT_EQ(d.edges_within(Side::B), 0);
  const auto inst = d.instances();
  ASSERT_EQ(inst.size(), 4U);
  EXPECT_EQ(inst[0].label, 1);
  EXPECT_EQ(inst[3].label, 4);
  EXPECT_EQ(inst[3].v, a(2));
}

TEST(DemandGraph, RejectsLoopsAndRange) {
  DemandGraph d(2);
  EXPECT_THROW(d.add(a(1), a(1)), std::invalid_argument);
  EXPECT_THROW(d.add(a(3), b(1)), std::invalid_argument);
  EXPECT_THROW(d.add(a(1), b(1), 0), std::invalid_argument);
}

TEST(Lifting, MonochromaticToOppositeSide) {
  LabeledMultigraph g(3);
  const int id = g.add_edge({7, false}, a(1), a(2));
  EXPECT_TRUE(g.lift(id, b(1)));
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(count_edge(g, a(1), b(1)), 1);
  EXPECT_EQ(count_edge(g, b(1), a(2)), 1);
  EXPECT_EQ(count_edge(g, a(1), a(2)), 0);
  EXPECT_EQ(g.degree(b(1)), 2);
  for (const auto& e : g.edges()) EXPECT_EQ(e.label.id, 7);
  EXPECT_EQ(g.lift_count(), 1);
}

TEST(Lifting, ToEndpointIsNoOp) {
  LabeledMultigraph g(3);
  const int id = g.add_edge({1, false}, a(1), a(2));
  EXPECT_FALSE(g.lift(id, a(1)));
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_EQ(count_edge(g, a(1), a(2)), 1);
  EXPECT_EQ(g.lift_count(), 0);
}

TEST(Lifting, CrossingToSameSide) {
  LabeledMultigraph g(3);
  const int id = g.add_edge({1, false}, a(1), b(1));
  g.lift(id, a(2));
  EXPECT_EQ(count_edge(g, a(1), a(2)), 1);
  EXPECT_EQ(count_edge(g, a(2), b(1)), 1);
  EXPECT_EQ(count_edge(g, a(1), b(1)), 0);
}

TEST(Resolve, AlreadyResolvedVertex) {
  LabeledMultigraph g(3);
  g.add_edge({1, false}, a(1), b(1));
  EXPECT_EQ(g.resolve_demand(a(1)), 0);
  const std::vector<VertexId> order{b(2), b(3)};
  const auto r = g.resolve(a(1), order);
  EXPECT_TRUE(r.lifts.empty());
  EXPECT_EQ(g.num_edges(), 1);
}

TEST(Resolve, BundleSpreadsOverTargets) {
  DemandGraph d(3);
  d.add(a(1), b(1), 3);
  auto g = LabeledMultigraph::from_demand(d);
  EXPECT_EQ(g.resolve_demand(a(1)), 2);
  const std::vector<VertexId> order{b(2), b(3)};
  const auto r = g.resolve(a(1), order);
  EXPECT_EQ(r.lifts.size(), 2U);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(count_edge(g, a(1), b(i)), 1);
  EXPECT_EQ(g.degree(a(1)), 3);
  EXPECT_EQ(g.gamma(a(1), Side::B), 3);
  // Each lifted copy now dangles as b_j - b1 and completes through any a vertex.
  EXPECT_EQ(count_edge(g, b(2), b(1)), 1);
  EXPECT_EQ(count_edge(g, b(3), b(1)), 1);
}

TEST(Resolve, BundleCompletesToValidRealization) {
  DemandGraph d(3);
  d.add(a(1), b(1), 3);
  auto g = LabeledMultigraph::from_demand(d);
  const std::vector<VertexId> order{b(2), b(3)};
  g.resolve(a(1), order);
  // Finish the dangling b_j b1 pieces through a2 and a3.
  int k = 2;
  for (int id = 0; id < g.num_edges(); ++id) {
    if (!g.is_crossing(id)) g.lift(id, a(k++));
  }
  EXPECT_TRUE(g.is_simple_bipartite());
  const Realization r = extract_paths(g, d);
  EXPECT_TRUE(verify_realization(d, r).ok());
  EXPECT_EQ(r.max_path_length(), 3);
  // Independent check: the oracle also finds three paths for this bundle.
  EXPECT_EQ(edp_decide(d).status, OracleStatus::Feasible);
}

TEST(Resolve, SingleMonochromaticEdgeUsesFirstTarget) {
  LabeledMultigraph g(3);
  g.add_edge({1, false}, a(1), a(2));
  g.add_edge({2, false}, a(1), b(1));
  EXPECT_EQ(g.resolve_demand(a(1)), 1);
  const std::vector<VertexId> order{b(2), b(3)};
  const auto r = g.resolve(a(1), order);
  ASSERT_EQ(r.lifts.size(), 1U);
  EXPECT_EQ(r.lifts[0].target, b(2));
  EXPECT_EQ(count_edge(g, a(1), b(2)), 1);
  EXPECT_EQ(count_edge(g, b(2), a(2)), 1);
}

TEST(Resolve, TooFewTargetsThrows) {
  DemandGraph d(3);
  d.add(a(1), b(1), 3);
  auto g = LabeledMultigraph::from_demand(d);
  const std::vector<VertexId> short_order{b(2)};
  EXPECT_THROW(g.resolve(a(1), short_order), InsufficientTargets);
  const std::vector<VertexId> adjacent{b(2), b(1)};
  EXPECT_THROW(g.resolve(a(1), adjacent), std::invalid_argument);
  const std::vector<VertexId> same_side{a(2), a(3)};
  EXPECT_THROW(g.resolve(a(1), same_side), std::invalid_argument);
}

TEST(Extract, UniqueWalk) {
  DemandGraph d(3);
  d.add(a(1), b(1));
  LabeledMultigraph g(3);
  g.add_edge({1, false}, a(1), b(2));
  g.add_edge({1, false}, b(2), a(3));
  g.add_edge({1, false}, a(3), b(1));
  const Realization r = extract_paths(g, d);
  EXPECT_EQ(r.paths.at(1), (Path{a(1), b(2), a(3), b(1)}));
}

TEST(Extract, DirectEdge) {
  DemandGraph d(2);
  d.add(a(1), b(1));
  const auto g = LabeledMultigraph::from_demand(d);
  EXPECT_EQ(extract_paths(g, d).paths.at(1), (Path{a(1), b(1)}));
}

TEST(Extract, CycleIsPruned) {
  DemandGraph d(3);
  d.add(a(1), b(3));
  LabeledMultigraph g(3);
  g.add_edge({1, false}, a(1), b(1));
  g.add_edge({1, false}, b(1), a(2));
  g.add_edge({1, false}, a(2), b(2));
  g.add_edge({1, false}, b(2), a(1));
  g.add_edge({1, false}, a(1), b(3));
  const Realization r = extract_paths(g, d);
  EXPECT_EQ(r.paths.at(1), (Path{a(1), b(3)}));
  EXPECT_TRUE(verify_realization(d, r).ok());
}

TEST(Extract, SyntheticEdgesIgnored) {
  DemandGraph d(2);
  d.add(a(1), b(1));
  auto g = LabeledMultigraph::from_demand(d);
  g.add_edge({1, true}, a(2), b(2));
  const Realization r = extract_paths(g, d);
  EXPECT_EQ(r.paths.size(), 1U);
}

TEST(Verify, Ok) {
  DemandGraph d(2);
  d.add(a(1), b(1));
  Realization r;
  r.paths[1] = {a(1), b(1)};
  EXPECT_TRUE(verify_realization(d, r).ok());
}

TEST(Verify, DuplicateBaseEdge) {
  DemandGraph d(2);
  d.add(a(1), b(1), 2);
  Realization r;
  r.paths[1] = {a(1), b(1)};
  r.paths[2] = {a(1), b(1)};
  const auto v = verify_realization(d, r);
  EXPECT_EQ(v.violation, Violation::EdgeReused);
  EXPECT_NE(v.witness.find("a1"), std::string::npos);
  EXPECT_NE(v.witness.find("b1"), std::string::npos);
}

TEST(Verify, SameSideStep) {
  DemandGraph d(2);
  d.add(a(1), a(2));
  Realization r;
  r.paths[1] = {a(1), a(2)};
  EXPECT_EQ(verify_realization(d, r).violation, Violation::NotAlternating);
}

TEST(Verify, OtherViolations) {
  DemandGraph d(3);
  d.add(a(1), b(1));
  Realization none;
  EXPECT_EQ(verify_realization(d, none).violation, Violation::PathCount);
  Realization wrong_end;
  wrong_end.paths[1] = {a(1), b(2)};
  EXPECT_EQ(verify_realization(d, wrong_end).violation, Violation::Endpoints);
  Realization repeat;
  repeat.paths[1] = {a(1), b(2), a(2), b(2), a(3), b(1)};
  EXPECT_EQ(verify_realization(d, repeat).violation, Violation::VertexRepeated);
  Realization out_of_range;
  out_of_range.paths[1] = {a(1), b(9), a(2), b(1)};
  EXPECT_FALSE(verify_realization(d, out_of_range).ok());
  Realization reversed;
  reversed.paths[1] = {b(1), a(1)};
  EXPECT_TRUE(verify_realization(d, reversed).ok());
}
