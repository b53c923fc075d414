#pragma once

#include <chrono>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edp/coloring.hpp"
#include "edp/demand_graph.hpp"
#include "edp/labeled_multigraph.hpp"
#include "edp/realization.hpp"
#include "edp/report.hpp"

namespace edp {

struct Regularized {
  LabeledMultigraph graph;
  int synthetic_edges = 0;
  bool exact = true;  // every vertex reached degree Delta(D)
};

/// Pads D with synthetic edges until every vertex has degree Delta(D).
///
/// The two lowest-degree deficient vertices are joined repeatedly. If a single
/// vertex u is left short (its deficit is then even), a synthetic edge xy with
/// x, y != u is lifted to u, which adds 2 to d(u) and leaves all other degrees
/// alone. When no such synthetic edge exists the result stays one vertex short
/// of regular and `exact` is false.
inline Regularized regularize(const DemandGraph& d) {
  Regularized r{LabeledMultigraph::from_demand(d)};
  auto& g = r.graph;
  const int target = d.max_degree();
  int next_label = d.num_edges() + 1;

  std::set<std::pair<int, int>> short_of;  // (degree, slot)
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (g.degree_slot(s) < target) short_of.emplace(g.degree_slot(s), s);
  }
  std::vector<int> synthetic;
  while (short_of.size() >= 2) {
    const auto x = *short_of.begin();
    short_of.erase(short_of.begin());
    const auto y = *short_of.begin();
    short_of.erase(short_of.begin());
    synthetic.push_back(g.add_edge_slots({next_label++, true}, x.second, y.second));
    ++r.synthetic_edges;
    for (const auto& [deg, s] : {x, y}) {
      if (deg + 1 < target) short_of.emplace(deg + 1, s);
    }
  }
  if (!short_of.empty()) {
    const int u = short_of.begin()->second;
    std::size_t scan = 0;
    while (g.degree_slot(u) < target) {
      while (scan < synthetic.size() &&
             (g.edge(synthetic[scan]).u == u || g.edge(synthetic[scan]).v == u)) {
        ++scan;
      }
      if (scan == synthetic.size()) {
        r.exact = false;
        break;
      }
      g.lift_slot(synthetic[scan], u);
      ++r.synthetic_edges;
    }
  }
  return r;
}

inline int ceil_div(int p, int q) { return (p + q - 1) / q; }

/// Evaluates the deterministic degree threshold for D:
///   Deg1: Delta(D) <= (n - 7) / 6
///   Deg2: Delta(D) <= (n - 2*ceil(e(D[A,B]) / (n-1)) - 5) / 4
inline DegreeConditions degree_conditions(const DemandGraph& d, DegreeVariant variant) {
  DegreeConditions c;
  c.variant = variant;
  c.max_degree = d.max_degree();
  c.e_cross = d.crossing_edges();
  c.e_A = d.edges_within(Side::A);
  c.e_B = d.edges_within(Side::B);
  const int n = d.n();
  if (variant == DegreeVariant::Deg1) {
    c.threshold = (n - 7) / 6.0;
    c.satisfied = 6 * c.max_degree <= n - 7;
  } else if (n >= 2) {
    const int slack = n - 2 * ceil_div(c.e_cross, n - 1) - 5;
    c.threshold = slack / 4.0;
    c.satisfied = 4 * c.max_degree <= slack;
  }
  return c;
}

struct DegreeOptions {
  // Run the pipeline even when the threshold is not met.
  bool attempt_anyway = false;
};

namespace detail {

inline void lift_classes_to_a(LabeledMultigraph& g, const std::vector<int>& ids, const EdgeColoring& c) {
  for (std::size_t i = 0; i < ids.size(); ++i) g.lift(ids[i], a(c.color(static_cast<int>(i))));
}

// Colors D[A] from the lists L(e) = B \ (N(a_i) u N(a_j)) and lifts every edge
// to its color. Returns whether all lists met the 2*Delta-1 size bound.
inline bool lift_inner_a_to_b(LabeledMultigraph& g) {
  const int n = g.n();
  const auto ids = g.edges_within(Side::A);
  const EdgeList h = EdgeList::from(g, ids);
  const int delta = h.max_degree();
  bool held = true;
  std::vector<int> stamp(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int e = 0; e < h.size(); ++e) {
    const auto& [x, y] = h.edges[static_cast<std::size_t>(e)];
    int common = 0;
    for (int id : g.incident_slot(x)) {
      const int o = g.other_end(id, x);
      if (g.side_of(o) != Side::B || stamp[static_cast<std::size_t>(o)] == e) continue;
      stamp[static_cast<std::size_t>(o)] = e;
      common += g.multiplicity_slots(y, o) > 0;
    }
    const int blocked = g.gamma_slot(x, Side::B) + g.gamma_slot(y, Side::B) - common;
    if (n - blocked < 2 * delta - 1) held = false;
  }
  const EdgeColoring c = greedy_color_if(h, n, [&](int e, int col) {
    const int bs = n + col - 1;
    const auto& [x, y] = h.edges[static_cast<std::size_t>(e)];
    return g.multiplicity_slots(x, bs) == 0 && g.multiplicity_slots(y, bs) == 0;
  });
  for (std::size_t i = 0; i < ids.size(); ++i) g.lift(ids[i], b(c.color(static_cast<int>(i))));
  return held;
}

inline void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

template <typename Pipeline>
RealizeResult run_degree_pipeline(const DemandGraph& d, DegreeVariant variant, const DegreeOptions& opt,
                                  const char* method, Pipeline&& stages) {
  const auto t0 = std::chrono::steady_clock::now();
  RealizeResult res;
  auto& rep = res.report;
  rep.method = method;
  rep.n = d.n();
  rep.max_degree = d.max_degree();
  rep.num_edges = d.num_edges();
  rep.conditions = degree_conditions(d, variant);
  if (!rep.conditions->satisfied && !opt.attempt_anyway) {
    rep.outcome = Outcome::ConditionUnmet;
    rep.detail = "max degree " + std::to_string(rep.max_degree) + " exceeds threshold " +
                 std::to_string(rep.conditions->threshold);
    rep.millis = millis_since(t0);
    return res;
  }
  auto reg = regularize(d);
  rep.regular = reg.exact;
  LabeledMultigraph& g = reg.graph;
  const long long padding_lifts = g.lift_count();
  try {
    rep.list_bound_held = stages(g, !opt.attempt_anyway);
  } catch (const ColoringFailure& e) {
    rep.outcome = Outcome::MethodFailure;
    rep.detail = e.what();
    rep.millis = millis_since(t0);
    return res;
  } catch (const std::invalid_argument& e) {
    rep.outcome = Outcome::MethodFailure;
    rep.detail = e.what();
    rep.millis = millis_since(t0);
    return res;
  }
  require(g.is_simple_bipartite(), "degree pipeline did not end in a subgraph of K_{n,n}");
  Realization r = extract_paths(g, d);
  const auto check = verify_realization(d, r);
  if (!check) throw std::logic_error(std::string("degree pipeline produced an invalid realization: ") +
                                     to_string(check.violation) + " " + check.witness);
  rep.liftings = g.lift_count() - padding_lifts;
  rep.max_path_length = r.max_path_length();
  rep.outcome = Outcome::Realized;
  res.realization = std::move(r);
  rep.millis = millis_since(t0);
  return res;
}

}  // namespace detail

/// Realizer for Delta(D) <= (n-7)/6. Paths have length at most 4.
///
/// Stages on the regularized graph: an equitable n-coloring of D[A] is lifted
/// class i -> a_i; the abb coloring of D[A,B] u D[B] is lifted class i -> a_i;
/// the remaining edges inside A are list-colored with B-vertices not adjacent
/// to either end and lifted to their colors.
inline RealizeResult realize_deg1(const DemandGraph& d, const DegreeOptions& opt = {}) {
  return detail::run_degree_pipeline(d, DegreeVariant::Deg1, opt, "deg1", [](LabeledMultigraph& g, bool strict) {
    const int n = g.n();
    const auto ids_a = g.edges_within(Side::A);
    const EdgeList ha = EdgeList::from(g, ids_a);
    detail::lift_classes_to_a(g, ids_a, make_equitable(ha, greedy_color(ha, n), n));
    detail::require(g.max_multiplicity_within(Side::A) <= 2, "mu(D'[A]) > 2 after the first stage");

    const AbbColoring abb = abb_coloring(g, strict);
    detail::lift_classes_to_a(g, abb.edge_ids, abb.coloring);
    detail::require(g.edges_within(Side::B).empty(), "D''[B] not empty");
    for (int id : g.crossing_edges()) {
      detail::require(g.multiplicity_slots(g.edge(id).u, g.edge(id).v) == 1, "D''[A,B] not simple");
    }
    detail::require(g.max_multiplicity_within(Side::A) <= 4, "mu(D''[A]) > 4");
    return detail::lift_inner_a_to_b(g);
  });
}

/// Realizer for Delta(D) <= (n - 2*ceil(e(D[A,B])/(n-1)) - 5)/4. Paths have
/// length at most 3: D[A,B] u D[B] is lifted into A by the abb coloring, then
/// D[A] is list-colored into B.
inline RealizeResult realize_deg2(const DemandGraph& d, const DegreeOptions& opt = {}) {
  return detail::run_degree_pipeline(d, DegreeVariant::Deg2, opt, "deg2", [](LabeledMultigraph& g, bool strict) {
    const AbbColoring abb = abb_coloring(g, strict);
    detail::lift_classes_to_a(g, abb.edge_ids, abb.coloring);
    detail::require(g.edges_within(Side::B).empty(), "D'[B] not empty");
    for (int id : g.crossing_edges()) {
      detail::require(g.multiplicity_slots(g.edge(id).u, g.edge(id).v) == 1, "D'[A,B] not simple");
    }
    return detail::lift_inner_a_to_b(g);
  });
}

}  // namespace edp
