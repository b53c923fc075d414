#pragma once

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "edp/coloring.hpp"
#include "edp/demand_graph.hpp"
#include "edp/oracle.hpp"
#include "edp/realize_degree.hpp"
#include "edp/realize_edge.hpp"
#include "edp/report.hpp"

namespace edp {

/// Dinic's maximum flow on a small directed graph with integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  int add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    return static_cast<int>(arcs_.size()) - 2;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (levels(s, t)) {
      next_ = head_;
      while (const int f = push(s, t, std::numeric_limits<int>::max())) total += f;
    }
    return total;
  }

  int flow(int arc) const { return arcs_[static_cast<std::size_t>(arc) ^ 1U].cap; }

 private:
  struct Arc {
    int to, next, cap;
  };

  bool levels(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(x)] + 1;
          q.push(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int push(int x, int t, int limit) {
    if (x == t) return limit;
    for (int& a = next_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
      auto& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(x)] + 1) continue;
      if (const int f = push(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= f;
        arcs_[static_cast<std::size_t>(a) ^ 1U].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_, next_, level_;
};

/// A set of demand instances of D, by label (ascending), with the demand graph
/// they form. Label i of `graph` is labels[i-1] of D.
struct Subgraph {
  std::vector<int> labels;
  DemandGraph graph{1};
};

inline Subgraph subgraph_of(const DemandGraph& d, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  const auto inst = d.instances();
  DemandGraph g(d.n());
  for (int l : labels) g.add(inst[static_cast<std::size_t>(l - 1)].u, inst[static_cast<std::size_t>(l - 1)].v, 1);
  return {std::move(labels), std::move(g)};
}

/// Selection from a matching partition of the instances of D.
struct MatchingSelection {
  Partitioner partitioner = Partitioner::Shannon;
  std::vector<int> class_sizes;  // all classes, non-increasing
  int chosen_classes = 0;
  std::vector<int> labels;  // ascending
  std::vector<int> ranked;  // the same labels, largest class first
};

/// Partitions the instances of D into matchings and keeps the t largest.
inline MatchingSelection largest_matchings(const DemandGraph& d, int t, Partitioner p) {
  const auto inst = d.instances();
  EdgeList h;
  h.num_vertices = 2 * d.n();
  for (const auto& x : inst) h.edges.emplace_back(to_slot(x.u, d.n()), to_slot(x.v, d.n()));
  const EdgeColoring c = partition_into_matchings(h, p);
  std::vector<int> order(static_cast<std::size_t>(c.k()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return c.class_size(x) > c.class_size(y); });
  while (!order.empty() && c.class_size(order.back()) == 0) order.pop_back();

  MatchingSelection sel;
  sel.partitioner = p;
  for (int col : order) sel.class_sizes.push_back(c.class_size(col));
  sel.chosen_classes = std::min<int>(std::max(t, 0), static_cast<int>(order.size()));
  std::vector<char> chosen(static_cast<std::size_t>(c.k()) + 1, 0);
  for (int i = 0; i < sel.chosen_classes; ++i) chosen[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (chosen[static_cast<std::size_t>(c.color(static_cast<int>(i)))]) sel.labels.push_back(inst[i].label);
  }
  for (int i = 0; i < sel.chosen_classes; ++i) {
    for (int e : c.members(order[static_cast<std::size_t>(i)])) sel.ranked.push_back(inst[static_cast<std::size_t>(e)].label);
  }
  return sel;
}

/// Maximum subgraph with all degrees <= t. Exact by max-flow when D has only
/// crossing edges; otherwise the t largest classes of a Shannon partition.
inline Subgraph degree_bounded_subgraph(const DemandGraph& d, int t) {
  if (t <= 0) return subgraph_of(d, {});
  if (d.crossing_edges() != d.num_edges()) return subgraph_of(d, largest_matchings(d, t, Partitioner::Shannon).labels);
  const int n = d.n();
  const int src = 2 * n, sink = 2 * n + 1;
  MaxFlow f(2 * n + 2);
  for (int i = 0; i < n; ++i) {
    f.add_arc(src, i, t);
    f.add_arc(n + i, sink, t);
  }
  std::vector<int> arcs;
  for (const auto& e : d.edges()) {
    const VertexId x = e.u.side == Side::A ? e.u : e.v;
    const VertexId y = e.u.side == Side::A ? e.v : e.u;
    arcs.push_back(f.add_arc(to_slot(x, n), to_slot(y, n), e.multiplicity));
  }
  f.run(src, sink);
  std::vector<int> labels;
  int next = 1;
  for (std::size_t i = 0; i < d.edges().size(); ++i) {
    const int used = f.flow(arcs[i]);
    for (int k = 0; k < used; ++k) labels.push_back(next + k);
    next += d.edges()[i].multiplicity;
  }
  return subgraph_of(d, labels);
}

/// Subgraph with all degrees <= cap: a maximum one on the crossing edges (by
/// flow), then monochromatic instances in label order while both ends have room.
inline Subgraph cap_degrees(const DemandGraph& d, int cap) {
  const int n = d.n();
  auto key = [n](VertexId u, VertexId v) { return std::minmax(to_slot(u, n), to_slot(v, n)); };
  DemandGraph crossing(n);
  std::map<std::pair<int, int>, std::vector<int>> copies;
  std::vector<int> mono_labels;
  for (const auto& x : d.instances()) {
    if (x.u.side != x.v.side) {
      crossing.add(x.u, x.v, 1);
      copies[key(x.u, x.v)].push_back(x.label);
    } else {
      mono_labels.push_back(x.label);
    }
  }
  // Label i of `crossing` is by_entry[i-1] of d.
  std::vector<int> by_entry;
  for (const auto& e : crossing.edges()) {
    const auto& c = copies[key(e.u, e.v)];
    by_entry.insert(by_entry.end(), c.begin(), c.end());
  }
  const Subgraph flow = degree_bounded_subgraph(crossing, cap);
  std::vector<int> keep;
  std::vector<int> deg(static_cast<std::size_t>(2 * d.n()), 0);
  const auto inst = d.instances();
  auto take = [&](int label) {
    const auto& x = inst[static_cast<std::size_t>(label - 1)];
    ++deg[static_cast<std::size_t>(to_slot(x.u, d.n()))];
    ++deg[static_cast<std::size_t>(to_slot(x.v, d.n()))];
    keep.push_back(label);
  };
  for (int l : flow.labels) take(by_entry[static_cast<std::size_t>(l - 1)]);
  for (int l : mono_labels) {
    const auto& x = inst[static_cast<std::size_t>(l - 1)];
    if (deg[static_cast<std::size_t>(to_slot(x.u, d.n()))] < cap && deg[static_cast<std::size_t>(to_slot(x.v, d.n()))] < cap) {
      take(l);
    }
  }
  return subgraph_of(d, keep);
}

/// The ratio guarantee of the selection: e(D_sub) >= bound * e(D) with
/// bound = 2t/(3*Delta) for a Shannon partition and t/(2*Delta-1) for greedy.
struct RatioCertificate {
  int e_input = 0;   // edges after degree capping
  int e_sub = 0;
  int max_degree = 0;
  int t = 0;
  double bound = 0.0;
  bool holds = false;
  std::vector<int> class_sizes;
};

struct MaxEdpResult {
  Subgraph sub;
  std::optional<Realization> realization;  // labels of sub.graph
  int t = 0;
  int capped_edges = 0;    // instances discarded to bring the degree to <= n
  int selected_edges = 0;  // size of the union of the t largest classes
  int trimmed_edges = 0;   // selected edges dropped before a realizer succeeded
  RatioCertificate certificate;
  SolveReport report;

  bool ok() const noexcept { return realization.has_value(); }
};

namespace detail {

// Tries the degree realizer, then the edge realizer, then the degree realizer
// without its threshold, then the exact search when in budget.
inline RealizeResult realize_any(const DemandGraph& d, const SearchBudget& budget) {
  if (degree_conditions(d, DegreeVariant::Deg1).satisfied) return realize_deg1(d);
  if (d.num_edges() <= 2 * d.n() - 3 && d.max_degree() <= d.n()) return realize_edge(d);
  RealizeResult r = realize_deg1(d, DegreeOptions{true});
  if (r.ok()) return r;
  const auto t0 = std::chrono::steady_clock::now();
  const OracleResult o = edp_decide(d, budget);
  if (o.status != OracleStatus::Feasible) {
    r.report.detail += std::string("; exact search: ") + to_string(o.status);
    return r;
  }
  RealizeResult out;
  out.realization = o.realization;
  out.report.method = "oracle";
  out.report.outcome = Outcome::Realized;
  out.report.n = d.n();
  out.report.max_degree = d.max_degree();
  out.report.num_edges = d.num_edges();
  out.report.max_path_length = o.realization.max_path_length();
  out.report.millis = millis_since(t0);
  return out;
}

}  // namespace detail

class ScaleExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaxEdpExact {
  Subgraph sub;
  Realization realization;  // labels of sub.graph
};

/// Maximum realizable subgraph by exhaustive search: for each size from e(D)
/// down, the candidate sets (copies of a pair are interchangeable) are tested
/// in lexicographic order of their label sets.
inline MaxEdpExact maxedp_exact(const DemandGraph& d, const SearchBudget& budget = {}) {
  if (d.n() > budget.max_n || d.num_edges() > budget.max_edges) {
    throw ScaleExceeded("maxedp_exact: instance exceeds n <= " + std::to_string(budget.max_n) +
                        ", e <= " + std::to_string(budget.max_edges));
  }
  const auto& edges = d.edges();
  std::vector<int> first(edges.size());
  for (std::size_t i = 0, next = 1; i < edges.size(); ++i) {
    first[i] = static_cast<int>(next);
    next += static_cast<std::size_t>(edges[i].multiplicity);
  }
  for (int size = d.num_edges(); size >= 0; --size) {
    std::vector<std::vector<int>> candidates;
    std::vector<int> counts(edges.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i == edges.size()) {
        if (left != 0) return;
        std::vector<int> labels;
        for (std::size_t j = 0; j < edges.size(); ++j) {
          for (int k = 0; k < counts[j]; ++k) labels.push_back(first[j] + k);
        }
        candidates.push_back(std::move(labels));
        return;
      }
      for (int c = std::min(left, edges[i].multiplicity); c >= 0; --c) {
        counts[i] = c;
        self(self, i + 1, left - c);
      }
      counts[i] = 0;
    };
    rec(rec, 0, size);
    std::sort(candidates.begin(), candidates.end());
    for (auto& labels : candidates) {
      Subgraph sub = subgraph_of(d, std::move(labels));
      OracleResult o = edp_decide(sub.graph, budget);
      if (o.status == OracleStatus::ScaleExceeded) throw ScaleExceeded("maxedp_exact: search budget exhausted");
      if (o.status == OracleStatus::Feasible) return {std::move(sub), std::move(o.realization)};
    }
  }
  throw std::logic_error("maxedp_exact: the empty subgraph must be realizable");
}

/// Approximate MaxEDP: caps degrees at n, partitions the instances into
/// matchings and keeps the t largest, then realizes the union.
inline MaxEdpResult maxedp_approx(const DemandGraph& d, int t, Partitioner p = Partitioner::Shannon,
                                  const SearchBudget& budget = {}) {
  if (t < 1) throw std::invalid_argument("maxedp_approx: t must be positive");
  MaxEdpResult res;
  res.t = t;
  const int n = d.n();
  const Subgraph capped = cap_degrees(d, n);
  res.capped_edges = d.num_edges() - capped.graph.num_edges();
  const MatchingSelection sel = largest_matchings(capped.graph, t, p);
  std::vector<int> ranked;
  for (int l : sel.ranked) ranked.push_back(capped.labels[static_cast<std::size_t>(l - 1)]);
  res.selected_edges = static_cast<int>(ranked.size());

  // When no realizer handles the selection, keep a largest realizable part of
  // it: by exhaustive search within the budget, else its first 2n-3 edges.
  res.sub = subgraph_of(d, ranked);
  RealizeResult r = detail::realize_any(res.sub.graph, budget);
  if (!r.ok() && !ranked.empty()) {
    if (n <= budget.max_n && static_cast<int>(ranked.size()) <= budget.max_edges) {
      const MaxEdpExact best = maxedp_exact(res.sub.graph, budget);
      std::vector<int> kept;
      for (int l : best.sub.labels) kept.push_back(res.sub.labels[static_cast<std::size_t>(l - 1)]);
      ranked = kept;
    } else {
      ranked.resize(static_cast<std::size_t>(std::max(2 * n - 3, 0)));
    }
    res.sub = subgraph_of(d, ranked);
    r = detail::realize_any(res.sub.graph, budget);
  }
  res.trimmed_edges = res.selected_edges - static_cast<int>(ranked.size());

  auto& cert = res.certificate;
  cert.e_input = capped.graph.num_edges();
  cert.e_sub = res.sub.graph.num_edges();
  cert.max_degree = capped.graph.max_degree();
  cert.t = t;
  cert.class_sizes = sel.class_sizes;
  if (cert.max_degree > 0) {
    cert.bound = p == Partitioner::Shannon ? 2.0 * t / (3.0 * cert.max_degree) : t / (2.0 * cert.max_degree - 1.0);
  }
  cert.holds = cert.e_sub >= std::min(1.0, cert.bound) * cert.e_input - 1e-9;

  res.report = r.report;
  res.report.method = "maxedp/" + res.report.method;
  if (r.ok()) res.realization = std::move(r.realization);
  if (res.trimmed_edges > 0) {
    if (!res.report.detail.empty()) res.report.detail += "; ";
    res.report.detail += "dropped " + std::to_string(res.trimmed_edges) + " selected edges";
  }
  return res;
}

}  // namespace edp
