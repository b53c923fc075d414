#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edp/demand_graph.hpp"
#include "edp/labeled_multigraph.hpp"
#include "edp/vertex.hpp"

namespace edp {

using Path = std::vector<VertexId>;

/// Demand-edge label -> vertex path in K_{n,n}.
struct Realization {
  std::map<int, Path> paths;

  int max_path_length() const {
    int m = 0;
    for (const auto& [label, p] : paths) m = std::max(m, static_cast<int>(p.size()) - 1);
    return m;
  }

  int total_length() const {
    int t = 0;
    for (const auto& [label, p] : paths) t += static_cast<int>(p.size()) - 1;
    return t;
  }
};

/// Raised when a label's instances do not form a walk between its demand endpoints.
class ExtractionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Turns a simple bipartite labeled graph into one path per non-synthetic label.
///
/// Each label's instances are followed as a trail from the demand source; the
/// trail stops the first time it reaches the target, and any cycle closed on
/// the way is cut out, which leaves a simple path.
inline Realization extract_paths(const LabeledMultigraph& g, const DemandGraph& d) {
  if (g.n() != d.n()) throw std::invalid_argument("extract_paths: n mismatch");
  if (!g.is_simple_bipartite()) throw ExtractionError("extract_paths: graph is not a subgraph of K_{n,n}");

  const auto inst_list = d.instances();
  const auto num_labels = inst_list.size();
  // Instances bucketed by label (CSR layout).
  std::vector<int> start(num_labels + 2, 0);
  for (int id = 0; id < g.num_edges(); ++id) {
    const auto& e = g.edge(id);
    if (e.label.synthetic) continue;
    if (e.label.id < 1 || static_cast<std::size_t>(e.label.id) > num_labels) {
      throw ExtractionError("unexpected label " + std::to_string(e.label.id));
    }
    ++start[static_cast<std::size_t>(e.label.id) + 1];
  }
  for (std::size_t l = 1; l < start.size(); ++l) start[l] += start[l - 1];
  std::vector<int> ids(static_cast<std::size_t>(start.back()));
  {
    auto fill = start;
    for (int id = 0; id < g.num_edges(); ++id) {
      const auto& e = g.edge(id);
      if (!e.label.synthetic) ids[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.label.id)]++)] = id;
    }
  }

  Realization r;
  std::vector<int> where(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<char> used;
  std::vector<int> walk;
  for (const auto& inst : inst_list) {
    const auto lo = static_cast<std::size_t>(start[static_cast<std::size_t>(inst.label)]);
    const auto hi = static_cast<std::size_t>(start[static_cast<std::size_t>(inst.label) + 1]);
    if (lo == hi) throw ExtractionError("label " + std::to_string(inst.label) + " has no edges");
    used.assign(hi - lo, 0);
    const int src = g.slot(inst.u);
    const int dst = g.slot(inst.v);
    walk.assign(1, src);
    where[static_cast<std::size_t>(src)] = 0;
    int cur = src;
    while (cur != dst) {
      int next = -1;
      for (std::size_t k = lo; k < hi && next < 0; ++k) {
        if (used[k - lo]) continue;
        const auto& e = g.edge(ids[k]);
        if (e.u == cur || e.v == cur) {
          used[k - lo] = 1;
          next = e.u == cur ? e.v : e.u;
        }
      }
      if (next < 0) {
        for (int s : walk) where[static_cast<std::size_t>(s)] = -1;
        throw ExtractionError("label " + std::to_string(inst.label) + " does not form a walk from " +
                              inst.u.to_string() + " to " + inst.v.to_string());
      }
      if (const int w = where[static_cast<std::size_t>(next)]; w >= 0) {
        // Excise the cycle that closes at `next`.
        for (std::size_t k = static_cast<std::size_t>(w) + 1; k < walk.size(); ++k) where[static_cast<std::size_t>(walk[k])] = -1;
        walk.resize(static_cast<std::size_t>(w) + 1);
      } else {
        where[static_cast<std::size_t>(next)] = static_cast<int>(walk.size());
        walk.push_back(next);
      }
      cur = next;
    }
    Path p;
    p.reserve(walk.size());
    for (int s : walk) {
      p.push_back(g.vertex(s));
      where[static_cast<std::size_t>(s)] = -1;
    }
    r.paths.emplace_hint(r.paths.end(), inst.label, std::move(p));
  }
  return r;
}

/// Which realization condition failed.
enum class Violation {
  None,
  PathCount,        // (i) not exactly one path per demand instance
  Endpoints,        // (ii) path endpoints differ from the demand edge
  NotAlternating,   // (iii) consecutive vertices on the same side (or out of range)
  EdgeReused,       // (iv) a K_{n,n} edge is used twice
  VertexRepeated,   // (v) a path revisits a vertex
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::None: return "ok";
    case Violation::PathCount: return "path-count";
    case Violation::Endpoints: return "endpoints";
    case Violation::NotAlternating: return "not-alternating";
    case Violation::EdgeReused: return "edge-reused";
    case Violation::VertexRepeated: return "vertex-repeated";
  }
  return "?";
}

struct VerifyResult {
  Violation violation = Violation::None;
  int label = 0;
  std::string witness;

  bool ok() const noexcept { return violation == Violation::None; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks that R realizes D in K_{n,n}. Total: never throws on malformed input.
inline VerifyResult verify_realization(const DemandGraph& d, const Realization& r) {
  const int n = d.n();
  const auto demand = d.instances();
  if (r.paths.size() != demand.size()) {
    return {Violation::PathCount, 0,
            "expected " + std::to_string(demand.size()) + " paths, got " + std::to_string(r.paths.size())};
  }
  std::vector<std::pair<std::uint64_t, int>> base_used;  // (K_{n,n} edge, label)
  std::vector<char> on_path(static_cast<std::size_t>(2 * n), 0);
  for (const auto& inst : demand) {
    auto it = r.paths.find(inst.label);
    if (it == r.paths.end()) {
      return {Violation::PathCount, inst.label, "no path for label " + std::to_string(inst.label)};
    }
    const Path& p = it->second;
    const bool forward = !p.empty() && p.front() == inst.u && p.back() == inst.v;
    const bool backward = !p.empty() && p.front() == inst.v && p.back() == inst.u;
    if (p.size() < 2 || !(forward || backward)) {
      return {Violation::Endpoints, inst.label,
              "path does not join " + inst.u.to_string() + " and " + inst.v.to_string()};
    }
    for (const auto& v : p) {
      if (!in_range(v, n)) return {Violation::NotAlternating, inst.label, v.to_string() + " out of range"};
    }
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k].side == p[k + 1].side) {
        return {Violation::NotAlternating, inst.label, p[k].to_string() + "-" + p[k + 1].to_string()};
      }
    }
    std::string repeated;
    for (const auto& v : p) {
      auto& flag = on_path[static_cast<std::size_t>(to_slot(v, n))];
      if (flag && repeated.empty()) repeated = v.to_string();
      flag = 1;
    }
    for (const auto& v : p) on_path[static_cast<std::size_t>(to_slot(v, n))] = 0;
    if (!repeated.empty()) return {Violation::VertexRepeated, inst.label, repeated};
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      const VertexId& x = p[k].side == Side::A ? p[k] : p[k + 1];
      const VertexId& y = p[k].side == Side::A ? p[k + 1] : p[k];
      const auto key = static_cast<std::uint64_t>(x.index - 1) * static_cast<std::uint64_t>(n) +
                       static_cast<std::uint64_t>(y.index - 1);
      base_used.emplace_back(key, inst.label);
    }
  }
  std::sort(base_used.begin(), base_used.end());
  const auto dup = std::adjacent_find(base_used.begin(), base_used.end(),
                                      [](const auto& p, const auto& q) { return p.first == q.first; });
  if (dup != base_used.end()) {
    const auto x = static_cast<int>(dup->first / static_cast<std::uint64_t>(n)) + 1;
    const auto y = static_cast<int>(dup->first % static_cast<std::uint64_t>(n)) + 1;
    return {Violation::EdgeReused, std::next(dup)->second, a(x).to_string() + "-" + b(y).to_string()};
  }
  return {};
}

}  // namespace edp
