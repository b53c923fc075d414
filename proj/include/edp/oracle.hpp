#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "edp/demand_graph.hpp"
#include "edp/realization.hpp"
#include "edp/vertex.hpp"

namespace edp {

/// Limits for the exact search. Exceeding any of them yields ScaleExceeded.
struct SearchBudget {
  int max_n = 4;
  int max_edges = 8;
  long long max_nodes = 200'000'000;
  double max_seconds = 0.0;  // 0 = no time cap
};

enum class OracleStatus { Feasible, Infeasible, ScaleExceeded };

inline const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Feasible: return "Feasible";
    case OracleStatus::Infeasible: return "Infeasible";
    case OracleStatus::ScaleExceeded: return "ScaleExceeded";
  }
  return "?";
}

/// Result for a list of demand instances: paths[i] realizes demands[i].
struct InstanceSearchResult {
  OracleStatus status = OracleStatus::Infeasible;
  std::vector<Path> paths;
  long long nodes = 0;
};

struct OracleResult {
  OracleStatus status = OracleStatus::Infeasible;
  Realization realization;
  long long nodes = 0;
};

namespace detail {

class EdpSearch {
 public:
  EdpSearch(int n, const std::vector<std::pair<VertexId, VertexId>>& demands, const SearchBudget& budget)
      : n_(n), budget_(budget), start_(std::chrono::steady_clock::now()) {
    const auto nv = static_cast<std::size_t>(2 * n);
    used_.assign(static_cast<std::size_t>(n * n), 0);
    free_.assign(nv, n);
    need_.assign(nv, 0);
    terminal_.assign(nv, 0);
    mark_.assign(nv, 0);

    std::map<std::pair<int, int>, int> copies;
    for (const auto& [u, v] : demands) {
      int x = to_slot(u, n), y = to_slot(v, n);
      if (x > y) std::swap(x, y);
      ++copies[{x, y}];
    }
    for (std::size_t i = 0; i < demands.size(); ++i) {
      int x = to_slot(demands[i].first, n), y = to_slot(demands[i].second, n);
      const bool flipped = x > y;
      if (flipped) std::swap(x, y);
      const bool mono = slot_side(x, n) == slot_side(y, n);
      const int rank = mono ? 0 : (copies[{x, y}] > 1 ? 1 : 2);
      items_.push_back({x, y, rank, static_cast<int>(i), flipped});
    }
    // Monochromatic and parallel demands first; copies of a pair stay adjacent.
    std::stable_sort(items_.begin(), items_.end(), [](const Item& p, const Item& q) {
      return std::tie(p.rank, p.x, p.y) < std::tie(q.rank, q.x, q.y);
    });
    for (const auto& it : items_) {
      ++need_[static_cast<std::size_t>(it.x)];
      ++need_[static_cast<std::size_t>(it.y)];
      ++terminal_[static_cast<std::size_t>(it.x)];
      ++terminal_[static_cast<std::size_t>(it.y)];
    }
    routes_.resize(items_.size());
  }

  InstanceSearchResult run() {
    InstanceSearchResult r;
    try {
      const bool ok = feasible_counts() && place(0);
      r.status = ok ? OracleStatus::Feasible : OracleStatus::Infeasible;
      if (ok) {
        r.paths.resize(items_.size());
        for (std::size_t i = 0; i < items_.size(); ++i) {
          Path p;
          for (int s : routes_[i]) p.push_back(from_slot(s, n_));
          if (items_[i].flipped) std::reverse(p.begin(), p.end());
          r.paths[static_cast<std::size_t>(items_[i].original)] = std::move(p);
        }
      }
    } catch (const BudgetExceeded&) {
      r.status = OracleStatus::ScaleExceeded;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  struct Item {
    int x, y, rank, original;
    bool flipped;
  };
  struct BudgetExceeded {};

  char& used(int p, int q) {
    const int a = slot_side(p, n_) == Side::A ? p : q;
    const int bb = (slot_side(p, n_) == Side::A ? q : p) - n_;
    return used_[static_cast<std::size_t>(a * n_ + bb)];
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetExceeded{};
    if (budget_.max_seconds > 0 && (nodes_ & 0xFFF) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > budget_.max_seconds) throw BudgetExceeded{};
    }
  }

  bool fresh(int s) const {
    return terminal_[static_cast<std::size_t>(s)] == 0 && free_[static_cast<std::size_t>(s)] == n_;
  }

  // Lower bound on base edges still needed vs. edges left, and per-vertex capacity.
  bool feasible_counts() {
    for (std::size_t s = 0; s < free_.size(); ++s) {
      if (free_[s] < need_[s]) return false;
    }
    return true;
  }

  bool length_bound_ok(std::size_t from) {
    long long need = 0;
    long long free_edges = 0;
    for (std::size_t s = 0; s < static_cast<std::size_t>(n_); ++s) free_edges += free_[s];
    std::size_t i = from;
    while (i < items_.size()) {
      const auto& it = items_[i];
      std::size_t j = i;
      while (j < items_.size() && items_[j].x == it.x && items_[j].y == it.y) ++j;
      const long long c = static_cast<long long>(j - i);
      if (slot_side(it.x, n_) == slot_side(it.y, n_)) {
        need += 2 * c;
      } else {
        need += used(it.x, it.y) ? 3 * c : 1 + 3 * (c - 1);
      }
      i = j;
    }
    return need <= free_edges;
  }

  bool place(std::size_t i) {
    if (i == items_.size()) return true;
    if (!length_bound_ok(i)) return false;
    const auto& it = items_[i];
    --need_[static_cast<std::size_t>(it.x)];
    --need_[static_cast<std::size_t>(it.y)];
    auto& route = routes_[i];
    route.assign(1, it.x);
    const int saved = mark_[static_cast<std::size_t>(it.x)];
    mark_[static_cast<std::size_t>(it.x)] = static_cast<int>(i) + 1;
    const bool ok = extend(i, it.x, it.y);
    mark_[static_cast<std::size_t>(it.x)] = saved;
    if (!ok) {
      ++need_[static_cast<std::size_t>(it.x)];
      ++need_[static_cast<std::size_t>(it.y)];
    }
    return ok;
  }

  bool extend(std::size_t i, int cur, int target) {
    tick();
    const int lo = slot_side(cur, n_) == Side::A ? n_ : 0;
    bool tried_fresh = false;
    for (int w = lo; w < lo + n_; ++w) {
      if (mark_[static_cast<std::size_t>(w)] == static_cast<int>(i) + 1 || used(cur, w)) continue;
      if (w != target) {
        // Interior vertex: consumes two of its free edges.
        if (free_[static_cast<std::size_t>(w)] - 2 < need_[static_cast<std::size_t>(w)]) continue;
        if (fresh(w)) {
          if (tried_fresh) continue;
          tried_fresh = true;
        }
      }
      if (free_[static_cast<std::size_t>(cur)] - 1 < need_[static_cast<std::size_t>(cur)]) return false;
      used(cur, w) = 1;
      --free_[static_cast<std::size_t>(cur)];
      --free_[static_cast<std::size_t>(w)];
      routes_[i].push_back(w);
      bool ok;
      if (w == target) {
        ok = place(i + 1);
      } else {
        const int saved = mark_[static_cast<std::size_t>(w)];
        mark_[static_cast<std::size_t>(w)] = static_cast<int>(i) + 1;
        ok = extend(i, w, target);
        mark_[static_cast<std::size_t>(w)] = saved;
      }
      if (ok) return true;
      routes_[i].pop_back();
      used(cur, w) = 0;
      ++free_[static_cast<std::size_t>(cur)];
      ++free_[static_cast<std::size_t>(w)];
    }
    return false;
  }

  int n_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<char> used_;
  std::vector<int> free_;
  std::vector<int> need_;
  std::vector<int> terminal_;
  std::vector<int> mark_;  // item + 1 of the path being built through a vertex
  std::vector<Item> items_;
  std::vector<std::vector<int>> routes_;
  long long nodes_ = 0;
};

}  // namespace detail

/// Exact EDP decision for an explicit list of demand instances in K_{n,n}.
inline InstanceSearchResult edp_search(int n, const std::vector<std::pair<VertexId, VertexId>>& demands,
                                       const SearchBudget& budget) {
  if (n > budget.max_n || static_cast<int>(demands.size()) > budget.max_edges) {
    return {OracleStatus::ScaleExceeded, {}, 0};
  }
  for (const auto& [u, v] : demands) {
    if (!in_range(u, n) || !in_range(v, n) || u == v) throw std::invalid_argument("edp_search: bad demand");
  }
  return detail::EdpSearch(n, demands, budget).run();
}

/// Exact EDP decision by backtracking over simple alternating paths.
inline OracleResult edp_decide(const DemandGraph& d, const SearchBudget& budget = {}) {
  const auto inst = d.instances();
  std::vector<std::pair<VertexId, VertexId>> demands;
  demands.reserve(inst.size());
  for (const auto& x : inst) demands.emplace_back(x.u, x.v);
  auto res = edp_search(d.n(), demands, budget);
  OracleResult out{res.status, {}, res.nodes};
  if (res.status == OracleStatus::Feasible) {
    for (std::size_t i = 0; i < inst.size(); ++i) out.realization.paths.emplace(inst[i].label, std::move(res.paths[i]));
  }
  return out;
}

}  // namespace edp
