#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "edp/vertex.hpp"

namespace edp {

/// One aggregated bundle of a demand graph.
struct DemandEdge {
  VertexId u;
  VertexId v;
  int multiplicity = 1;

  bool crossing() const noexcept { return u.side != v.side; }
  friend bool operator==(const DemandEdge&, const DemandEdge&) = default;
};

/// A single demand-edge instance. Labels are 1-based and follow entry order
/// expanded by multiplicity: entry 0 copies get labels 1..m0, and so on.
struct DemandInstance {
  int label;
  VertexId u;
  VertexId v;
};

/// Loopless demand multigraph on the vertex set of K_{n,n}. Immutable once
/// built; at most one entry per unordered vertex pair.
class DemandGraph {
 public:
  explicit DemandGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    degree_.assign(2 * static_cast<std::size_t>(n), 0);
  }

  DemandGraph(int n, const std::vector<DemandEdge>& edges) : DemandGraph(n) {
    for (const auto& e : edges) add(e.u, e.v, e.multiplicity);
  }

  /// Adds `multiplicity` copies of uv, merging into an existing entry for the pair.
  void add(VertexId u, VertexId v, int multiplicity = 1) {
    if (!in_range(u, n_) || !in_range(v, n_)) {
      throw std::invalid_argument("vertex out of range: " + u.to_string() + " " + v.to_string());
    }
    if (u == v) throw std::invalid_argument("loop at " + u.to_string());
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    auto key = pair_key(u, v);
    if (auto it = index_.find(key); it != index_.end()) {
      edges_[it->second].multiplicity += multiplicity;
    } else {
      index_.emplace(key, edges_.size());
      edges_.push_back({u, v, multiplicity});
    }
    degree_[to_slot(u, n_)] += multiplicity;
    degree_[to_slot(v, n_)] += multiplicity;
    total_ += multiplicity;
  }

  int n() const noexcept { return n_; }
  const std::vector<DemandEdge>& edges() const noexcept { return edges_; }

  /// e(D), counted with multiplicity.
  int num_edges() const noexcept { return total_; }
  int degree(VertexId v) const { return degree_[to_slot(v, n_)]; }
  int max_degree() const noexcept {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }

  int multiplicity(VertexId u, VertexId v) const {
    auto it = index_.find(pair_key(u, v));
    return it == index_.end() ? 0 : edges_[it->second].multiplicity;
  }

  /// e(D[A,B]).
  int crossing_edges() const noexcept { return count_if_([](const DemandEdge& e) { return e.crossing(); }); }
  /// e(D[side]).
  int edges_within(Side s) const noexcept {
    return count_if_([s](const DemandEdge& e) { return !e.crossing() && e.u.side == s; });
  }

  std::vector<DemandInstance> instances() const {
    std::vector<DemandInstance> out;
    out.reserve(static_cast<std::size_t>(total_));
    int label = 1;
    for (const auto& e : edges_) {
      for (int c = 0; c < e.multiplicity; ++c) out.push_back({label++, e.u, e.v});
    }
    return out;
  }

  /// Swaps the roles of A and B.
  DemandGraph transposed() const {
    DemandGraph t(n_);
    for (const auto& e : edges_) {
      t.add({opposite(e.u.side), e.u.index}, {opposite(e.v.side), e.v.index}, e.multiplicity);
    }
    return t;
  }

 private:
  std::uint64_t pair_key(VertexId u, VertexId v) const {
    auto x = static_cast<std::uint64_t>(to_slot(u, n_));
    auto y = static_cast<std::uint64_t>(to_slot(v, n_));
    if (x > y) std::swap(x, y);
    return x * (2 * static_cast<std::uint64_t>(n_)) + y;
  }

  template <typename Pred>
  int count_if_(Pred pred) const noexcept {
    int c = 0;
    for (const auto& e : edges_) {
      if (pred(e)) c += e.multiplicity;
    }
    return c;
  }

  int n_;
  std::vector<DemandEdge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<int> degree_;
  int total_ = 0;
};

}  // namespace edp
