#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edp/demand_graph.hpp"
#include "edp/vertex.hpp"

namespace edp {

/// Identity of a demand-edge instance. Survives every lifting; synthetic labels
/// mark padding edges that never reach the output.
struct EdgeLabel {
  int id = 0;
  bool synthetic = false;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Edge instance with endpoints stored as dense slots (see to_slot).
struct EdgeInstance {
  EdgeLabel label;
  int u;
  int v;
};

/// Thrown by resolve() when the caller did not supply enough usable targets.
class InsufficientTargets : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One lifting performed during a resolution.
struct LiftRecord {
  int edge;          // instance id of the lifted edge (keeps the v-side piece)
  VertexId other;    // the endpoint opposite the resolved vertex, before lifting
  VertexId target;   // the vertex the edge was lifted to
};

struct Resolution {
  std::vector<VertexId> used_targets;
  std::vector<LiftRecord> lifts;
};

/// Mutable working multigraph on V(K_{n,n}) whose edges carry labels.
///
/// Every unit of multiplicity is its own instance. Degree, per-class neighbor
/// counts and pair multiplicities are maintained incrementally; lift() and
/// multiplicity() cost O(distinct neighbors) of the endpoints involved.
class LabeledMultigraph {
 public:
  explicit LabeledMultigraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto vcount = static_cast<std::size_t>(2 * n);
    incidence_.resize(vcount);
    distinct_.assign(vcount, {0, 0});
    nbr_.resize(vcount);
  }

  /// Builds the labeled graph of D; labels follow DemandGraph::instances().
  static LabeledMultigraph from_demand(const DemandGraph& d) {
    LabeledMultigraph g(d.n());
    for (const auto& inst : d.instances()) g.add_edge({inst.label, false}, inst.u, inst.v);
    return g;
  }

  int n() const noexcept { return n_; }
  int num_vertices() const noexcept { return 2 * n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  long long lift_count() const noexcept { return lifts_; }

  int slot(VertexId v) const noexcept { return to_slot(v, n_); }
  VertexId vertex(int s) const noexcept { return from_slot(s, n_); }
  Side side_of(int s) const noexcept { return slot_side(s, n_); }

  const EdgeInstance& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<EdgeInstance>& edges() const noexcept { return edges_; }

  int add_edge(EdgeLabel label, VertexId u, VertexId v) {
    if (!in_range(u, n_) || !in_range(v, n_)) throw std::invalid_argument("vertex out of range");
    return add_edge_slots(label, slot(u), slot(v));
  }

  int add_edge_slots(EdgeLabel label, int u, int v) {
    if (u == v) throw std::invalid_argument("loop at " + vertex(u).to_string());
    const int id = num_edges();
    edges_.push_back({label, u, v});
    pos_.push_back({0, 0});
    attach(id, u, 0);
    attach(id, v, 1);
    bump_pair(u, v, +1);
    return id;
  }

  /// Lifts edge `id` = xy to z: the edge becomes xz and a new instance zy with
  /// the same label is appended. No-op (returns false) when z is an endpoint.
  bool lift(int id, VertexId z) { return lift_slot(id, slot(z)); }

  bool lift_slot(int id, int z) {
    if (id < 0 || id >= num_edges()) throw std::out_of_range("edge instance not found");
    auto& e = edges_[static_cast<std::size_t>(id)];
    if (z == e.u || z == e.v) return false;
    const int x = e.u;
    const int y = e.v;
    const EdgeLabel label = e.label;
    bump_pair(x, y, -1);
    detach(id, y, 1);
    e.v = z;
    attach(id, z, 1);
    bump_pair(x, z, +1);
    add_edge_slots(label, z, y);
    ++lifts_;
    return true;
  }

  /// Number of liftings needed to resolve v: d(v) minus the number of distinct
  /// neighbors of v in the opposite class.
  int resolve_demand(VertexId v) const {
    const int s = slot(v);
    return degree_slot(s) - gamma_slot(s, opposite(v.side));
  }

  /// Resolves v: lifts every monochromatic edge at v and all but one copy of
  /// each crossing bundle at v, each to a distinct target taken from
  /// `target_order` in order. Targets that are on v's side, already adjacent to
  /// v, or repeated are rejected. Afterwards all edges at v are simple crossing
  /// edges.
  Resolution resolve(VertexId v, std::span<const VertexId> target_order) {
    const int s = slot(v);
    const Side far = opposite(v.side);
    std::vector<int> at_v(incidence_[static_cast<std::size_t>(s)].begin(),
                          incidence_[static_cast<std::size_t>(s)].end());
    std::sort(at_v.begin(), at_v.end());

    std::vector<int> to_lift;
    std::vector<char> kept(static_cast<std::size_t>(num_vertices()), 0);
    for (int id : at_v) {
      const int other = other_end(id, s);
      if (side_of(other) != far || kept[static_cast<std::size_t>(other)]) {
        to_lift.push_back(id);
      } else {
        kept[static_cast<std::size_t>(other)] = 1;
      }
    }

    std::vector<char> seen(static_cast<std::size_t>(num_vertices()), 0);
    std::vector<int> targets;
    for (const auto& t : target_order) {
      if (targets.size() == to_lift.size()) break;
      if (t.side != far || !in_range(t, n_)) {
        throw std::invalid_argument("resolve target " + t.to_string() + " is not in the opposite class");
      }
      const int ts = slot(t);
      if (seen[static_cast<std::size_t>(ts)]) throw std::invalid_argument("duplicate resolve target");
      seen[static_cast<std::size_t>(ts)] = 1;
      if (multiplicity_slots(s, ts) > 0) {
        throw std::invalid_argument("resolve target " + t.to_string() + " is adjacent to " + v.to_string());
      }
      targets.push_back(ts);
    }
    if (targets.size() < to_lift.size()) {
      throw InsufficientTargets("resolving " + v.to_string() + " needs " + std::to_string(to_lift.size()) +
                                " targets, got " + std::to_string(targets.size()));
    }

    Resolution r;
    for (std::size_t i = 0; i < to_lift.size(); ++i) {
      const int id = to_lift[i];
      const int other = other_end(id, s);
      // Orient so the lifted instance keeps the piece at v.
      if (edges_[static_cast<std::size_t>(id)].u != s) flip(id);
      lift_slot(id, targets[i]);
      r.used_targets.push_back(vertex(targets[i]));
      r.lifts.push_back({id, vertex(other), vertex(targets[i])});
    }
    return r;
  }

  int degree(VertexId v) const { return degree_slot(slot(v)); }
  int degree_slot(int s) const { return static_cast<int>(incidence_[static_cast<std::size_t>(s)].size()); }

  /// gamma_side(v): number of distinct neighbors of v in class `side`.
  int gamma(VertexId v, Side side) const { return gamma_slot(slot(v), side); }
  int gamma_slot(int s, Side side) const {
    return distinct_[static_cast<std::size_t>(s)][static_cast<std::size_t>(side)];
  }

  /// Number of edge instances from v into class `side`, with multiplicity.
  int edges_into(VertexId v, Side side) const {
    const int s = slot(v);
    int c = 0;
    for (int id : incidence_[static_cast<std::size_t>(s)]) {
      if (side_of(other_end(id, s)) == side) ++c;
    }
    return c;
  }

  int multiplicity(VertexId u, VertexId v) const { return multiplicity_slots(slot(u), slot(v)); }
  int multiplicity_slots(int u, int v) const {
    const auto& x = nbr_[static_cast<std::size_t>(u)];
    const auto& y = nbr_[static_cast<std::size_t>(v)];
    const auto& list = x.size() <= y.size() ? x : y;
    const int other = x.size() <= y.size() ? v : u;
    for (const auto& adj : list) {
      if (adj.to == other) return adj.count;
    }
    return 0;
  }

  std::span<const int> incident(VertexId v) const { return incident_slot(slot(v)); }
  std::span<const int> incident_slot(int s) const { return incidence_[static_cast<std::size_t>(s)]; }

  int other_end(int id, int s) const {
    const auto& e = edges_[static_cast<std::size_t>(id)];
    return e.u == s ? e.v : e.u;
  }

  /// N_side(v), ascending by index.
  std::vector<VertexId> neighbors(VertexId v, Side side) const {
    const int s = slot(v);
    std::vector<int> out;
    for (int id : incidence_[static_cast<std::size_t>(s)]) {
      const int o = other_end(id, s);
      if (side_of(o) == side) out.push_back(o);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<VertexId> ids;
    ids.reserve(out.size());
    for (int o : out) ids.push_back(vertex(o));
    return ids;
  }

  bool is_crossing(int id) const {
    const auto& e = edge(id);
    return side_of(e.u) != side_of(e.v);
  }

  /// Instance ids of D[side] (monochromatic within `side`), ascending.
  std::vector<int> edges_within(Side side) const {
    std::vector<int> out;
    for (int id = 0; id < num_edges(); ++id) {
      const auto& e = edges_[static_cast<std::size_t>(id)];
      if (side_of(e.u) == side && side_of(e.v) == side) out.push_back(id);
    }
    return out;
  }

  /// Instance ids of D[A,B], ascending.
  std::vector<int> crossing_edges() const {
    std::vector<int> out;
    for (int id = 0; id < num_edges(); ++id) {
      if (is_crossing(id)) out.push_back(id);
    }
    return out;
  }

  int max_degree() const {
    int m = 0;
    for (const auto& inc : incidence_) m = std::max(m, static_cast<int>(inc.size()));
    return m;
  }

  int max_multiplicity() const {
    int m = 0;
    for (const auto& list : nbr_) {
      for (const auto& adj : list) m = std::max(m, adj.count);
    }
    return m;
  }

  /// Max multiplicity over pairs inside class `side` (mu(D[side])).
  int max_multiplicity_within(Side side) const {
    int m = 0;
    for (const auto& e : edges_) {
      if (side_of(e.u) == side && side_of(e.v) == side) m = std::max(m, multiplicity_slots(e.u, e.v));
    }
    return m;
  }

  /// True when the graph is a subgraph of K_{n,n}: only crossing edges, all simple.
  bool is_simple_bipartite() const {
    for (int id = 0; id < num_edges(); ++id) {
      const auto& e = edges_[static_cast<std::size_t>(id)];
      if (!is_crossing(id) || multiplicity_slots(e.u, e.v) != 1) return false;
    }
    return true;
  }

  /// Same graph with the classes A and B swapped (edge ids preserved).
  LabeledMultigraph transposed() const {
    LabeledMultigraph t(n_);
    auto swap_slot = [this](int s) { return s < n_ ? s + n_ : s - n_; };
    for (const auto& e : edges_) t.add_edge_slots(e.label, swap_slot(e.u), swap_slot(e.v));
    t.lifts_ = lifts_;
    return t;
  }

 private:
  void attach(int id, int s, int end) {
    auto& inc = incidence_[static_cast<std::size_t>(s)];
    pos_[static_cast<std::size_t>(id)][static_cast<std::size_t>(end)] = static_cast<int>(inc.size());
    inc.push_back(id);
  }

  void detach(int id, int s, int end) {
    auto& inc = incidence_[static_cast<std::size_t>(s)];
    const int p = pos_[static_cast<std::size_t>(id)][static_cast<std::size_t>(end)];
    const int moved = inc.back();
    inc[static_cast<std::size_t>(p)] = moved;
    inc.pop_back();
    if (moved != id) {
      const auto& me = edges_[static_cast<std::size_t>(moved)];
      auto& mp = pos_[static_cast<std::size_t>(moved)];
      mp[me.u == s ? 0 : 1] = p;
    }
  }

  void flip(int id) {
    auto& e = edges_[static_cast<std::size_t>(id)];
    std::swap(e.u, e.v);
    auto& p = pos_[static_cast<std::size_t>(id)];
    std::swap(p[0], p[1]);
  }

  // Adjusts the xy multiplicity; only the shorter neighbor list is searched.
  void bump_pair(int x, int y, int delta) {
    auto& lx = nbr_[static_cast<std::size_t>(x)];
    auto& ly = nbr_[static_cast<std::size_t>(y)];
    const bool from_x = lx.size() <= ly.size();
    auto& near = from_x ? lx : ly;
    const int target = from_x ? y : x;
    auto it = std::find_if(near.begin(), near.end(), [target](const Adjacency& adj) { return adj.to == target; });
    int i = static_cast<int>(it - near.begin());
    int j = 0;
    if (it == near.end()) {
      auto& far = from_x ? ly : lx;
      j = static_cast<int>(far.size());
      near.push_back({target, 0, j});
      far.push_back({from_x ? x : y, 0, i});
    } else {
      j = it->mirror;
    }
    const int ix = from_x ? i : j, iy = from_x ? j : i;
    const int before = lx[static_cast<std::size_t>(ix)].count;
    const int after = before + delta;
    assert(after >= 0);
    lx[static_cast<std::size_t>(ix)].count = after;
    ly[static_cast<std::size_t>(iy)].count = after;
    if (before == 0 && after > 0) {
      ++distinct_[static_cast<std::size_t>(x)][static_cast<std::size_t>(side_of(y))];
      ++distinct_[static_cast<std::size_t>(y)][static_cast<std::size_t>(side_of(x))];
    } else if (before > 0 && after == 0) {
      --distinct_[static_cast<std::size_t>(x)][static_cast<std::size_t>(side_of(y))];
      --distinct_[static_cast<std::size_t>(y)][static_cast<std::size_t>(side_of(x))];
      drop_adjacency(x, ix);
      drop_adjacency(y, iy);
    }
  }

  void drop_adjacency(int s, int i) {
    auto& list = nbr_[static_cast<std::size_t>(s)];
    const Adjacency moved = list.back();
    list.pop_back();
    if (i == static_cast<int>(list.size())) return;
    list[static_cast<std::size_t>(i)] = moved;
    nbr_[static_cast<std::size_t>(moved.to)][static_cast<std::size_t>(moved.mirror)].mirror = i;
  }

  struct Adjacency {
    int to;
    int count;
    int mirror;  // index of the reverse entry in nbr_[to]
  };

  int n_;
  std::vector<EdgeInstance> edges_;
  std::vector<std::array<int, 2>> pos_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::array<int, 2>> distinct_;
  std::vector<std::vector<Adjacency>> nbr_;
  long long lifts_ = 0;
};

}  // namespace edp
