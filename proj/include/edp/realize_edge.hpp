#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edp/demand_graph.hpp"
#include "edp/labeled_multigraph.hpp"
#include "edp/oracle.hpp"
#include "edp/realization.hpp"
#include "edp/report.hpp"

namespace edp {

/// Adds synthetic edges until g has `target` edges. Each one joins a
/// lowest-degree vertex of A to a lowest-degree vertex of B not adjacent to it
/// (ties by index), falling back to the two lowest-degree vertices overall.
/// Labels are drawn from next_label.
inline void pad_edges(LabeledMultigraph& g, int target, int& next_label) {
  const int n = g.n();
  auto lowest = [&](int from, int to, int skip_adjacent_to) {
    int best = -1;
    for (int s = from; s < to; ++s) {
      if (g.degree_slot(s) >= n) continue;
      if (skip_adjacent_to >= 0 && g.multiplicity_slots(skip_adjacent_to, s) > 0) continue;
      if (best < 0 || g.degree_slot(s) < g.degree_slot(best)) best = s;
    }
    return best;
  };
  while (g.num_edges() < target) {
    int x = lowest(0, n, -1);
    int y = x < 0 ? -1 : lowest(n, 2 * n, x);
    if (y < 0) {
      x = y = -1;
      for (int s = 0; s < 2 * n; ++s) {
        const int d = g.degree_slot(s);
        if (x < 0 || d < g.degree_slot(x)) {
          y = x;
          x = s;
        } else if (y < 0 || d < g.degree_slot(y)) {
          y = s;
        }
      }
      if (g.degree_slot(y) >= n) throw std::logic_error("pad_edges: no two vertices below degree n");
    }
    g.add_edge_slots({next_label++, true}, x, y);
  }
}

/// D padded with synthetic edges to exactly 2n-3 edges; max degree stays <= n.
inline LabeledMultigraph pad_to_exact(const DemandGraph& d) {
  if (d.num_edges() > 2 * d.n() - 3 || d.max_degree() > d.n()) {
    throw std::invalid_argument("pad_to_exact: requires e(D) <= 2n-3 and max degree <= n");
  }
  LabeledMultigraph g = LabeledMultigraph::from_demand(d);
  int next = d.num_edges() + 1;
  pad_edges(g, 2 * d.n() - 3, next);
  return g;
}

// Largest level that may be handed to the exact search when no step applies.
inline constexpr int kOracleFrame = 6;

struct EdgeRealizerOptions {
  // Permit the pair search when a step's prescribed choices fail their checks.
  bool allow_fallback = true;
};

namespace detail {

inline std::string edge_string(const LabeledMultigraph& g) {
  std::string out;
  for (const auto& e : g.edges()) out += ' ' + g.vertex(e.u).to_string() + '-' + g.vertex(e.v).to_string();
  return out;
}

/// One level of the induction: the working graph and the original vertex of
/// every local slot.
struct InductionFrame {
  LabeledMultigraph g;
  std::vector<VertexId> origin;

  void transpose() {
    g = g.transposed();
    const auto half = static_cast<std::ptrdiff_t>(g.n());
    std::rotate(origin.begin(), origin.begin() + half, origin.end());
  }
};

/// A candidate induction step: the graph after its liftings and the local
/// slots to delete (t per class).
struct StepPlan {
  LabeledMultigraph g;
  std::vector<int> removed;
  std::string name;
};

class InductionStep {
 public:
  explicit InductionStep(const LabeledMultigraph& g) : g_(g), n_(g.n()) {}

  // Vertices of class `side`, not adjacent to v, not in `skip`, ordered by
  // index or by (degree, index).
  static std::vector<VertexId> targets(const LabeledMultigraph& g, VertexId v, Side side,
                                       const std::vector<VertexId>& skip, bool by_degree) {
    std::vector<VertexId> out;
    for (int i = 1; i <= g.n(); ++i) {
      const VertexId t{side, i};
      if (t == v || g.multiplicity(v, t) > 0) continue;
      if (std::find(skip.begin(), skip.end(), t) != skip.end()) continue;
      out.push_back(t);
    }
    if (by_degree) {
      std::stable_sort(out.begin(), out.end(),
                       [&](const VertexId& p, const VertexId& q) { return g.degree(p) < g.degree(q); });
    }
    return out;
  }

  // Targets in `defer` go last, so they are used only when nothing else is left.
  static Resolution resolve(LabeledMultigraph& g, VertexId v, const std::vector<VertexId>& skip, bool by_degree,
                            const std::vector<VertexId>& defer = {}) {
    auto order = targets(g, v, opposite(v.side), skip, by_degree);
    std::stable_partition(order.begin(), order.end(), [&](const VertexId& t) {
      return std::find(defer.begin(), defer.end(), t) == defer.end();
    });
    return g.resolve(v, order);
  }

  // Checks that the removed vertices carry only simple crossing edges and that
  // the rest satisfies e <= 2(n-t)-3 and max degree <= n-t.
  static bool valid(const LabeledMultigraph& g, const std::vector<int>& removed, std::string* why = nullptr) {
    const int n = g.n();
    const int t = static_cast<int>(removed.size()) / 2;
    std::vector<char> gone(static_cast<std::size_t>(g.num_vertices()), 0);
    int per_side[2] = {0, 0};
    for (int s : removed) {
      if (gone[static_cast<std::size_t>(s)]) return fail(why, "vertex removed twice");
      gone[static_cast<std::size_t>(s)] = 1;
      ++per_side[static_cast<int>(g.side_of(s))];
    }
    if (per_side[0] != t || per_side[1] != t) return fail(why, "unbalanced removal");
    int remaining = 0;
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int id = 0; id < g.num_edges(); ++id) {
      const auto& e = g.edge(id);
      const bool touches = gone[static_cast<std::size_t>(e.u)] || gone[static_cast<std::size_t>(e.v)];
      if (touches) {
        if (!g.is_crossing(id)) return fail(why, "monochromatic edge at a removed vertex");
        if (g.multiplicity_slots(e.u, e.v) != 1) return fail(why, "multiple edge at a removed vertex");
      } else {
        ++remaining;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
      }
    }
    if (remaining > 2 * (n - t) - 3) {
      return fail(why, "too many edges remain: " + std::to_string(remaining));
    }
    for (int d : deg) {
      if (d > n - t) return fail(why, "degree " + std::to_string(d) + " exceeds " + std::to_string(n - t));
    }
    return true;
  }

  /// Three vertices of degree n in A: resolve them (the one with the largest
  /// multiplicity towards the other two first), then three vertices of B that
  /// were isolated; delete all six.
  std::optional<StepPlan> three_full() const {
    std::vector<VertexId> full;
    for (int i = 1; i <= n_; ++i) {
      if (g_.degree(a(i)) == n_) full.push_back(a(i));
    }
    if (full.size() < 3) return std::nullopt;
    full.resize(3);
    std::size_t lead = 0;
    int best = -1;
    for (std::size_t i = 0; i < 3; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) s += g_.multiplicity(full[i], full[j]);
      }
      if (s > best) {
        best = s;
        lead = i;
      }
    }
    std::rotate(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(lead), full.begin() + static_cast<std::ptrdiff_t>(lead) + 1);
    std::vector<VertexId> isolated;
    for (int i = 1; i <= n_ && isolated.size() < 3; ++i) {
      if (g_.degree(b(i)) == 0) isolated.push_back(b(i));
    }
    if (isolated.size() < 3) return std::nullopt;

    StepPlan p{g_, {}, "three-full"};
    for (const auto& v : full) resolve(p.g, v, {}, false);
    for (const auto& v : isolated) resolve(p.g, v, full, false);
    for (const auto& v : full) p.removed.push_back(p.g.slot(v));
    for (const auto& v : isolated) p.removed.push_back(p.g.slot(v));
    return p;
  }

  /// gamma_B(u) >= 2, or gamma_B(u) = 1 with an A-neighbor.
  StepPlan case1(VertexId u) const {
    StepPlan p{g_, {}, "case1"};
    auto& g = p.g;
    const auto na = g.neighbors(u, Side::A);
    std::optional<VertexId> partner;
    for (const auto& w : na) {
      if (!partner || g.degree(w) > g.degree(*partner)) partner = w;
    }
    const Resolution r = resolve(g, u, {}, false);
    std::optional<VertexId> v;
    if (partner) {
      for (const auto& l : r.lifts) {
        if (l.other == *partner) {
          v = l.target;
          break;
        }
      }
    } else {
      v = g.neighbors(u, Side::B).front();
    }
    if (!v) throw std::logic_error("case1: no lift target for the partner edge");
    resolve(g, *v, {u}, true);
    p.removed = {g.slot(u), g.slot(*v)};
    return p;
  }

  /// gamma_B(u) = 1 and N_A(u) empty: u carries a single crossing bundle uu'.
  StepPlan case2(VertexId u) const {
    auto& g0 = g_;
    const VertexId up = g0.neighbors(u, Side::B).front();
    for (int id = 0; id < g0.num_edges(); ++id) {
      if (!g0.is_crossing(id)) continue;
      const auto& e = g0.edge(id);
      const VertexId x = g0.vertex(e.u), y = g0.vertex(e.v);
      if ((x == u && y == up) || (x == up && y == u)) continue;
      StepPlan p{g0, {}, "case2-crossing"};
      const VertexId vp = x.side == Side::B ? x : y;
      resolve(p.g, u, {}, false, {vp});
      resolve(p.g, vp, {u}, false);
      p.removed = {p.g.slot(u), p.g.slot(vp)};
      return p;
    }

    StepPlan p{g0, {}, "case2-reroute"};
    auto& g = p.g;
    const VertexId av = lowest_degree(g, Side::A, {u});
    const VertexId bv = lowest_degree(g, Side::B, {up});
    int mono = -1;
    VertexId lift_to = bv;
    for (int id : g.edges_within(Side::A)) {
      if (!touches(g, id, av)) {
        mono = id;
        break;
      }
    }
    if (mono < 0) {
      lift_to = av;
      for (int id : g.edges_within(Side::B)) {
        if (!touches(g, id, bv)) {
          mono = id;
          break;
        }
      }
    }
    if (mono < 0) throw std::logic_error("case2: no monochromatic edge avoiding a and b");
    g.lift(mono, lift_to);
    int copy = -1;
    for (int id : g.incident(u)) {
      if (g.vertex(g.other_end(id, g.slot(u))) == up) {
        copy = id;
        break;
      }
    }
    // u-u' becomes u-b-a-u'.
    g.lift(copy, bv);
    const int fresh = g.num_edges() - 1;
    const int tail = touches(g, fresh, up) ? fresh : copy;
    g.lift(tail, av);
    resolve(g, av, {}, true, {bv});
    resolve(g, bv, {av}, true);
    p.removed = {g.slot(av), g.slot(bv)};
    return p;
  }

  /// gamma_B(u) = 0: every edge at u stays inside A.
  StepPlan case3(VertexId u) const {
    auto& g0 = g_;
    std::optional<VertexId> up;
    for (const auto& w : g0.neighbors(u, Side::A)) {
      if (!up || g0.degree(w) > g0.degree(*up)) up = w;
    }
    if (!up) throw std::logic_error("case3: isolated maximum degree vertex");
    auto independent = [&](int id) { return !touches(g0, id, u) && !touches(g0, id, *up); };
    int indep = -1;
    for (int id = 0; id < g0.num_edges() && indep < 0; ++id) {
      if (g0.is_crossing(id) && independent(id)) indep = id;
    }
    for (int id = 0; id < g0.num_edges() && indep < 0; ++id) {
      if (independent(id)) indep = id;
    }

    const int uu = pair_instance(g0, u, *up);
    if (indep >= 0) {
      StepPlan p{g0, {}, "case3-independent"};
      auto& g = p.g;
      const auto& e = g.edge(indep);
      VertexId av, bv;
      if (g.is_crossing(indep)) {
        av = g.side_of(e.u) == Side::A ? g.vertex(e.u) : g.vertex(e.v);
        bv = g.side_of(e.u) == Side::A ? g.vertex(e.v) : g.vertex(e.u);
        g.lift(uu, bv);
      } else {
        const std::vector<VertexId> avoid{u, *up, g.vertex(e.u), g.vertex(e.v)};
        av = lowest_degree(g, Side::A, avoid);
        bv = lowest_degree(g, Side::B, avoid);
        const Side es = g.side_of(e.u);
        g.lift(uu, bv);
        g.lift(indep, es == Side::A ? bv : av);
      }
      resolve(g, av, {}, true, {bv});
      resolve(g, bv, {av}, true);
      p.removed = {g.slot(av), g.slot(bv)};
      return p;
    }

    // Every edge meets u or u': pick e at u and f at u' with distinct far ends.
    int ef[2] = {-1, -1};
    for (int id : g0.incident(u)) {
      if (touches(g0, id, *up)) continue;
      const int x = g0.other_end(id, g0.slot(u));
      for (int jd : g0.incident(*up)) {
        if (touches(g0, jd, u)) continue;
        if (g0.other_end(jd, g0.slot(*up)) != x) {
          ef[0] = id;
          ef[1] = jd;
          break;
        }
      }
      if (ef[0] >= 0) break;
    }
    if (ef[0] < 0) throw std::logic_error("case3: no pair of independent edges at u and u'");
    StepPlan p{g0, {}, "case3-pair"};
    auto& g = p.g;
    std::vector<VertexId> avoid;
    for (int id : ef) {
      avoid.push_back(g.vertex(g.edge(id).u));
      avoid.push_back(g.vertex(g.edge(id).v));
    }
    const VertexId av = lowest_degree(g, Side::A, avoid);
    const VertexId bv = lowest_degree(g, Side::B, avoid);
    g.lift(ef[0], bv);
    g.lift(ef[1], bv);
    resolve(g, av, {}, true, {bv});
    resolve(g, bv, {av}, true);
    p.removed = {g.slot(av), g.slot(bv)};
    return p;
  }

  /// Pair search: for some p in A and q in B, lift up to two edges onto p or
  /// q, resolve both (either order, targets by index or by degree) and delete
  /// them. Deeper levels are tried only on small graphs.
  std::optional<StepPlan> search() const {
    std::vector<VertexId> as, bs;
    for (int i = 1; i <= n_; ++i) {
      as.push_back(a(i));
      bs.push_back(b(i));
    }
    auto by_deg = [&](std::vector<VertexId>& vs) {
      std::stable_sort(vs.begin(), vs.end(),
                       [&](const VertexId& x, const VertexId& y) { return g_.degree(x) > g_.degree(y); });
    };
    by_deg(as);
    by_deg(bs);
    const int m = g_.num_edges();
    const int max_depth = n_ <= 12 ? 2 : (n_ <= 40 ? 1 : 0);
    for (int depth = 0; depth <= max_depth; ++depth) {
      for (const auto& pa : as) {
        for (const auto& qb : bs) {
          const VertexId ends[2] = {pa, qb};
          if (depth == 0) {
            if (auto p = finish(g_, pa, qb)) return p;
            continue;
          }
          for (int e1 = 0; e1 < m; ++e1) {
            for (const auto& z1 : ends) {
              if (touches(g_, e1, z1)) continue;
              LabeledMultigraph g1 = g_;
              g1.lift(e1, z1);
              if (depth == 1) {
                if (auto p = finish(g1, pa, qb)) return p;
                continue;
              }
              for (int e2 = e1 + 1; e2 < m; ++e2) {
                for (const auto& z2 : ends) {
                  if (touches(g1, e2, z2)) continue;
                  LabeledMultigraph g2 = g1;
                  g2.lift(e2, z2);
                  if (auto p = finish(g2, pa, qb)) return p;
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  static std::optional<StepPlan> finish(const LabeledMultigraph& base, VertexId pa, VertexId qb) {
    for (int order = 0; order < 2; ++order) {
      for (int policy = 0; policy < 2; ++policy) {
        StepPlan p{base, {}, "search"};
        const VertexId first = order == 0 ? pa : qb;
        const VertexId second = order == 0 ? qb : pa;
        try {
          resolve(p.g, first, {}, policy == 1, {second});
          resolve(p.g, second, {first}, policy == 1);
        } catch (const InsufficientTargets&) {
          continue;
        }
        p.removed = {p.g.slot(pa), p.g.slot(qb)};
        if (valid(p.g, p.removed)) return p;
      }
    }
    return std::nullopt;
  }

  static bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
  }

  static bool touches(const LabeledMultigraph& g, int id, VertexId v) {
    const int s = g.slot(v);
    return g.edge(id).u == s || g.edge(id).v == s;
  }

  static VertexId lowest_degree(const LabeledMultigraph& g, Side side, const std::vector<VertexId>& avoid) {
    std::optional<VertexId> best;
    for (int i = 1; i <= g.n(); ++i) {
      const VertexId v{side, i};
      if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
      if (!best || g.degree(v) < g.degree(*best)) best = v;
    }
    if (!best) throw std::logic_error("no admissible vertex");
    return *best;
  }

  static int pair_instance(const LabeledMultigraph& g, VertexId x, VertexId y) {
    const int sy = g.slot(y);
    for (int id : g.incident(x)) {
      if (g.other_end(id, g.slot(x)) == sy) return id;
    }
    throw std::logic_error("edge not found");
  }

  const LabeledMultigraph& g_;
  int n_;
};

}  // namespace detail

/// Realizer for e(D) <= 2n-3 and max degree <= n, by induction on n.
///
/// Each level pads to exactly 2n-3 edges, performs the liftings of one case
/// (three degree-n vertices in a class, or cases on gamma_B(u) for a maximum
/// degree vertex u), resolves the vertices to delete and commits their edges
/// as single base edges. Levels with n <= 3 go to the exact oracle.
inline RealizeResult realize_edge(const DemandGraph& d, const EdgeRealizerOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  RealizeResult res;
  auto& rep = res.report;
  rep.method = "edge";
  rep.n = d.n();
  rep.max_degree = d.max_degree();
  rep.num_edges = d.num_edges();
  const int n0 = d.n();
  if (n0 < 2 || d.num_edges() > 2 * n0 - 3 || d.max_degree() > n0) {
    rep.outcome = Outcome::ConditionUnmet;
    rep.detail = "requires n >= 2, e(D) <= 2n-3 and max degree <= n";
    rep.millis = detail::millis_since(t0);
    return res;
  }

  detail::InductionFrame frame{LabeledMultigraph::from_demand(d), {}};
  for (int s = 0; s < 2 * n0; ++s) frame.origin.push_back(from_slot(s, n0));
  int next_label = d.num_edges() + 1;
  std::vector<std::pair<EdgeLabel, std::pair<VertexId, VertexId>>> committed;
  std::map<std::string, int> used_cases;

  while (frame.g.n() > 3) {
    const int n = frame.g.n();
    pad_edges(frame.g, 2 * n - 3, next_label);
    const long long lifts_before = frame.g.lift_count();

    // Put the relevant class on side A.
    bool full_in_b = false;
    int full_a = 0, full_b = 0;
    for (int i = 1; i <= n; ++i) {
      full_a += frame.g.degree(a(i)) == n;
      full_b += frame.g.degree(b(i)) == n;
    }
    if (full_a < 3 && full_b >= 3) full_in_b = true;
    std::optional<VertexId> u;
    if (full_in_b) {
      frame.transpose();
    } else if (full_a < 3) {
      for (int s = 0; s < 2 * n; ++s) {
        if (!u || frame.g.degree_slot(s) > frame.g.degree(*u)) u = frame.g.vertex(s);
      }
      if (u->side == Side::B) {
        frame.transpose();
        u = VertexId{Side::A, u->index};
      }
    }

    detail::InductionStep step(frame.g);
    std::optional<detail::StepPlan> plan;
    std::string why;
    try {
      if (!u) {
        plan = step.three_full();
      } else if (frame.g.gamma(*u, Side::B) >= 2 ||
                 (frame.g.gamma(*u, Side::B) == 1 && frame.g.gamma(*u, Side::A) > 0)) {
        plan = step.case1(*u);
      } else if (frame.g.gamma(*u, Side::B) == 1) {
        plan = step.case2(*u);
      } else {
        plan = step.case3(*u);
      }
    } catch (const std::exception& e) {
      why = e.what();
      plan.reset();
    }
    if (plan && !detail::InductionStep::valid(plan->g, plan->removed, &why)) plan.reset();
    if (!plan) {
      if (!opt.allow_fallback) {
        throw std::logic_error("edge realizer step failed at n=" + std::to_string(n) + " (" + why + ") on" +
                               detail::edge_string(frame.g));
      }
      plan = step.search();
      if (!plan && n <= kOracleFrame) {
        ++rep.fallback_steps;
        ++used_cases["oracle"];
        break;
      }
      if (!plan) {
        throw std::logic_error("edge realizer: no valid step at n=" + std::to_string(n) + " (" + why + ") on" +
                               detail::edge_string(frame.g));
      }
      ++rep.fallback_steps;
    }
    ++rep.induction_steps;
    ++used_cases[plan->name];
    rep.liftings += plan->g.lift_count() - lifts_before;

    // Commit edges at removed vertices and build the smaller frame.
    const auto& g = plan->g;
    std::vector<char> gone(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int s : plan->removed) gone[static_cast<std::size_t>(s)] = 1;
    const int t = static_cast<int>(plan->removed.size()) / 2;
    const int m = n - t;
    std::vector<int> remap(static_cast<std::size_t>(g.num_vertices()), -1);
    detail::InductionFrame next{LabeledMultigraph(m), std::vector<VertexId>(static_cast<std::size_t>(2 * m))};
    int ia = 0, ib = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
      if (gone[static_cast<std::size_t>(s)]) continue;
      const int ns = g.side_of(s) == Side::A ? ia++ : m + ib++;
      remap[static_cast<std::size_t>(s)] = ns;
      next.origin[static_cast<std::size_t>(ns)] = frame.origin[static_cast<std::size_t>(s)];
    }
    for (const auto& e : g.edges()) {
      if (gone[static_cast<std::size_t>(e.u)] || gone[static_cast<std::size_t>(e.v)]) {
        committed.push_back({e.label, {frame.origin[static_cast<std::size_t>(e.u)], frame.origin[static_cast<std::size_t>(e.v)]}});
      } else {
        next.g.add_edge_slots(e.label, remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)]);
      }
    }
    frame = std::move(next);
  }

  // Base level: exact search over the remaining instances.
  std::vector<std::pair<VertexId, VertexId>> demands;
  for (const auto& e : frame.g.edges()) demands.emplace_back(frame.g.vertex(e.u), frame.g.vertex(e.v));
  const auto base = edp_search(frame.g.n(), demands,
                               SearchBudget{frame.g.n(), static_cast<int>(demands.size()), 200'000'000, 0.0});
  if (base.status != OracleStatus::Feasible) {
    throw std::logic_error("edge realizer: level with n=" + std::to_string(frame.g.n()) + " left to the oracle is " +
                           to_string(base.status) + " on" + detail::edge_string(frame.g));
  }
  LabeledMultigraph final_graph(n0);
  for (const auto& [label, ends] : committed) final_graph.add_edge(label, ends.first, ends.second);
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const auto& path = base.paths[i];
    const EdgeLabel label = frame.g.edge(static_cast<int>(i)).label;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const auto& o1 = frame.origin[static_cast<std::size_t>(to_slot(path[k], frame.g.n()))];
      const auto& o2 = frame.origin[static_cast<std::size_t>(to_slot(path[k + 1], frame.g.n()))];
      final_graph.add_edge(label, o1, o2);
    }
  }
  Realization r = extract_paths(final_graph, d);
  const auto check = verify_realization(d, r);
  if (!check) {
    throw std::logic_error(std::string("edge realizer produced an invalid realization: ") + to_string(check.violation) +
                           " " + check.witness);
  }
  for (const auto& [name, count] : used_cases) {
    if (!rep.detail.empty()) rep.detail += ' ';
    rep.detail += name + "=" + std::to_string(count);
  }
  rep.max_path_length = r.max_path_length();
  rep.outcome = Outcome::Realized;
  res.realization = std::move(r);
  rep.millis = detail::millis_since(t0);
  return res;
}

}  // namespace edp
