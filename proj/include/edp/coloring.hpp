#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edp/labeled_multigraph.hpp"

namespace edp {

/// A loopless multigraph given as an edge list over vertices 0..num_vertices-1.
/// Edge order is significant: colorings are indexed by it.
struct EdgeList {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int size() const noexcept { return static_cast<int>(edges.size()); }

  int max_degree() const {
    std::vector<int> deg(static_cast<std::size_t>(num_vertices), 0);
    for (const auto& [u, v] : edges) {
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }

  /// Incident edge indices per vertex, each list ascending.
  struct Incidence {
    std::vector<int> start;  // num_vertices + 1 offsets into ids
    std::vector<int> ids;

    std::span<const int> operator[](std::size_t x) const {
      return {ids.data() + start[x], static_cast<std::size_t>(start[x + 1] - start[x])};
    }
  };

  Incidence incidence() const {
    Incidence inc;
    inc.start.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
    for (const auto& [u, v] : edges) {
      ++inc.start[static_cast<std::size_t>(u) + 1];
      ++inc.start[static_cast<std::size_t>(v) + 1];
    }
    for (std::size_t x = 0; x < static_cast<std::size_t>(num_vertices); ++x) inc.start[x + 1] += inc.start[x];
    inc.ids.resize(2 * edges.size());
    std::vector<int> fill(inc.start.begin(), inc.start.end() - 1);
    for (int i = 0; i < size(); ++i) {
      const auto& [u, v] = edges[static_cast<std::size_t>(i)];
      inc.ids[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = i;
      inc.ids[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = i;
    }
    return inc;
  }

  /// Restriction of a labeled graph to the given instance ids (in that order).
  static EdgeList from(const LabeledMultigraph& g, const std::vector<int>& ids) {
    EdgeList h;
    h.num_vertices = g.num_vertices();
    h.edges.reserve(ids.size());
    for (int id : ids) h.edges.emplace_back(g.edge(id).u, g.edge(id).v);
    return h;
  }
};

/// Assignment of colors 1..k to the edges of an EdgeList (0 = uncolored).
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int k, int num_edges)
      : k_(k), color_(static_cast<std::size_t>(num_edges), 0), sizes_(static_cast<std::size_t>(k) + 1, 0) {}

  int k() const noexcept { return k_; }
  int num_edges() const noexcept { return static_cast<int>(color_.size()); }
  int color(int edge) const { return color_[static_cast<std::size_t>(edge)]; }
  const std::vector<int>& colors() const noexcept { return color_; }

  void set(int edge, int c) {
    auto& slot = color_[static_cast<std::size_t>(edge)];
    if (slot) --sizes_[static_cast<std::size_t>(slot)];
    slot = c;
    if (c) ++sizes_[static_cast<std::size_t>(c)];
  }

  /// |c^{-1}(i)| in O(1).
  int class_size(int c) const { return sizes_[static_cast<std::size_t>(c)]; }

  std::vector<int> class_sizes() const { return {sizes_.begin() + 1, sizes_.end()}; }

  int colors_used() const {
    return static_cast<int>(std::count_if(sizes_.begin() + 1, sizes_.end(), [](int s) { return s > 0; }));
  }

  /// Grows the palette to k colors (existing colors unchanged).
  void widen(int k) {
    if (k > k_) {
      k_ = k;
      sizes_.resize(static_cast<std::size_t>(k) + 1, 0);
    }
  }

  std::vector<int> members(int c) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e) {
      if (color(e) == c) out.push_back(e);
    }
    return out;
  }

 private:
  int k_ = 0;
  std::vector<int> color_;
  std::vector<int> sizes_;
};

/// Greedy coloring ran out of admissible colors for `edge`.
class ColoringFailure : public std::runtime_error {
 public:
  ColoringFailure(int edge, const std::string& what) : std::runtime_error(what), edge_(edge) {}
  int edge() const noexcept { return edge_; }

 private:
  int edge_;
};

/// Every edge colored, colors in 1..k, and no two edges at a vertex share a color.
inline bool is_proper(const EdgeList& h, const EdgeColoring& c) {
  if (c.num_edges() != h.size()) return false;
  std::vector<std::set<int>> seen(static_cast<std::size_t>(h.num_vertices));
  for (int e = 0; e < h.size(); ++e) {
    const int col = c.color(e);
    if (col < 1 || col > c.k()) return false;
    const auto& [u, v] = h.edges[static_cast<std::size_t>(e)];
    if (!seen[static_cast<std::size_t>(u)].insert(col).second) return false;
    if (!seen[static_cast<std::size_t>(v)].insert(col).second) return false;
  }
  return true;
}

/// Max minus min class size over colors 1..k.
inline int spread(const std::vector<int>& sizes) {
  if (sizes.empty()) return 0;
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo;
}

/// Greedy coloring where `allowed(edge, color)` filters the palette 1..k.
/// Edges are processed in index order and take the smallest admissible color
/// not already used at either endpoint.
template <typename Allowed>
EdgeColoring greedy_color_if(const EdgeList& h, int k, Allowed&& allowed) {
  EdgeColoring c(k, h.size());
  const auto inc = h.incidence();
  std::vector<char> busy(static_cast<std::size_t>(k) + 2, 0);
  std::vector<int> marked;
  for (int e = 0; e < h.size(); ++e) {
    const auto& [u, v] = h.edges[static_cast<std::size_t>(e)];
    marked.clear();
    for (int end : {u, v}) {
      for (int f : inc[static_cast<std::size_t>(end)]) {
        const int col = c.color(f);
        if (col && !busy[static_cast<std::size_t>(col)]) {
          busy[static_cast<std::size_t>(col)] = 1;
          marked.push_back(col);
        }
      }
    }
    int pick = 0;
    for (int col = 1; col <= k; ++col) {
      if (!busy[static_cast<std::size_t>(col)] && allowed(e, col)) {
        pick = col;
        break;
      }
    }
    for (int col : marked) busy[static_cast<std::size_t>(col)] = 0;
    if (!pick) throw ColoringFailure(e, "greedy coloring: no admissible color for edge " + std::to_string(e));
    c.set(e, pick);
  }
  return c;
}

/// Greedy (list) edge coloring with palette 1..k. With `lists`, edge e may only
/// use colors from lists[e], tried in list order. Always succeeds when every
/// list has at least 2*Delta(h)-1 entries.
inline EdgeColoring greedy_color(const EdgeList& h, int k, const std::vector<std::vector<int>>* lists = nullptr) {
  if (!lists) return greedy_color_if(h, k, [](int, int) { return true; });
  if (static_cast<int>(lists->size()) != h.size()) throw std::invalid_argument("one list per edge required");
  EdgeColoring c(k, h.size());
  const auto inc = h.incidence();
  for (int e = 0; e < h.size(); ++e) {
    const auto& [u, v] = h.edges[static_cast<std::size_t>(e)];
    int pick = 0;
    for (int col : (*lists)[static_cast<std::size_t>(e)]) {
      if (col < 1 || col > k) continue;
      bool clash = false;
      for (int end : {u, v}) {
        for (int f : inc[static_cast<std::size_t>(end)]) clash = clash || c.color(f) == col;
      }
      if (!clash) {
        pick = col;
        break;
      }
    }
    if (!pick) throw ColoringFailure(e, "greedy list coloring: list exhausted for edge " + std::to_string(e));
    c.set(e, pick);
  }
  return c;
}

namespace detail {

// Edge of color `col` at vertex x, or -1.
inline int edge_with_color(const EdgeList::Incidence& inc, const EdgeColoring& c, int x, int col) {
  for (int f : inc[static_cast<std::size_t>(x)]) {
    if (c.color(f) == col) return f;
  }
  return -1;
}

inline int other_end(const EdgeList& h, int e, int x) {
  const auto& [u, v] = h.edges[static_cast<std::size_t>(e)];
  return u == x ? v : u;
}

}  // namespace detail

/// Rebalances a proper coloring into an equitable one with exactly k colors.
///
/// Repeatedly pairs the largest class x with the smallest class y and swaps x
/// and y along the odd path components of H_{x,y} that carry one more x-edge
/// than y-edges, until the pair differs by at most one. Only whole components
/// are swapped, so properness is kept.
inline EdgeColoring make_equitable(const EdgeList& h, EdgeColoring c, int k) {
  if (k < 1) throw std::invalid_argument("make_equitable: k must be positive");
  for (int e = 0; e < h.size(); ++e) {
    if (c.color(e) < 1 || c.color(e) > k) throw std::invalid_argument("make_equitable: color outside 1..k");
  }
  c.widen(k);
  const auto inc = h.incidence();
  std::vector<std::vector<int>> members(static_cast<std::size_t>(k) + 1);
  for (int e = 0; e < h.size(); ++e) members[static_cast<std::size_t>(c.color(e))].push_back(e);

  std::set<std::pair<int, int>> order;  // (size, color)
  for (int col = 1; col <= k; ++col) order.emplace(c.class_size(col), col);

  std::vector<int> stamp(static_cast<std::size_t>(h.size()), -1);
  std::vector<int> pool, component;
  int round = 0;
  while (true) {
    const auto [ysize, y] = *order.begin();
    const auto [xsize, x] = *order.rbegin();
    if (xsize - ysize <= 1) break;
    ++round;
    order.erase({xsize, x});
    order.erase({ysize, y});

    pool.assign(members[static_cast<std::size_t>(x)].begin(), members[static_cast<std::size_t>(x)].end());
    pool.insert(pool.end(), members[static_cast<std::size_t>(y)].begin(), members[static_cast<std::size_t>(y)].end());
    for (int start : pool) {
      if (c.class_size(x) - c.class_size(y) <= 1) break;
      if (stamp[static_cast<std::size_t>(start)] == round) continue;
      // Collect the component of H_{x,y} through `start` by walking both ways.
      component.assign(1, start);
      stamp[static_cast<std::size_t>(start)] = round;
      bool cycle = false;
      for (int dir = 0; dir < 2 && !cycle; ++dir) {
        int at = dir == 0 ? h.edges[static_cast<std::size_t>(start)].second : h.edges[static_cast<std::size_t>(start)].first;
        int prev = start;
        while (true) {
          const int want = c.color(prev) == x ? y : x;
          const int f = detail::edge_with_color(inc, c, at, want);
          if (f < 0) break;
          if (f == start) {
            cycle = true;
            break;
          }
          stamp[static_cast<std::size_t>(f)] = round;
          component.push_back(f);
          at = detail::other_end(h, f, at);
          prev = f;
        }
      }
      if (cycle) continue;
      int balance = 0;
      for (int f : component) balance += c.color(f) == x ? 1 : -1;
      if (balance != 1) continue;
      for (int f : component) c.set(f, c.color(f) == x ? y : x);
    }
    members[static_cast<std::size_t>(x)].clear();
    members[static_cast<std::size_t>(y)].clear();
    for (int f : pool) members[static_cast<std::size_t>(c.color(f))].push_back(f);
    std::sort(members[static_cast<std::size_t>(x)].begin(), members[static_cast<std::size_t>(x)].end());
    std::sort(members[static_cast<std::size_t>(y)].begin(), members[static_cast<std::size_t>(y)].end());
    order.emplace(c.class_size(x), x);
    order.emplace(c.class_size(y), y);
  }
  return c;
}

/// Coloring of D[A,B] u D[B] produced by abb_coloring; `coloring` is indexed
/// like `edge_ids` (instance ids of the labeled graph).
struct AbbColoring {
  std::vector<int> edge_ids;
  EdgeColoring coloring;
  int crossing_count = 0;  // the first crossing_count entries are D[A,B], the rest D[B]
};

/// Proper 2*floor(n/2)-coloring of D[A,B] u D[B], equitable on D[B] and with
/// class sizes within 2 of each other on D[A,B].
///
/// Both parts are split into floor(n/2) equitable matchings; D[B]'s sorted by
/// decreasing size (M_i), D[A,B]'s by increasing size (N_i). Each M_i u N_i is a
/// disjoint union of single edges and 2- or 3-edge paths holding one M_i edge,
/// and is 2-colored with colors 2i-1, 2i.
inline AbbColoring abb_coloring(const LabeledMultigraph& g, bool check_precondition = true) {
  const int n = g.n();
  const int m = n / 2;
  AbbColoring out;
  const auto cross = g.crossing_edges();
  const auto inside = g.edges_within(Side::B);
  if (check_precondition) {
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const auto* part : {&cross, &inside}) {
      for (int id : *part) {
        ++deg[static_cast<std::size_t>(g.edge(id).u)];
        ++deg[static_cast<std::size_t>(g.edge(id).v)];
      }
    }
    if (!deg.empty() && 4 * *std::max_element(deg.begin(), deg.end()) > n) {
      throw std::invalid_argument("abb_coloring requires max degree <= n/4");
    }
  }
  out.crossing_count = static_cast<int>(cross.size());
  out.edge_ids = cross;
  out.edge_ids.insert(out.edge_ids.end(), inside.begin(), inside.end());
  out.coloring = EdgeColoring(2 * m, static_cast<int>(out.edge_ids.size()));
  if (out.edge_ids.empty()) return out;
  if (m == 0) throw ColoringFailure(0, "abb_coloring: no colors available for n=1");

  const EdgeList hn = EdgeList::from(g, cross);
  const EdgeList hm = EdgeList::from(g, inside);
  const EdgeColoring cn = make_equitable(hn, greedy_color(hn, m), m);
  const EdgeColoring cm = make_equitable(hm, greedy_color(hm, m), m);

  auto ranked = [m](const EdgeColoring& c, bool decreasing) {
    std::vector<int> cols(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(cols.begin(), cols.end(), [&](int p, int q) {
      return decreasing ? c.class_size(p) > c.class_size(q) : c.class_size(p) < c.class_size(q);
    });
    return cols;
  };
  const auto mrank = ranked(cm, true);
  const auto nrank = ranked(cn, false);

  std::vector<std::vector<int>> mclass(static_cast<std::size_t>(m) + 1), nclass(static_cast<std::size_t>(m) + 1);
  for (int e = 0; e < hm.size(); ++e) mclass[static_cast<std::size_t>(cm.color(e))].push_back(e);
  for (int e = 0; e < hn.size(); ++e) nclass[static_cast<std::size_t>(cn.color(e))].push_back(e);

  const int offset = out.crossing_count;
  std::vector<int> n_at(static_cast<std::size_t>(g.num_vertices()), -1);  // B slot -> N_i edge
  std::vector<char> n_done(static_cast<std::size_t>(hn.size()), 0);
  for (int i = 0; i < m; ++i) {
    const auto& mi = mclass[static_cast<std::size_t>(mrank[static_cast<std::size_t>(i)])];
    const auto& ni = nclass[static_cast<std::size_t>(nrank[static_cast<std::size_t>(i)])];
    const int c1 = 2 * i + 1;
    const int c2 = 2 * i + 2;
    for (int e : ni) {
      const auto& [u, v] = hn.edges[static_cast<std::size_t>(e)];
      n_at[static_cast<std::size_t>(g.side_of(u) == Side::B ? u : v)] = e;
    }
    std::vector<int> three, two, single_m;
    for (int e : mi) {
      const auto& [u, v] = hm.edges[static_cast<std::size_t>(e)];
      const int touching = (n_at[static_cast<std::size_t>(u)] >= 0) + (n_at[static_cast<std::size_t>(v)] >= 0);
      (touching == 2 ? three : touching == 1 ? two : single_m).push_back(e);
    }
    auto paint = [&](int me, int col) {
      out.coloring.set(offset + me, col);
      const auto& [u, v] = hm.edges[static_cast<std::size_t>(me)];
      for (int end : {u, v}) {
        const int ne = n_at[static_cast<std::size_t>(end)];
        if (ne >= 0) {
          out.coloring.set(ne, col == c1 ? c2 : c1);
          n_done[static_cast<std::size_t>(ne)] = 1;
        }
      }
    };
    const std::size_t c3 = three.size();
    const std::size_t c2n = two.size();
    for (std::size_t j = 0; j < c3; ++j) paint(three[j], j < c3 / 2 ? c1 : c2);
    for (std::size_t j = 0; j < c2n; ++j) paint(two[j], j < (c2n + 1) / 2 ? c1 : c2);

    // Remaining single edges are vertex disjoint from everything else in M_i u N_i.
    int m1 = 0, m2 = 0, x1 = 0, x2 = 0;
    for (int e : mi) {
      const int col = out.coloring.color(offset + e);
      m1 += col == c1;
      m2 += col == c2;
    }
    for (int e : ni) {
      const int col = out.coloring.color(e);
      x1 += col == c1;
      x2 += col == c2;
    }
    for (int e : single_m) {
      const bool first = m1 <= m2;
      out.coloring.set(offset + e, first ? c1 : c2);
      (first ? m1 : m2)++;
    }
    for (int e : ni) {
      if (n_done[static_cast<std::size_t>(e)]) continue;
      const bool first = x1 <= x2;
      out.coloring.set(e, first ? c1 : c2);
      (first ? x1 : x2)++;
    }
    for (int e : ni) {
      const auto& [u, v] = hn.edges[static_cast<std::size_t>(e)];
      n_at[static_cast<std::size_t>(g.side_of(u) == Side::B ? u : v)] = -1;
    }
  }
  return out;
}

/// Which partitioner to use where a Shannon-bound coloring is wanted.
enum class Partitioner { Shannon, Greedy };

/// Proper coloring with at most max(floor(3*Delta/2), 1) colors.
///
/// Edges are colored in index order. When no color is free at both ends of uv,
/// a two-color chain swap frees one; if every such chain runs from v back to u,
/// the edge vw colored alpha (alpha missing at u) is uncolored, uv takes alpha,
/// and a gamma/beta chain swap (gamma missing at u and w) frees gamma for vw.
/// The counting argument behind the bound guarantees gamma exists.
inline EdgeColoring shannon_color(const EdgeList& h) {
  const int delta = h.max_degree();
  const int k = std::max(3 * delta / 2, 1);
  EdgeColoring c(k, h.size());
  const auto nv = static_cast<std::size_t>(h.num_vertices);
  const auto width = static_cast<std::size_t>(k) + 1;
  std::vector<int> at(nv * width, -1);  // at[x*width + col] = edge of color col at x
  auto cell = [&](int x, int col) -> int& { return at[static_cast<std::size_t>(x) * width + static_cast<std::size_t>(col)]; };
  auto paint = [&](int e, int col) {
    const auto& [u, v] = h.edges[static_cast<std::size_t>(e)];
    const int old = c.color(e);
    if (old) {
      cell(u, old) = -1;
      cell(v, old) = -1;
    }
    c.set(e, col);
    if (col) {
      cell(u, col) = e;
      cell(v, col) = e;
    }
  };
  auto missing = [&](int x) {
    std::vector<int> out;
    for (int col = 1; col <= k; ++col) {
      if (cell(x, col) < 0) out.push_back(col);
    }
    return out;
  };
  // Maximal path alternating p, q starting at x with color p. Returns edges and end vertex.
  auto chain = [&](int x, int p, int q) {
    std::vector<int> edges;
    int cur = x;
    int col = p;
    while (true) {
      const int f = cell(cur, col);
      if (f < 0) break;
      edges.push_back(f);
      cur = detail::other_end(h, f, cur);
      col = col == p ? q : p;
    }
    return std::pair{edges, cur};
  };
  auto swap_chain = [&](const std::vector<int>& edges, int p, int q) {
    std::vector<int> old(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      old[i] = c.color(edges[i]);
      paint(edges[i], 0);
    }
    for (std::size_t i = 0; i < edges.size(); ++i) paint(edges[i], old[i] == p ? q : p);
  };

  for (int e = 0; e < h.size(); ++e) {
    const auto [u, v] = h.edges[static_cast<std::size_t>(e)];
    const auto mu = missing(u);
    const auto mv = missing(v);
    int common = 0;
    for (int col : mu) {
      if (std::find(mv.begin(), mv.end(), col) != mv.end()) {
        common = col;
        break;
      }
    }
    if (common) {
      paint(e, common);
      continue;
    }
    if (mu.empty() || mv.empty()) throw std::logic_error("shannon_color: degree bound violated");
    const int alpha = mu.front();
    bool done = false;
    for (int beta : mv) {
      auto [edges, end] = chain(v, alpha, beta);
      if (end != u) {
        swap_chain(edges, alpha, beta);
        paint(e, alpha);
        done = true;
        break;
      }
    }
    if (done) continue;
    const int vw = cell(v, alpha);
    const int w = detail::other_end(h, vw, v);
    int gamma = 0;
    for (int col : missing(w)) {
      if (std::find(mu.begin(), mu.end(), col) != mu.end()) {
        gamma = col;
        break;
      }
    }
    if (!gamma) throw std::logic_error("shannon_color: no color missing at both u and w");
    const int beta = mv.front();
    auto [edges, end] = chain(v, gamma, beta);
    if (end != u) {
      swap_chain(edges, gamma, beta);
      paint(e, gamma);
      continue;
    }
    paint(vw, 0);
    paint(e, alpha);
    swap_chain(edges, gamma, beta);
    paint(vw, gamma);
  }
  return c;
}

/// Shannon coloring or the greedy 2*Delta-1 fallback.
inline EdgeColoring partition_into_matchings(const EdgeList& h, Partitioner p) {
  if (p == Partitioner::Shannon) return shannon_color(h);
  return greedy_color(h, std::max(2 * h.max_degree() - 1, 1));
}

}  // namespace edp
