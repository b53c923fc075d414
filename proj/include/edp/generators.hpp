#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edp/demand_graph.hpp"

namespace edp {

enum class Model { Uniform, Bundles, Matching, Regular, ExtremalBundle };

inline const char* to_string(Model m) {
  switch (m) {
    case Model::Uniform: return "uniform";
    case Model::Bundles: return "bundles";
    case Model::Matching: return "matching";
    case Model::Regular: return "regular";
    case Model::ExtremalBundle: return "extremal-bundle";
  }
  return "?";
}

inline std::optional<Model> parse_model(std::string_view s) {
  for (Model m : {Model::Uniform, Model::Bundles, Model::Matching, Model::Regular, Model::ExtremalBundle}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

struct GenParams {
  int n = 2;
  Model model = Model::Uniform;
  std::optional<int> edges;
  std::optional<int> max_degree;
  std::uint64_t seed = 1;
};

/// mt19937_64 with a fixed reduction, so a seed gives the same instance on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int below(int bound) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(bound)); }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(static_cast<int>(i)))]);
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

class Builder {
 public:
  Builder(int n, int cap) : n_(n), cap_(cap), deg_(static_cast<std::size_t>(2 * n), 0) {}

  bool room(int s, int k = 1) const { return deg_[static_cast<std::size_t>(s)] + k <= cap_; }

  void add(int x, int y, int m = 1) {
    deg_[static_cast<std::size_t>(x)] += m;
    deg_[static_cast<std::size_t>(y)] += m;
    const auto key = std::minmax(x, y);
    const auto [it, fresh] = index_.emplace(key, entries_.size());
    if (fresh) {
      entries_.emplace_back(key, m);
    } else {
      entries_[it->second].second += m;
    }
    total_ += m;
  }

  int total() const { return total_; }
  int cap() const { return cap_; }
  int degree(int s) const { return deg_[static_cast<std::size_t>(s)]; }

  DemandGraph build() const {
    DemandGraph d(n_);
    for (const auto& [key, m] : entries_) d.add(from_slot(key.first, n_), from_slot(key.second, n_), m);
    return d;
  }

 private:
  int n_, cap_;
  std::vector<int> deg_;
  std::vector<std::pair<std::pair<int, int>, int>> entries_;
  std::map<std::pair<int, int>, std::size_t> index_;
  int total_ = 0;
};

}  // namespace detail

/// Random demand multigraph. Degrees never exceed max_degree (default n).
///
/// uniform: instances on uniform random vertex pairs; without --edges, pairs
///   of deficient vertices are joined until fewer than two remain.
/// bundles: random pairs with random multiplicities.
/// matching: disjoint pairs of a random vertex order.
/// regular: every vertex gets degree max_degree (random stub pairing).
/// extremal-bundle: (a1,a2) and (b1,b2), n-1 copies each.
inline DemandGraph generate(const GenParams& p) {
  const int n = p.n;
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int cap = p.max_degree.value_or(n);
  if (cap < 0) throw std::invalid_argument("max degree must be non-negative");
  if (p.edges && *p.edges < 0) throw std::invalid_argument("edge count must be non-negative");
  Rng rng(p.seed);
  detail::Builder out(n, cap);
  const int nv = 2 * n;

  switch (p.model) {
    case Model::ExtremalBundle: {
      if (n < 2) throw std::invalid_argument("extremal-bundle needs n >= 2");
      DemandGraph d(n);
      d.add(a(1), a(2), n - 1);
      d.add(b(1), b(2), n - 1);
      return d;
    }
    case Model::Uniform: {
      if (p.edges) {
        const int want = *p.edges;
        for (long long tries = 0; out.total() < want && tries < 100LL * (want + nv); ++tries) {
          const int x = rng.below(nv), y = rng.below(nv);
          if (x != y && out.room(x) && out.room(y)) out.add(x, y);
        }
        break;
      }
      if (!p.max_degree) throw std::invalid_argument("uniform needs --edges or --max-degree");
      std::vector<int> open;
      for (int s = 0; s < nv; ++s) {
        if (out.room(s)) open.push_back(s);
      }
      while (open.size() >= 2) {
        const int i = rng.below(static_cast<int>(open.size()));
        int j = rng.below(static_cast<int>(open.size()) - 1);
        if (j >= i) ++j;
        const int x = open[static_cast<std::size_t>(i)], y = open[static_cast<std::size_t>(j)];
        out.add(x, y);
        for (int k : {std::max(i, j), std::min(i, j)}) {
          if (!out.room(open[static_cast<std::size_t>(k)])) {
            open[static_cast<std::size_t>(k)] = open.back();
            open.pop_back();
          }
        }
      }
      break;
    }
    case Model::Bundles: {
      const int want = p.edges.value_or(n * std::max(cap, 1) / 2);
      for (long long tries = 0; out.total() < want && tries < 100LL * (want + nv); ++tries) {
        const int x = rng.below(nv), y = rng.below(nv);
        if (x == y) continue;
        const int room = std::min({cap - out.degree(x), cap - out.degree(y), want - out.total()});
        if (room <= 0) continue;
        out.add(x, y, 1 + rng.below(room));
      }
      break;
    }
    case Model::Matching: {
      std::vector<int> order(static_cast<std::size_t>(nv));
      for (int s = 0; s < nv; ++s) order[static_cast<std::size_t>(s)] = s;
      rng.shuffle(order);
      const int want = std::min(p.edges.value_or(n), n);
      if (cap < 1 && want > 0) throw std::invalid_argument("matching needs max degree >= 1");
      for (int i = 0; i < want; ++i) out.add(order[static_cast<std::size_t>(2 * i)], order[static_cast<std::size_t>(2 * i + 1)]);
      break;
    }
    case Model::Regular: {
      if (!p.max_degree) throw std::invalid_argument("regular needs --max-degree");
      std::vector<int> stubs;
      for (int s = 0; s < nv; ++s) stubs.insert(stubs.end(), static_cast<std::size_t>(cap), s);
      if (stubs.size() % 2 != 0) throw std::invalid_argument("regular: total degree must be even");
      if (n == 1 && cap > 0) {
        out.add(0, 1, cap);
        break;
      }
      rng.shuffle(stubs);
      // Break loops by swapping with a random stub elsewhere.
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        while (stubs[i] == stubs[i + 1]) {
          const auto j = static_cast<std::size_t>(rng.below(static_cast<int>(stubs.size())));
          if (j / 2 == i / 2) continue;
          const auto partner = j ^ 1U;
          if (stubs[j] == stubs[i] || stubs[partner] == stubs[i + 1]) continue;
          std::swap(stubs[i + 1], stubs[j]);
        }
      }
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) out.add(stubs[i], stubs[i + 1]);
      break;
    }
  }
  return out.build();
}

}  // namespace edp
