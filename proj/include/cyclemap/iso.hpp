// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclemap/graph.hpp"

namespace cyclemap {

namespace detail {

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (x ^ (x >> 31));
}

using Adjacency = std::vector<std::vector<int>>;

inline Adjacency adjacency_of(const Graph& g) {
  Adjacency adj(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

// Colour refinement to a stable partition. New colours are ranks of the
// (colour, sorted neighbour colours) signatures, so two graphs refined as one
// disjoint union get comparable colours.
inline void refine(const Adjacency& adj, std::vector<int>& color) {
  const std::size_t n = adj.size();
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.push_back(color[v]);
      std::vector<int> nb;
      for (int w : adj[v]) nb.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v].second = v;
    }
    std::sort(sig.begin(), sig.end());
    int next = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || sig[i].first != sig[i - 1].first) ++next;
      color[sig[i].second] = next;
    }
    const auto now = static_cast<std::size_t>(next + 1);
    if (now == classes) return;
    classes = now;
  }
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : n_(a.vertex_count()) {
    adj_ = adjacency_of(a);
    const auto adj_b = adjacency_of(b);
    for (const auto& row : adj_b) {
      std::vector<int> shifted;
      for (int w : row) shifted.push_back(w + n_);
      adj_.push_back(std::move(shifted));
    }
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> color(adj_.size(), 0);
    refine(adj_, color);
    if (search(color)) return mapping_;
    return std::nullopt;
  }

 private:
  bool balanced(const std::vector<int>& color) const {
    std::map<int, int> diff;
    for (int v = 0; v < n_; ++v) ++diff[color[static_cast<std::size_t>(v)]];
    for (int v = n_; v < 2 * n_; ++v) --diff[color[static_cast<std::size_t>(v)]];
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

  bool search(const std::vector<int>& color) {
    if (!balanced(color)) return false;
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n_; ++v) cells[color[static_cast<std::size_t>(v)]].push_back(v);
    int target_color = -1;
    std::size_t best = 0;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1 && (target_color < 0 || members.size() < best)) {
        target_color = c;
        best = members.size();
      }
    }
    if (target_color < 0) return finish(color);
    const int v = cells[target_color].front();
    const int fresh = *std::max_element(color.begin(), color.end()) + 1;
    for (int w = n_; w < 2 * n_; ++w) {
      if (color[static_cast<std::size_t>(w)] != target_color) continue;
      auto next = color;
      next[static_cast<std::size_t>(v)] = fresh;
      next[static_cast<std::size_t>(w)] = fresh;
      refine(adj_, next);
      if (search(next)) return true;
    }
    return false;
  }

  bool finish(const std::vector<int>& color) {
    std::unordered_map<int, int> partner;
    for (int w = n_; w < 2 * n_; ++w) partner[color[static_cast<std::size_t>(w)]] = w - n_;
    mapping_.assign(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) mapping_[static_cast<std::size_t>(v)] = partner.at(color[static_cast<std::size_t>(v)]);
    for (int v = 0; v < n_; ++v) {
      std::vector<int> image;
      for (int w : adj_[static_cast<std::size_t>(v)]) image.push_back(mapping_[static_cast<std::size_t>(w)]);
      std::vector<int> actual;
      for (int w : adj_[static_cast<std::size_t>(n_ + mapping_[static_cast<std::size_t>(v)])]) actual.push_back(w - n_);
      std::sort(image.begin(), image.end());
      std::sort(actual.begin(), actual.end());
      if (image != actual) return false;
    }
    return true;
  }

  int n_;
  Adjacency adj_;
  std::vector<int> mapping_;
};

}  // namespace detail

// Isomorphism-invariant fingerprint (vertex/edge counts plus the stable
// colour-refinement histogram).
inline std::uint64_t invariant_hash(const Graph& g) {
  const auto adj = detail::adjacency_of(g);
  std::vector<std::uint64_t> color(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) color[v] = adj[v].size();
  for (std::size_t round = 0; round < adj.size(); ++round) {
    std::vector<std::uint64_t> next(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
      std::vector<std::uint64_t> nb;
      for (int w : adj[v]) nb.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = detail::mix64(0x51ed27, color[v]);
      for (auto c : nb) h = detail::mix64(h, c);
      next[v] = h;
    }
    color = std::move(next);
  }
  std::sort(color.begin(), color.end());
  std::uint64_t h = detail::mix64(static_cast<std::uint64_t>(g.vertex_count()),
                                  static_cast<std::uint64_t>(g.edge_count()));
  for (auto c : color) h = detail::mix64(h, c);
  return h;
}

// Vertex map (index of a -> index of b) that is an isomorphism, if any.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  return detail::IsoSearch(a, b).run();
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

// Keeps one representative per isomorphism class, in insertion order.
class IsoClassSet {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (std::size_t i : bucket) {
      if (are_isomorphic(graphs_[i], g)) return false;
    }
    bucket.push_back(graphs_.size());
    graphs_.push_back(g);
    return true;
  }
  const std::vector<Graph>& graphs() const noexcept { return graphs_; }
  std::vector<Graph> take() && { return std::move(graphs_); }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<Graph> graphs_;
};

namespace detail {

inline Graph with_edge(const Graph& g, int vertices, std::pair<VertexId, VertexId> e) {
  auto pairs = g.edge_id_pairs();
  pairs.push_back(e);
  return build_graph(vertices, pairs);
}

}  // namespace detail

// All graphs with exactly m edges and no isolated vertices, one per
// isomorphism class. Built level by level: each class at m edges arises from
// some class at m-1 edges by adding an edge between existing vertices, a
// pendant edge to a new vertex, or a disjoint new edge.
inline std::vector<std::vector<Graph>> graphs_by_edge_count(int max_edges) {
  std::vector<std::vector<Graph>> levels;
  levels.push_back({build_graph(0, {})});
  for (int m = 1; m <= max_edges; ++m) {
    IsoClassSet next;
    for (const auto& g : levels.back()) {
      const int n = g.vertex_count();
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!g.edge_between(u, v)) next.insert(detail::with_edge(g, n, {u, v}));
        }
        next.insert(detail::with_edge(g, n + 1, {u, n}));
      }
      next.insert(detail::with_edge(g, n + 2, {n, n + 1}));
    }
    levels.push_back(std::move(next).take());
  }
  return levels;
}

// All connected graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> level = {build_graph(n, {})};
  std::vector<Graph> out;
  if (n == 1) out.push_back(level.front());
  for (int m = 1; m <= n * (n - 1) / 2; ++m) {
    IsoClassSet next;
    for (const auto& g : level) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!g.edge_between(u, v)) next.insert(detail::with_edge(g, n, {u, v}));
        }
      }
    }
    level = std::move(next).take();
    for (const auto& g : level) {
      if (is_connected(g)) out.push_back(g);
    }
  }
  return out;
}

}  // namespace cyclemap
