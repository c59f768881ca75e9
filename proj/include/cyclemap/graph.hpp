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
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"

namespace cyclemap {

using VertexId = std::int64_t;
using VertexMask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

// Simple undirected finite graph. Vertices carry opaque ids in declaration
// order and are addressed internally by their position; edges keep their
// input order as ids. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<VertexId> vertex_ids, const std::vector<std::pair<VertexId, VertexId>>& edge_pairs)
      : ids_(std::move(vertex_ids)) {
    for (std::size_t v = 0; v < ids_.size(); ++v) {
      if (!index_.emplace(ids_[v], static_cast<int>(v)).second) {
        throw Error(ErrorCode::kDuplicateVertex, "vertex " + std::to_string(ids_[v]) + " declared twice");
      }
    }
    if (edge_pairs.size() > EdgeSet::kMaxGround) {
      throw Error(ErrorCode::kGroundTooLarge, std::to_string(edge_pairs.size()) + " edges");
    }
    incident_.assign(ids_.size(), {});
    std::map<std::pair<int, int>, int> seen;
    for (const auto& [a, b] : edge_pairs) {
      const int u = lookup(a);
      const int v = lookup(b);
      if (u == v) throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(a));
      const auto key = std::minmax(u, v);
      const int e = static_cast<int>(edges_.size());
      if (!seen.emplace(key, e).second) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "edge " + std::to_string(a) + "-" + std::to_string(b) + " repeated");
      }
      edges_.emplace_back(u, v);
      incident_[u].push_back(e);
      incident_[v].push_back(e);
    }
    if (ids_.size() <= kMaxMaskVertices) {
      neighbors_.assign(ids_.size(), 0);
      for (const auto& [u, v] : edges_) {
        neighbors_[u] |= VertexMask{1} << v;
        neighbors_[v] |= VertexMask{1} << u;
      }
    }
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t x) { h = (h ^ x) * 1099511628211ULL; };
    mix(ids_.size());
    for (auto id : ids_) mix(static_cast<std::uint64_t>(id));
    for (const auto& [u, v] : edges_) {
      mix(static_cast<std::uint64_t>(u));
      mix(static_cast<std::uint64_t>(v));
    }
    tag_ = h;
  }

  int vertex_count() const noexcept { return static_cast<int>(ids_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<VertexId>& vertex_ids() const noexcept { return ids_; }
  VertexId id(int v) const { return ids_.at(static_cast<std::size_t>(v)); }

  std::optional<int> find_vertex(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::pair<int, int> endpoints(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  // The edges incident to v.
  const std::vector<int>& incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  // Neighbour bitmask; only available for graphs of at most 64 vertices.
  VertexMask neighbors(int v) const {
    require_masks();
    return neighbors_[static_cast<std::size_t>(v)];
  }
  VertexMask all_vertices_mask() const {
    require_masks();
    return ids_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << ids_.size()) - 1;
  }
  bool has_masks() const noexcept { return ids_.size() <= kMaxMaskVertices; }

  std::optional<int> edge_between(int u, int v) const {
    for (int e : incident(u)) {
      const auto [a, b] = edges_[static_cast<std::size_t>(e)];
      if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return std::nullopt;
  }

  std::uint64_t tag() const noexcept { return tag_; }
  EdgeSet empty_edges() const { return EdgeSet(edges_.size(), tag_); }
  EdgeSet all_edges() const { return EdgeSet::full(edges_.size(), tag_); }
  EdgeSet edge_set(const std::vector<int>& edge_ids) const {
    return EdgeSet::from_indices(edges_.size(), tag_, edge_ids);
  }

  std::string edge_name(int e) const {
    const auto [u, v] = endpoints(e);
    return std::to_string(ids_[static_cast<std::size_t>(u)]) + "-" +
           std::to_string(ids_[static_cast<std::size_t>(v)]);
  }

  // Cells named "u-v" by vertex id, tagged like the graph's edge sets.
  Ground ground() const {
    Ground g;
    g.tag = tag_;
    for (int e = 0; e < edge_count(); ++e) g.names.push_back(edge_name(e));
    return g;
  }

  std::vector<std::pair<VertexId, VertexId>> edge_id_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_) out.emplace_back(id(u), id(v));
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  int lookup(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::kUnknownVertex, "vertex " + std::to_string(id));
    return it->second;
  }
  void require_masks() const {
    if (!has_masks()) {
      throw Error(ErrorCode::kGroundTooLarge, "operation limited to graphs of at most 64 vertices");
    }
  }

  std::vector<VertexId> ids_;
  std::map<VertexId, int> index_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<VertexMask> neighbors_;
  std::uint64_t tag_ = 0;
};

inline Graph build_graph(std::vector<VertexId> vertex_ids,
                         const std::vector<std::pair<VertexId, VertexId>>& edge_pairs) {
  return Graph(std::move(vertex_ids), edge_pairs);
}

// Convenience for vertices 0..n-1.
inline Graph build_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_pairs) {
  std::vector<VertexId> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  return Graph(std::move(ids), edge_pairs);
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

// Component label per vertex, restricted to the edges in `edges`.
inline std::vector<int> component_labels(const Graph& g, const EdgeSet& edges) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        if (!edges.test(static_cast<std::size_t>(e))) continue;
        const auto [a, b] = g.endpoints(e);
        const int w = a == v ? b : a;
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto label = component_labels(g, g.all_edges());
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

// Degree of each vertex inside the edge subset.
inline std::vector<int> degrees_in(const Graph& g, const EdgeSet& edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  edges.for_each([&](std::size_t e) {
    const auto [u, v] = g.endpoints(static_cast<int>(e));
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  });
  return deg;
}

// Vertices of odd degree in the subgraph spanned by `edges`.
inline std::vector<int> odd_vertices(const Graph& g, const EdgeSet& edges) {
  const auto deg = degrees_in(g, edges);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] % 2 == 1) out.push_back(v);
  }
  return out;
}

// Vertices touched by `edges`.
inline std::vector<int> vertices_of(const Graph& g, const EdgeSet& edges) {
  const auto deg = degrees_in(g, edges);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] > 0) out.push_back(v);
  }
  return out;
}

// True iff `edges` is the edge set of a simple cycle: nonempty, connected,
// every touched vertex of degree exactly 2.
inline bool is_circuit(const Graph& g, const EdgeSet& edges) {
  if (edges.count() < 3) return false;
  const auto deg = degrees_in(g, edges);
  int start = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = deg[static_cast<std::size_t>(v)];
    if (d != 0 && d != 2) return false;
    if (d == 2 && start < 0) start = v;
  }
  // Walk the cycle from `start`; it must use every edge.
  std::size_t walked = 0;
  int prev_edge = -1;
  int v = start;
  do {
    int next_edge = -1;
    for (int e : g.incident(v)) {
      if (e != prev_edge && edges.test(static_cast<std::size_t>(e))) {
        next_edge = e;
        break;
      }
    }
    const auto [a, b] = g.endpoints(next_edge);
    v = a == v ? b : a;
    prev_edge = next_edge;
    ++walked;
  } while (v != start);
  return walked == edges.count();
}

// A graph that is itself one cycle (connected, 2-regular, at least 3 edges).
inline bool is_cycle_graph(const Graph& g) {
  return !has_isolated_vertex(g) && is_circuit(g, g.all_edges());
}

// G - v, keeping the surviving edges in their original relative order.
// `edge_origin`, when given, receives the source edge id of each new edge.
inline Graph remove_vertex(const Graph& g, int v, std::vector<int>* edge_origin = nullptr) {
  std::vector<VertexId> ids;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u != v) ids.push_back(g.id(u));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (edge_origin) edge_origin->clear();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (a == v || b == v) continue;
    pairs.emplace_back(g.id(a), g.id(b));
    if (edge_origin) edge_origin->push_back(e);
  }
  return Graph(std::move(ids), pairs);
}

// Spanning subgraph keeping only the listed edges, in the listed order.
inline Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int e : edge_ids) {
    const auto [a, b] = g.endpoints(e);
    pairs.emplace_back(g.id(a), g.id(b));
  }
  return Graph(g.vertex_ids(), pairs);
}

}  // namespace cyclemap
