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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cyclemap/circuits.hpp"
#include "cyclemap/error.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/limits.hpp"

namespace cyclemap {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::kBadParams, "cycle needs n >= 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

inline Graph path_graph(int n) {
  if (n < 2) throw Error(ErrorCode::kBadParams, "path needs n >= 2");
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParams, "complete graph needs n >= 1");
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return build_graph(n, edges);
}

// Hub 0 joined to a rim cycle 1..n (n spokes).
inline Graph wheel_graph(int n) {
  if (n < 3) throw Error(ErrorCode::kBadParams, "wheel needs n >= 3 spokes");
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return build_graph(n + 1, edges);
}

// C_n x K2: top cycle 0..n-1, bottom cycle n..2n-1, then the rungs.
inline Graph prism_graph(int n = 3) {
  if (n < 3) throw Error(ErrorCode::kBadParams, "prism needs n >= 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return build_graph(2 * n, edges);
}

// Two triangles sharing vertex 0.
inline Graph bowtie_graph() {
  return build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
inline Graph petersen_graph() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return build_graph(10, edges);
}

// K4 on 0..3 with edge 0-1 subdivided by vertex 4; the chain comes first.
inline Graph k4_subdivided_graph() {
  return build_graph(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline const std::vector<std::string>& named_graph_catalog() {
  static const std::vector<std::string> names = {"cycle",  "complete", "wheel",         "prism",
                                                 "bowtie", "petersen", "k4-subdivided", "path"};
  return names;
}

inline Graph generate_named(const std::string& name, const std::vector<int>& params = {}) {
  auto one = [&](int fallback) -> int {
    if (params.size() > 1) throw Error(ErrorCode::kBadParams, name + " takes one parameter");
    if (params.empty()) {
      if (fallback < 0) throw Error(ErrorCode::kBadParams, name + " needs a size parameter");
      return fallback;
    }
    return params[0];
  };
  auto none = [&] {
    if (!params.empty()) throw Error(ErrorCode::kBadParams, name + " takes no parameters");
  };
  if (name == "cycle") return cycle_graph(one(-1));
  if (name == "complete") return complete_graph(one(-1));
  if (name == "wheel") return wheel_graph(one(-1));
  if (name == "prism") return prism_graph(one(3));
  if (name == "path") return path_graph(one(-1));
  if (name == "bowtie") return none(), bowtie_graph();
  if (name == "petersen") return none(), petersen_graph();
  if (name == "k4-subdivided") return none(), k4_subdivided_graph();
  throw Error(ErrorCode::kUnknownName, "no named graph '" + name + "'");
}

// Finite piece of the layered family whose every circuit meets all three
// labels. Layers are paths P_0..P_depth; every vertex of P_i (i < depth) is
// the root of a tree reaching n-1 fresh vertices of P_{i+1}. Path edges carry
// label 1; tree edges alternate 2/3 along a spine so that each single-colour
// piece of a tree touches at most one attachment vertex.
struct ConstructionWindow {
  Graph graph;
  std::vector<int> labels;  // per edge, in {1, 2, 3}
  int fan_out = 0;
  int depth = 0;
};

namespace detail {

inline bool label_pair_is_forest(const Graph& g, const std::vector<int>& labels, int skip) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (labels[static_cast<std::size_t>(e)] == skip) continue;
    const auto [u, v] = g.endpoints(e);
    const int ru = find(u);
    const int rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

}  // namespace detail

// Every circuit carries all three labels. Checked twice: by enumerating the
// circuits, and by the equivalent statement that dropping any one label
// leaves a forest.
inline void audit_window_labels(const ConstructionWindow& w, const Limits& limits = {}) {
  for (int skip = 1; skip <= 3; ++skip) {
    if (!detail::label_pair_is_forest(w.graph, w.labels, skip)) {
      throw Error(ErrorCode::kSelfTestFailed,
                  "edges without label " + std::to_string(skip) + " contain a circuit");
    }
  }
  for (const auto& c : enumerate_circuits(w.graph, limits)) {
    std::array<bool, 4> seen{};
    c.for_each([&](std::size_t e) { seen[static_cast<std::size_t>(w.labels[e])] = true; });
    if (!seen[1] || !seen[2] || !seen[3]) {
      throw Error(ErrorCode::kSelfTestFailed, "a circuit of the window misses a label");
    }
  }
}

inline ConstructionWindow generate_construction_window(int n, int depth, const Limits& limits = {}) {
  if (n < 3) throw Error(ErrorCode::kBadParams, "window needs n >= 3");
  if (depth < 1) throw Error(ErrorCode::kBadParams, "window needs depth >= 1");
  const int fan_out = n - 1;
  EdgeList edges;
  std::vector<int> labels;
  VertexId next_id = 0;
  auto add = [&](VertexId a, VertexId b, int label) {
    edges.emplace_back(a, b);
    labels.push_back(label);
  };
  auto make_path = [&](std::size_t length) {
    std::vector<VertexId> layer;
    for (std::size_t i = 0; i < length; ++i) {
      layer.push_back(next_id++);
      if (i > 0) add(layer[i - 1], layer[i], 1);
    }
    return layer;
  };

  std::vector<VertexId> layer = make_path(2);
  for (int level = 0; level < depth; ++level) {
    std::vector<VertexId> below = make_path(layer.size() * static_cast<std::size_t>(fan_out));
    std::size_t leaf = 0;
    for (VertexId root : layer) {
      // Spine root - s1 - s2 - ... - s_{fan_out+1}; edge j into s_j has label
      // 2 for odd j, 3 for even j. Vertices s_2.. carry one pendant leaf each,
      // labelled like the spine edge entering them.
      VertexId prev = root;
      for (int j = 1; j <= fan_out + 1; ++j) {
        const VertexId s = next_id++;
        const int label = j % 2 == 1 ? 2 : 3;
        add(prev, s, label);
        if (j >= 2) add(s, below[leaf++], label);
        prev = s;
      }
    }
    layer = std::move(below);
  }
  std::vector<VertexId> ids(static_cast<std::size_t>(next_id));
  for (VertexId i = 0; i < next_id; ++i) ids[static_cast<std::size_t>(i)] = i;
  ConstructionWindow w{Graph(std::move(ids), edges), std::move(labels), fan_out, depth};
  audit_window_labels(w, limits);
  return w;
}

}  // namespace cyclemap
