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
#include <numeric>
#include <string>
#include <vector>

#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/limits.hpp"

namespace cyclemap {

namespace detail {

inline bool induces_connected(const Graph& g, VertexMask part) {
  if (part == 0) return false;
  VertexMask reach = part & (~part + 1);
  VertexMask frontier = reach;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & part & ~reach;
    reach |= frontier;
  }
  return reach == part;
}

}  // namespace detail

// Minimal edge cuts of a connected graph: cuts of the bipartitions whose two
// sides both induce connected subgraphs.
inline std::vector<EdgeSet> bonds(const Graph& g, const Limits& limits = {}) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "bonds need a connected graph");
  const int n = g.vertex_count();
  if (static_cast<std::size_t>(n) > limits.bond_vertex_cap) {
    throw Error(ErrorCode::kCapExceeded, "bond enumeration limited to " +
                                             std::to_string(limits.bond_vertex_cap) + " vertices");
  }
  std::vector<EdgeSet> out;
  if (n < 2) return out;
  const VertexMask all = g.all_vertices_mask();
  // Sides containing vertex 0 only, so each bipartition appears once.
  const std::uint64_t free_bits = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 0; rest < free_bits; ++rest) {
    const VertexMask side = 1 | (rest << 1);
    if (side == all) continue;
    if (!detail::induces_connected(g, side) || !detail::induces_connected(g, all & ~side)) continue;
    EdgeSet cut = g.empty_edges();
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.endpoints(e);
      if (((side >> u) & 1U) != ((side >> v) & 1U)) cut.set(static_cast<std::size_t>(e));
    }
    out.push_back(cut);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

class SpanningTreeEnumerator {
 public:
  SpanningTreeEnumerator(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {}

  std::vector<EdgeSet> run() {
    std::vector<int> parent(static_cast<std::size_t>(g_.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    recurse(0, g_.empty_edges(), parent, g_.all_edges());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  static int find(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  // Edge i is either contracted into the tree or deleted; deletion is only
  // explored while the remaining edges still connect the graph.
  void recurse(int i, EdgeSet chosen, std::vector<int> parent, EdgeSet available) {
    if (static_cast<int>(chosen.count()) == g_.vertex_count() - 1) {
      if (out_.size() >= cap_) {
        throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(cap_) + " spanning trees");
      }
      out_.push_back(chosen);
      return;
    }
    if (i == g_.edge_count()) return;
    const auto [u, v] = g_.endpoints(i);
    const int ru = find(parent, u);
    const int rv = find(parent, v);
    if (ru != rv) {
      auto joined = parent;
      joined[static_cast<std::size_t>(ru)] = rv;
      EdgeSet with = chosen;
      with.set(static_cast<std::size_t>(i));
      recurse(i + 1, with, std::move(joined), available);
    }
    available.reset(static_cast<std::size_t>(i));
    const auto labels = component_labels(g_, available);
    if (std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; })) {
      recurse(i + 1, chosen, std::move(parent), available);
    }
  }

  const Graph& g_;
  std::uint64_t cap_;
  std::vector<EdgeSet> out_;
};

}  // namespace detail

// Edge sets of all spanning trees (the bases of the cycle matroid).
inline std::vector<EdgeSet> spanning_trees(const Graph& g, const Limits& limits = {}) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "spanning trees need a connected graph");
  if (g.vertex_count() <= 1) return {g.empty_edges()};
  return detail::SpanningTreeEnumerator(g, limits.spanning_tree_cap).run();
}

}  // namespace cyclemap
