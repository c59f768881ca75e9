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
#include <optional>
#include <string>
#include <vector>

#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/limits.hpp"

namespace cyclemap {

namespace detail {

// Each simple cycle is reported once: rooted at its smallest vertex s, walked
// only through vertices greater than s, and accepted in the direction whose
// second vertex is smaller than its last.
class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::vector<EdgeSet> run() {
    const auto n = static_cast<std::size_t>(g_.vertex_count());
    on_path_.assign(n, 0);
    for (int s = 0; s < g_.vertex_count(); ++s) {
      root_ = s;
      path_.assign(1, s);
      on_path_[static_cast<std::size_t>(s)] = 1;
      extend(s, g_.empty_edges());
      on_path_[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void extend(int u, const EdgeSet& used) {
    for (int e : g_.incident(u)) {
      if (used.test(static_cast<std::size_t>(e))) continue;
      const auto [a, b] = g_.endpoints(e);
      const int w = a == u ? b : a;
      if (w == root_) {
        if (path_.size() >= 3 && path_[1] < u) {
          if (out_.size() >= budget_) {
            throw Error(ErrorCode::kCircuitBudgetExceeded,
                        "more than " + std::to_string(budget_) + " circuits");
          }
          EdgeSet c = used;
          c.set(static_cast<std::size_t>(e));
          out_.push_back(c);
        }
        continue;
      }
      if (w < root_ || on_path_[static_cast<std::size_t>(w)]) continue;
      on_path_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      EdgeSet next = used;
      next.set(static_cast<std::size_t>(e));
      extend(w, next);
      path_.pop_back();
      on_path_[static_cast<std::size_t>(w)] = 0;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  int root_ = 0;
  std::vector<int> path_;
  std::vector<char> on_path_;
  std::vector<EdgeSet> out_;
};

// Depth-first search for one cycle whose vertex set contains `required`.
class ThroughSearch {
 public:
  ThroughSearch(const Graph& g, VertexMask required, std::uint64_t budget)
      : g_(g), required_(required), budget_(budget) {}

  std::optional<EdgeSet> run() {
    if (required_ == 0 || g_.edge_count() < 3) {
      if (required_ == 0) return any_cycle();
      return std::nullopt;
    }
    for (VertexMask rest = required_; rest != 0; rest &= rest - 1) {
      if (g_.degree(std::countr_zero(rest)) < 2) return std::nullopt;
    }
    root_ = std::countr_zero(required_);
    path_edges_ = g_.empty_edges();
    if (extend(root_, VertexMask{1} << root_, 1)) return path_edges_;
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::optional<EdgeSet> any_cycle() {
    CycleEnumerator probe(g_, ~std::uint64_t{0});
    auto all = probe.run();
    if (all.empty()) return std::nullopt;
    return all.front();
  }

  bool feasible(int u, VertexMask visited) const {
    const VertexMask root_bit = VertexMask{1} << root_;
    const VertexMask open = g_.all_vertices_mask() & ~visited;
    const VertexMask missing = required_ & ~visited;
    // Vertices still to be threaded need two usable neighbours.
    const VertexMask ends = (VertexMask{1} << u) | root_bit;
    for (VertexMask rest = missing; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (std::popcount(g_.neighbors(w) & (open | ends)) < 2) return false;
    }
    // Everything missing, and the root, must be reachable from u through
    // unvisited vertices.
    VertexMask reach = 0;
    VertexMask frontier = g_.neighbors(u) & open;
    while (frontier != 0) {
      reach |= frontier;
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g_.neighbors(std::countr_zero(f));
      frontier = next & open & ~reach;
    }
    if ((missing & ~reach) != 0) return false;
    return (g_.neighbors(u) & root_bit) != 0 || (reach & g_.neighbors(root_)) != 0;
  }

  bool extend(int u, VertexMask visited, int length) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "circuit search exceeded " + std::to_string(budget_) + " nodes");
    }
    const bool complete = (required_ & ~visited) == 0;
    for (int e : g_.incident(u)) {
      const auto [a, b] = g_.endpoints(e);
      const int w = a == u ? b : a;
      if (w == root_) {
        if (complete && length >= 3) {
          path_edges_.set(static_cast<std::size_t>(e));
          return true;
        }
        continue;
      }
      const VertexMask bit = VertexMask{1} << w;
      if (visited & bit) continue;
      if (!feasible(w, visited | bit)) continue;
      path_edges_.set(static_cast<std::size_t>(e));
      if (extend(w, visited | bit, length + 1)) return true;
      path_edges_.reset(static_cast<std::size_t>(e));
    }
    return false;
  }

  const Graph& g_;
  VertexMask required_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int root_ = 0;
  EdgeSet path_edges_;
};

}  // namespace detail

// All circuits (edge sets of simple cycles), each once, in canonical order.
inline std::vector<EdgeSet> enumerate_circuits(const Graph& g, const Limits& limits = {}) {
  return detail::CycleEnumerator(g, limits.circuit_budget).run();
}

inline VertexMask vertex_mask(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= VertexMask{1} << v;
  return m;
}

// A circuit whose vertex set contains every vertex in `required`, if any.
inline std::optional<EdgeSet> find_circuit_through(const Graph& g, VertexMask required,
                                                   const Limits& limits = {}) {
  return detail::ThroughSearch(g, required, limits.search_budget).run();
}

inline std::optional<EdgeSet> find_circuit_through(const Graph& g, const std::vector<int>& required,
                                                   const Limits& limits = {}) {
  return find_circuit_through(g, vertex_mask(required), limits);
}

// Hamiltonian circuit of g, if one exists. Graphs on fewer than three
// vertices have no circuits and so none.
inline std::optional<EdgeSet> find_hamiltonian_circuit(const Graph& g, const Limits& limits = {}) {
  if (g.vertex_count() < 3) return std::nullopt;
  return find_circuit_through(g, g.all_vertices_mask(), limits);
}

inline bool is_hamiltonian(const Graph& g, const Limits& limits = {}) {
  return find_hamiltonian_circuit(g, limits).has_value();
}

// Every (n-1)-subset of vertices lies on a circuit: G is Hamiltonian or every
// vertex-deleted subgraph is.
inline bool is_almost_hamiltonian(const Graph& g, const Limits& limits = {}) {
  if (g.vertex_count() < 3) return false;
  if (is_hamiltonian(g, limits)) return true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!is_hamiltonian(remove_vertex(g, v), limits)) return false;
  }
  return true;
}

}  // namespace cyclemap
