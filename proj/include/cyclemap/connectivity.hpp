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

#include <queue>
#include <vector>

#include "cyclemap/error.hpp"
#include "cyclemap/graph.hpp"

namespace cyclemap {

namespace detail {

// Unit-capacity flow network with every vertex split into in/out halves, so
// the max flow between s_out and t_in counts internally vertex-disjoint paths.
class DisjointPaths {
 public:
  explicit DisjointPaths(const Graph& g) : n_(g.vertex_count()) {
    head_.assign(static_cast<std::size_t>(2 * n_), -1);
    for (int v = 0; v < n_; ++v) add_arc(in(v), out(v));
    for (const auto& [u, v] : g.edges()) {
      add_arc(out(u), in(v));
      add_arc(out(v), in(u));
    }
  }

  // Number of internally disjoint s-t paths, stopping once `enough` is reached.
  int count(int s, int t, int enough) {
    for (auto& a : arcs_) a.flow = 0;
    int flow = 0;
    while (flow < enough && augment(out(s), in(t))) ++flow;
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
    int flow;
  };
  int in(int v) const { return 2 * v; }
  int out(int v) const { return 2 * v + 1; }

  void add_arc(int a, int b) {
    arcs_.push_back({b, head_[static_cast<std::size_t>(a)], 1, 0});
    head_[static_cast<std::size_t>(a)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({a, head_[static_cast<std::size_t>(b)], 0, 0});
    head_[static_cast<std::size_t>(b)] = static_cast<int>(arcs_.size()) - 1;
  }

  bool augment(int source, int sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(source);
    seen[static_cast<std::size_t>(source)] = 1;
    while (!q.empty() && !seen[static_cast<std::size_t>(sink)]) {
      const int x = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.flow < arc.cap && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          via[static_cast<std::size_t>(arc.to)] = a;
          q.push(arc.to);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) return false;
    for (int x = sink; x != source;) {
      const int a = via[static_cast<std::size_t>(x)];
      arcs_[static_cast<std::size_t>(a)].flow += 1;
      arcs_[static_cast<std::size_t>(a ^ 1)].flow -= 1;
      x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

// k-connectivity by Menger: more than k vertices and at least k internally
// disjoint paths between every non-adjacent pair.
inline bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  if (g.vertex_count() <= k) return false;
  if (!is_connected(g)) return false;
  detail::DisjointPaths net(g);
  for (int s = 0; s < g.vertex_count(); ++s) {
    for (int t = s + 1; t < g.vertex_count(); ++t) {
      if (g.edge_between(s, t)) continue;
      if (net.count(s, t, k) < k) return false;
    }
  }
  return true;
}

// Largest k for which g is k-connected (0 if disconnected or trivial).
inline int vertex_connectivity(const Graph& g) {
  int k = 0;
  while (is_k_connected(g, k + 1)) ++k;
  return k;
}

}  // namespace cyclemap
