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
#include <vector>

#include "cyclemap/graph.hpp"

namespace cyclemap {

// Path whose interior vertices have degree 2 in the whole graph and whose
// endpoints do not. Endpoints are vertex indices; edges run from first to
// second endpoint.
struct SuspendedChain {
  std::vector<int> edges;
  int first = -1;
  int second = -1;

  friend bool operator==(const SuspendedChain&, const SuspendedChain&) = default;
};

// All maximal suspended chains. A component that is a bare cycle has no
// vertex of degree other than 2 and therefore yields no chain; a closed run
// returning to its own start vertex is skipped because its endpoints coincide.
inline std::vector<SuspendedChain> suspended_chains(const Graph& g) {
  std::vector<SuspendedChain> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) continue;
    for (int start_edge : g.incident(v)) {
      SuspendedChain chain;
      chain.first = v;
      int cur = v;
      int e = start_edge;
      while (true) {
        chain.edges.push_back(e);
        const auto [a, b] = g.endpoints(e);
        const int next = a == cur ? b : a;
        if (g.degree(next) != 2) {
          chain.second = next;
          break;
        }
        const auto& inc = g.incident(next);
        e = inc[0] == e ? inc[1] : inc[0];
        cur = next;
      }
      if (chain.edges.size() < 2 || chain.first >= chain.second) continue;
      out.push_back(std::move(chain));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SuspendedChain& x, const SuspendedChain& y) { return x.edges < y.edges; });
  return out;
}

}  // namespace cyclemap
