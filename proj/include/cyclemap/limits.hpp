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

#include <cstddef>
#include <cstdint>

namespace cyclemap {

// Work caps shared by the searches. Every exhaustive routine takes one of
// these; exceeding a cap raises a budget error instead of running unbounded.
struct Limits {
  std::uint64_t circuit_budget = 1'000'000;   // circuits per enumeration
  std::uint64_t search_budget = 10'000'000;   // nodes per Hamiltonicity-style search
  int span_cap = 20;                          // max dimension enumerated by span_min
  std::uint64_t spanning_tree_cap = 1'000'000;
  std::size_t surjection_edge_cap = 10;       // max source edges for map enumeration
  std::size_t single_generator_edge_cap = 16;
  std::size_t bond_vertex_cap = 24;
  int dual_complete_cap = 6;
  int threads = 1;
};

}  // namespace cyclemap
