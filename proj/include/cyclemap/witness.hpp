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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclemap/circuits.hpp"
#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"
#include "cyclemap/generators.hpp"
#include "cyclemap/gf2.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/limits.hpp"
#include "cyclemap/matroid.hpp"

namespace cyclemap {

enum class Verdict { kNoNontrivialMap, kNontrivialMapExists };
enum class VerdictReason { kHamiltonian, kAlmostHamiltonian, kWitnessFound };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::kNoNontrivialMap ? "no_nontrivial_map" : "nontrivial_map_exists";
}
inline const char* reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::kHamiltonian: return "hamiltonian";
    case VerdictReason::kAlmostHamiltonian: return "almost_hamiltonian";
    case VerdictReason::kWitnessFound: return "witness_found";
  }
  return "unknown";
}

struct WitnessSet {
  EdgeSet edges;
  std::vector<int> odd_vertices;  // vertex indices of odd degree in `edges`
};

struct WitnessReport {
  Verdict verdict = Verdict::kNoNontrivialMap;
  VerdictReason reason = VerdictReason::kHamiltonian;
  std::optional<EdgeSet> witness_s;
  std::optional<Matroid> witness_matroid;
  std::optional<std::vector<int>> odd_vertices;
};

enum class ExtensionStatus { kValidNontrivial, kInvalidSpanInsideCircuit };

struct ExtensionResult {
  Matroid matroid;
  ExtensionStatus status = ExtensionStatus::kValidNontrivial;
  // For an invalid extension: a member of the extended span sitting properly
  // inside a circuit of the graph, and that circuit.
  std::optional<std::pair<EdgeSet, EdgeSet>> offending;
};

namespace detail {

inline std::string edge_list_dump(const Graph& g) {
  std::string s;
  for (int e = 0; e < g.edge_count(); ++e) s += g.edge_name(e) + "\n";
  return s;
}

// Visits the k-subsets of {0..m-1} in lexicographic order until fn returns true.
template <typename Fn>
bool for_each_combination(int m, int k, Fn&& fn) {
  if (k > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline bool is_matching(const Graph& g, const std::vector<int>& edges) {
  VertexMask used = 0;
  for (int e : edges) {
    const auto [u, v] = g.endpoints(e);
    const VertexMask bits = (VertexMask{1} << u) | (VertexMask{1} << v);
    if (used & bits) return false;
    used |= bits;
  }
  return true;
}

inline bool satisfies_no_map_condition(const Graph& g, const Limits& limits) {
  if (g.vertex_count() % 2 == 0) return is_hamiltonian(g, limits);
  return is_almost_hamiltonian(g, limits);
}

}  // namespace detail

// Edge subset whose odd-degree vertices lie on no common circuit. Candidates
// are tried as single edges, then pairs, then larger matchings, then all
// remaining subsets by increasing size.
inline WitnessSet find_witness_set(const Graph& g, const Limits& limits = {}) {
  if (detail::satisfies_no_map_condition(g, limits)) {
    throw Error(ErrorCode::kPreconditionUnmet,
                g.vertex_count() % 2 == 0 ? "graph is Hamiltonian" : "graph is almost Hamiltonian");
  }
  const int m = g.edge_count();
  std::unordered_map<VertexMask, bool> covered;
  std::optional<WitnessSet> found;
  auto try_set = [&](const std::vector<int>& edges) {
    const EdgeSet s = g.edge_set(edges);
    const auto odd = odd_vertices(g, s);
    if (odd.empty()) return false;
    const VertexMask mask = vertex_mask(odd);
    auto it = covered.find(mask);
    if (it == covered.end()) {
      it = covered.emplace(mask, find_circuit_through(g, mask, limits).has_value()).first;
    }
    if (it->second) return false;
    found = WitnessSet{s, odd};
    return true;
  };
  auto phase = [&](int k, int kind) {
    return detail::for_each_combination(m, k, [&](const std::vector<int>& edges) {
      const bool matching = detail::is_matching(g, edges);
      if (kind == 1 && !matching) return false;
      if (kind == 2 && matching) return false;
      return try_set(edges);
    });
  };
  if (phase(1, 0) || phase(2, 0)) return *found;
  for (int k = 3; k <= m; ++k) {
    if (phase(k, 1)) return *found;
  }
  for (int k = 3; k <= m; ++k) {
    if (phase(k, 2)) return *found;
  }
  throw Error(ErrorCode::kNoWitnessFound,
              "no edge subset separates its odd vertices from every circuit", detail::edge_list_dump(g));
}

// The binary matroid generated by the graph's circuits and S. It receives the
// graph's matroid by the identity exactly when no member of the new span sits
// properly inside a graph circuit.
inline ExtensionResult binary_extension(const Graph& g, const EdgeSet& s, const Limits& limits = {}) {
  if (s.empty()) throw Error(ErrorCode::kBadParams, "extension set must be nonempty");
  auto circuits = enumerate_circuits(g, limits);
  if (span(g.edge_count(), g.tag(), circuits).contains(s)) {
    throw Error(ErrorCode::kSInSpan, "set is already a sum of circuits");
  }
  auto family = circuits;
  family.push_back(s);
  ExtensionResult out{span_min(g.ground(), family, limits), ExtensionStatus::kValidNontrivial, std::nullopt};
  for (const auto& c : circuits) {
    if (out.matroid.is_circuit(c)) continue;
    out.status = ExtensionStatus::kInvalidSpanInsideCircuit;
    for (const auto& d : out.matroid.circuits()) {
      if (d.is_proper_subset_of(c)) {
        out.offending = std::make_pair(d, c);
        break;
      }
    }
    break;
  }
  return out;
}

// Decision for "no circuit injection from the cycle matroid into a binary
// matroid is nontrivial": Hamiltonicity for even order, almost-Hamiltonicity
// for odd order. A negative answer comes with a re-validated witness.
inline WitnessReport decide_no_nontrivial_map(const Graph& g, const Limits& limits = {}) {
  if (g.edge_count() == 0) throw Error(ErrorCode::kBadParams, "graph has no edges");
  if (has_isolated_vertex(g)) throw Error(ErrorCode::kIsolatedVertex, "graph has an isolated vertex");
  WitnessReport report;
  if (is_hamiltonian(g, limits)) {
    report.reason = VerdictReason::kHamiltonian;
    return report;
  }
  if (g.vertex_count() % 2 == 1 && is_almost_hamiltonian(g, limits)) {
    report.reason = VerdictReason::kAlmostHamiltonian;
    return report;
  }
  const WitnessSet w = find_witness_set(g, limits);
  ExtensionResult ext = binary_extension(g, w.edges, limits);
  if (ext.status != ExtensionStatus::kValidNontrivial ||
      ext.matroid.circuits().size() <= enumerate_circuits(g, limits).size()) {
    throw Error(ErrorCode::kInternalContradiction, "witness set does not yield a nontrivial extension",
                detail::edge_list_dump(g));
  }
  report.verdict = Verdict::kNontrivialMapExists;
  report.reason = VerdictReason::kWitnessFound;
  report.witness_s = w.edges;
  report.odd_vertices = w.odd_vertices;
  report.witness_matroid = std::move(ext.matroid);
  return report;
}

// Complete oracle: scans w over GF(2)^E outside the cycle space in increasing
// bitmask order and returns the first w for which every circuit stays minimal
// in span(circuits + w). Any binary matroid receiving a nontrivial injection
// has a circuit space W strictly containing the cycle space Z with every
// graph circuit minimal in W; for any w in W \ Z the smaller space
// span(Z + w) inherits that, so scanning single generators is complete.
inline std::optional<EdgeSet> enumerate_single_generator_extensions(const Graph& g,
                                                                    const Limits& limits = {}) {
  const int m = g.edge_count();
  if (static_cast<std::size_t>(m) > limits.single_generator_edge_cap) {
    throw Error(ErrorCode::kCapExceeded, "single-generator scan limited to " +
                                             std::to_string(limits.single_generator_edge_cap) + " edges");
  }
  const auto circuits = enumerate_circuits(g, limits);
  const Gf2Space z = span(static_cast<std::size_t>(m), g.tag(), circuits);
  const std::uint32_t total = std::uint32_t{1} << m;

  // proper[x]: x is a nonempty proper subset of some circuit.
  std::vector<char> proper(total, 0);
  for (const auto& c : circuits) {
    const auto mask = static_cast<std::uint32_t>(c.low_mask());
    for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) proper[sub] = 1;
  }
  std::vector<std::uint32_t> cycle_space;
  z.for_each_element([&](const EdgeSet& x) { cycle_space.push_back(static_cast<std::uint32_t>(x.low_mask())); });

  std::unordered_map<std::uint32_t, bool> coset_valid;
  for (std::uint32_t w = 1; w < total; ++w) {
    const auto rep = static_cast<std::uint32_t>(z.reduce(EdgeSet::from_mask(static_cast<std::size_t>(m), g.tag(), w)).low_mask());
    if (rep == 0) continue;
    auto it = coset_valid.find(rep);
    if (it == coset_valid.end()) {
      const bool valid = std::none_of(cycle_space.begin(), cycle_space.end(),
                                      [&](std::uint32_t x) { return proper[x ^ w] != 0; });
      it = coset_valid.emplace(rep, valid).first;
    }
    if (it->second) return EdgeSet::from_mask(static_cast<std::size_t>(m), g.tag(), w);
  }
  return std::nullopt;
}

struct DualCompleteWitness {
  int n = 0;
  Matroid bond_matroid;      // circuits: bonds of K_n
  Matroid extended;          // minimal members of span(bonds + E(K_n))
  int extension_dimension = 0;
  bool injection = false;    // every bond is a circuit of `extended`
  bool nontrivial = false;   // and `extended` has circuits beyond the bonds
};

inline DualCompleteWitness dual_complete_witness(int n = 5, const Limits& limits = {}) {
  if (n > limits.dual_complete_cap) {
    throw Error(ErrorCode::kCapExceeded, "K_" + std::to_string(n) + " exceeds the cap of " +
                                             std::to_string(limits.dual_complete_cap));
  }
  if (n < 3) throw Error(ErrorCode::kBadParams, "needs n >= 3");
  const Graph kn = complete_graph(n);
  DualCompleteWitness out;
  out.n = n;
  out.bond_matroid = bond_matroid(kn, limits);
  auto family = out.bond_matroid.circuits();
  family.push_back(kn.all_edges());
  out.extension_dimension = span(kn.edge_count(), kn.tag(), family).dimension();
  out.extended = span_min(kn.ground(), family, limits);
  out.injection = std::all_of(out.bond_matroid.circuits().begin(), out.bond_matroid.circuits().end(),
                              [&](const EdgeSet& b) { return out.extended.is_circuit(b); });
  out.nontrivial = out.injection && out.extended.circuits().size() > out.bond_matroid.circuits().size();
  return out;
}

}  // namespace cyclemap
