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
#include <unordered_set>
#include <vector>

#include "cyclemap/bonds.hpp"
#include "cyclemap/circuits.hpp"
#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"
#include "cyclemap/gf2.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/limits.hpp"
#include "cyclemap/parallel.hpp"

namespace cyclemap {

// A matroid given by its ground set and explicit circuit family. The circuit
// axioms are not enforced on construction; verify_circuit_axioms checks them.
class Matroid {
 public:
  Matroid() = default;
  Matroid(Ground ground, std::vector<EdgeSet> circuits) : ground_(std::move(ground)) {
    for (const auto& c : circuits) {
      if (c.tag() != ground_.tag || c.ground_size() != ground_.size()) {
        throw Error(ErrorCode::kGroundMismatch, "circuit outside the matroid's ground set");
      }
      if (c.empty()) throw Error(ErrorCode::kEmptyCircuit, "circuits must be nonempty");
    }
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    circuits_ = std::move(circuits);
  }

  const Ground& ground() const noexcept { return ground_; }
  const std::vector<EdgeSet>& circuits() const noexcept { return circuits_; }
  std::size_t size() const noexcept { return ground_.size(); }

  bool is_circuit(const EdgeSet& s) const {
    return std::binary_search(circuits_.begin(), circuits_.end(), s);
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_.tag == b.ground_.tag && a.ground_.names == b.ground_.names &&
           a.circuits_ == b.circuits_;
  }

 private:
  Ground ground_;
  std::vector<EdgeSet> circuits_;
};

namespace detail {

// Per-element incidence bitsets over circuit indices, for "which circuits
// avoid / contain these elements" queries.
class CircuitIndex {
 public:
  explicit CircuitIndex(const Matroid& m)
      : count_(m.circuits().size()), words_((count_ + 63) / 64) {
    containing_.assign(m.size(), std::vector<std::uint64_t>(words_, 0));
    for (std::size_t i = 0; i < count_; ++i) {
      m.circuits()[i].for_each([&](std::size_t e) { containing_[e][i >> 6] |= std::uint64_t{1} << (i & 63); });
    }
    all_.assign(words_, ~std::uint64_t{0});
    if (count_ % 64 != 0 && words_ > 0) all_.back() = (std::uint64_t{1} << (count_ % 64)) - 1;
  }

  using Bits = std::vector<std::uint64_t>;

  // Circuits contained in `x`.
  Bits inside(const EdgeSet& x) const {
    Bits out = all_;
    x.complement().for_each([&](std::size_t e) {
      for (std::size_t w = 0; w < words_; ++w) out[w] &= ~containing_[e][w];
    });
    return out;
  }

  const Bits& containing(std::size_t e) const { return containing_[e]; }
  std::size_t words() const noexcept { return words_; }

 private:
  std::size_t count_;
  std::size_t words_;
  Bits all_;
  std::vector<Bits> containing_;
};

}  // namespace detail

struct AxiomReport {
  enum class Kind { kOk, kAxiomI, kAxiomII };
  Kind kind = Kind::kOk;
  // Axiom I: first ⊊ second. Axiom II: no circuit D ⊆ first ∪ second avoids
  // `common` while containing `target`.
  std::optional<EdgeSet> first;
  std::optional<EdgeSet> second;
  int common = -1;
  int target = -1;

  bool ok() const noexcept { return kind == Kind::kOk; }
};

// Checks incomparability (Axiom I) and the strong circuit elimination form
// (Axiom II: for a in A∩B and b in A⊕B some circuit D ⊆ A∪B has b ∈ D, a ∉ D).
// The violation with the smallest (A, B) pair in canonical order is reported.
inline AxiomReport verify_circuit_axioms(const Matroid& m, const Limits& limits = {}) {
  const auto& cs = m.circuits();
  const std::size_t n = cs.size();
  std::vector<AxiomReport> found(n);

  parallel_for(n, limits.threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && cs[i].is_subset_of(cs[j])) {
        found[i] = {AxiomReport::Kind::kAxiomI, cs[i], cs[j], -1, -1};
        return;
      }
    }
  });
  for (const auto& r : found) {
    if (!r.ok()) return r;
  }

  const detail::CircuitIndex index(m);
  const std::size_t words = index.words();
  parallel_for(n, limits.threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const EdgeSet common = cs[i] & cs[j];
      if (common.empty()) continue;
      const auto inside = index.inside(cs[i] | cs[j]);
      const EdgeSet sym = cs[i] ^ cs[j];
      std::optional<AxiomReport> bad;
      common.for_each([&](std::size_t a) {
        if (bad) return;
        const auto& with_a = index.containing(a);
        sym.for_each([&](std::size_t b) {
          if (bad) return;
          const auto& with_b = index.containing(b);
          for (std::size_t w = 0; w < words; ++w) {
            if ((inside[w] & ~with_a[w] & with_b[w]) != 0) return;
          }
          bad = AxiomReport{AxiomReport::Kind::kAxiomII, cs[i], cs[j], static_cast<int>(a),
                            static_cast<int>(b)};
        });
      });
      if (bad) {
        found[i] = *bad;
        return;
      }
    }
  });
  for (const auto& r : found) {
    if (!r.ok()) return r;
  }
  return {};
}

namespace detail {

// Exact search for a partition of x into circuits: the lowest element must be
// covered by some circuit inside x; every choice is tried.
class DisjointCircuitCover {
 public:
  DisjointCircuitCover(const Matroid& m, const CircuitIndex& index) : m_(m), index_(index) {}

  bool covers(const EdgeSet& x) {
    if (x.empty()) return true;
    if (failed_.count(x)) return false;
    const auto inside = index_.inside(x);
    const auto& with_first = index_.containing(x.first());
    for (std::size_t w = 0; w < index_.words(); ++w) {
      std::uint64_t bits = inside[w] & with_first[w];
      while (bits != 0) {
        const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (covers(x - m_.circuits()[c])) return true;
      }
    }
    failed_.insert(x);
    return false;
  }

 private:
  const Matroid& m_;
  const CircuitIndex& index_;
  std::unordered_set<EdgeSet, EdgeSetHash> failed_;
};

}  // namespace detail

// First pair of circuits whose sum is not a disjoint union of circuits.
inline std::optional<std::pair<EdgeSet, EdgeSet>> binary_violation(const Matroid& m) {
  const auto& cs = m.circuits();
  const detail::CircuitIndex index(m);
  detail::DisjointCircuitCover cover(m, index);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!cs[i].intersects(cs[j])) continue;
      if (!cover.covers(cs[i] ^ cs[j])) return std::make_pair(cs[i], cs[j]);
    }
  }
  return std::nullopt;
}

inline bool is_binary(const Matroid& m) { return !binary_violation(m).has_value(); }

// True iff no circuit of m lies inside s.
inline bool is_independent(const Matroid& m, const EdgeSet& s) {
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [&](const EdgeSet& c) { return c.is_subset_of(s); });
}

// Greedy growth of a circuit-free set; exact for matroids because every
// maximal independent set has the same size.
inline int rank(const Matroid& m) {
  std::vector<std::vector<std::size_t>> through(m.size());
  for (std::size_t i = 0; i < m.circuits().size(); ++i) {
    m.circuits()[i].for_each([&](std::size_t e) { through[e].push_back(i); });
  }
  EdgeSet independent = m.ground().empty_set();
  int r = 0;
  for (std::size_t e = 0; e < m.size(); ++e) {
    EdgeSet grown = independent;
    grown.set(e);
    const bool closes = std::any_of(through[e].begin(), through[e].end(), [&](std::size_t c) {
      return m.circuits()[c].is_subset_of(grown);
    });
    if (!closes) {
      independent = grown;
      ++r;
    }
  }
  return r;
}

// Rank of a binary matroid: |ground| minus the dimension of its circuit space.
inline int rank_from_span(const Matroid& m) {
  return static_cast<int>(m.size()) -
         span(m.ground().size(), m.ground().tag, m.circuits()).dimension();
}

inline bool is_hamiltonian_matroid(const Matroid& m) {
  const auto r = static_cast<std::size_t>(rank(m));
  return std::any_of(m.circuits().begin(), m.circuits().end(),
                     [&](const EdgeSet& c) { return c.count() == r + 1; });
}

// Minimal nonempty members of span(family): the circuits of the binary matroid
// it generates. Enumerates all 2^dim span elements.
inline Matroid span_min(const Ground& ground, const std::vector<EdgeSet>& family,
                        const Limits& limits = {}) {
  const Gf2Space space = span(ground.size(), ground.tag, family);
  if (space.dimension() > limits.span_cap) {
    throw Error(ErrorCode::kDimensionCapExceeded,
                "span of dimension " + std::to_string(space.dimension()) + " exceeds cap " +
                    std::to_string(limits.span_cap));
  }
  std::vector<EdgeSet> elements;
  elements.reserve(std::size_t{1} << space.dimension());
  space.for_each_element([&](const EdgeSet& x) {
    if (x.any()) elements.push_back(x);
  });
  std::stable_sort(elements.begin(), elements.end(),
                   [](const EdgeSet& a, const EdgeSet& b) { return a.count() < b.count(); });
  // Any non-minimal element contains a minimal one of smaller size, which is
  // already collected when the element is reached.
  std::vector<EdgeSet> minimal;
  for (const auto& x : elements) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const EdgeSet& m) { return m.is_subset_of(x); });
    if (!dominated) minimal.push_back(x);
  }
  return Matroid(ground, std::move(minimal));
}

// Fundamental-cycle basis of the cycle space Z(G), built from a BFS forest
// without enumerating circuits.
inline std::vector<EdgeSet> fundamental_cycles(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> parent_edge(n, -1);
  std::vector<int> depth(n, -1);
  EdgeSet tree = g.empty_edges();
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (depth[static_cast<std::size_t>(root)] >= 0) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int e : g.incident(v)) {
        const auto [a, b] = g.endpoints(e);
        const int w = a == v ? b : a;
        if (depth[static_cast<std::size_t>(w)] >= 0) continue;
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        parent_edge[static_cast<std::size_t>(w)] = e;
        tree.set(static_cast<std::size_t>(e));
        queue.push_back(w);
      }
    }
  }
  auto up = [&](int v) {
    const auto [a, b] = g.endpoints(parent_edge[static_cast<std::size_t>(v)]);
    return a == v ? b : a;
  };
  std::vector<EdgeSet> basis;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree.test(static_cast<std::size_t>(e))) continue;
    EdgeSet cycle = g.empty_edges();
    cycle.set(static_cast<std::size_t>(e));
    auto [u, v] = g.endpoints(e);
    while (u != v) {
      if (depth[static_cast<std::size_t>(u)] < depth[static_cast<std::size_t>(v)]) std::swap(u, v);
      cycle.flip(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(u)]));
      u = up(u);
    }
    basis.push_back(cycle);
  }
  return basis;
}

inline Gf2Space cycle_space(const Graph& g) {
  return span(static_cast<std::size_t>(g.edge_count()), g.tag(), fundamental_cycles(g));
}

inline Matroid cycle_matroid(const Graph& g, const Limits& limits = {}) {
  return Matroid(g.ground(), enumerate_circuits(g, limits));
}

// Circuits are the bonds of g (the dual of its cycle matroid).
inline Matroid bond_matroid(const Graph& g, const Limits& limits = {}) {
  return Matroid(g.ground(), bonds(g, limits));
}

// Circuits of g together with all spanning trees. For a non-Hamiltonian
// connected g every circuit has at most rank-many edges, so this family is
// the circuit set of the truncation of the cycle matroid.
inline Matroid truncation(const Graph& g, const Limits& limits = {}) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "truncation needs a connected graph");
  if (is_hamiltonian(g, limits)) {
    throw Error(ErrorCode::kHamiltonianInput, "truncation construction needs a non-Hamiltonian graph");
  }
  auto circuits = enumerate_circuits(g, limits);
  auto trees = spanning_trees(g, limits);
  circuits.insert(circuits.end(), trees.begin(), trees.end());
  return Matroid(g.ground(), std::move(circuits));
}

}  // namespace cyclemap
