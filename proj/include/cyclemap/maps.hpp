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
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cyclemap/circuits.hpp"
#include "cyclemap/connectivity.hpp"
#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/limits.hpp"
#include "cyclemap/matroid.hpp"

namespace cyclemap {

// Total map from the source's edge ids to the target's edge ids.
class EdgeMap {
 public:
  EdgeMap(std::shared_ptr<const Graph> source, std::shared_ptr<const Graph> target,
          std::vector<int> assignment)
      : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
    if (static_cast<int>(assignment_.size()) != source_->edge_count()) {
      throw Error(ErrorCode::kBadParams, "assignment must name an image for every source edge");
    }
    for (int t : assignment_) {
      if (t < 0 || t >= target_->edge_count()) {
        throw Error(ErrorCode::kBadParams, "assignment names target edge " + std::to_string(t));
      }
    }
    if (has_isolated_vertex(*target_)) {
      throw Error(ErrorCode::kIsolatedVertex, "target graph of an edge map has an isolated vertex");
    }
  }
  EdgeMap(Graph source, Graph target, std::vector<int> assignment)
      : EdgeMap(std::make_shared<const Graph>(std::move(source)),
                std::make_shared<const Graph>(std::move(target)), std::move(assignment)) {}

  const Graph& source() const noexcept { return *source_; }
  const Graph& target() const noexcept { return *target_; }
  const std::shared_ptr<const Graph>& source_ptr() const noexcept { return source_; }
  const std::shared_ptr<const Graph>& target_ptr() const noexcept { return target_; }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  int operator()(int source_edge) const { return assignment_.at(static_cast<std::size_t>(source_edge)); }

  EdgeSet image(const EdgeSet& source_edges) const {
    EdgeSet out = target_->empty_edges();
    source_edges.for_each([&](std::size_t e) { out.set(static_cast<std::size_t>(assignment_[e])); });
    return out;
  }

  bool is_onto() const {
    std::vector<char> hit(static_cast<std::size_t>(target_->edge_count()), 0);
    for (int t : assignment_) hit[static_cast<std::size_t>(t)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }
  bool is_bijective() const {
    return source_->edge_count() == target_->edge_count() && is_onto();
  }

  // Plain-text dump used as a reproducer for theorem alarms.
  std::string describe() const {
    std::string s = "source:";
    for (int e = 0; e < source_->edge_count(); ++e) s += " " + source_->edge_name(e);
    s += "\ntarget:";
    for (int e = 0; e < target_->edge_count(); ++e) s += " " + target_->edge_name(e);
    s += "\nassignment:";
    for (int t : assignment_) s += " " + std::to_string(t);
    return s + "\n";
  }

 private:
  std::shared_ptr<const Graph> source_;
  std::shared_ptr<const Graph> target_;
  std::vector<int> assignment_;
};

enum class MapKind { kNotCircuitSurjection, kCircuitSurjection, kCircuitInjection };

inline const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::kNotCircuitSurjection: return "not_circuit_surjection";
    case MapKind::kCircuitSurjection: return "circuit_surjection";
    case MapKind::kCircuitInjection: return "circuit_injection";
  }
  return "unknown";
}

struct MapClassification {
  MapKind kind = MapKind::kNotCircuitSurjection;
  bool onto = false;
  bool bijective = false;
  std::optional<EdgeSet> violating_circuit;  // source circuit whose image is no circuit
  std::size_t circuits_checked = 0;
};

inline MapClassification classify_map(const EdgeMap& f, const Limits& limits = {}) {
  MapClassification out;
  out.onto = f.is_onto();
  out.bijective = f.is_bijective();
  for (const auto& c : enumerate_circuits(f.source(), limits)) {
    ++out.circuits_checked;
    if (!is_circuit(f.target(), f.image(c))) {
      out.violating_circuit = c;
      break;
    }
  }
  if (!out.onto || out.violating_circuit) {
    out.kind = MapKind::kNotCircuitSurjection;
  } else {
    out.kind = out.bijective ? MapKind::kCircuitInjection : MapKind::kCircuitSurjection;
  }
  return out;
}

// An injection is trivial when every target circuit is the image of a source
// circuit.
inline bool is_trivial(const EdgeMap& f, const Limits& limits = {}) {
  if (classify_map(f, limits).kind != MapKind::kCircuitInjection) {
    throw Error(ErrorCode::kNotInjection, "triviality is defined for circuit injections");
  }
  std::unordered_set<EdgeSet, EdgeSetHash> images;
  for (const auto& c : enumerate_circuits(f.source(), limits)) images.insert(f.image(c));
  for (const auto& c : enumerate_circuits(f.target(), limits)) {
    if (!images.count(c)) return false;
  }
  return true;
}

// Matroid form with the identity on a shared ground set: the source's circuits
// must all be circuits of the target (an injection), and the injection is
// trivial when the target has no further circuits.
inline bool is_trivial(const Matroid& source, const Matroid& target) {
  if (source.ground().tag != target.ground().tag || source.size() != target.size()) {
    throw Error(ErrorCode::kGroundMismatch, "identity injection needs a shared ground set");
  }
  for (const auto& c : source.circuits()) {
    if (!target.is_circuit(c)) {
      throw Error(ErrorCode::kNotInjection, "a source circuit is not a circuit of the target");
    }
  }
  return target.circuits().size() == source.circuits().size();
}

// Preimages f^-1(e), indexed by target edge.
struct FiberPartition {
  std::vector<EdgeSet> fibers;
};

inline FiberPartition fiber_partition(const EdgeMap& f) {
  FiberPartition p;
  p.fibers.assign(static_cast<std::size_t>(f.target().edge_count()), f.source().empty_edges());
  for (int e = 0; e < f.source().edge_count(); ++e) p.fibers[static_cast<std::size_t>(f(e))].set(static_cast<std::size_t>(e));
  return p;
}

struct FiberReport {
  FiberPartition partition;
  std::size_t circuits_checked = 0;
};

namespace detail {

inline void require_fiber_hypotheses(const EdgeMap& f, const Limits& limits) {
  const auto cls = classify_map(f, limits);
  if (cls.kind == MapKind::kNotCircuitSurjection) {
    throw Error(ErrorCode::kPreconditionUnmet, "map is not a circuit surjection");
  }
  if (!is_k_connected(f.source(), 2)) {
    throw Error(ErrorCode::kPreconditionUnmet, "source is not 2-connected");
  }
  if (is_cycle_graph(f.target())) {
    throw Error(ErrorCode::kPreconditionUnmet, "target is a circuit");
  }
}

}  // namespace detail

// Fibers plus the containment audit: a circuit meeting a fiber contains it.
// Under the hypotheses (circuit surjection, 2-connected source, target not a
// circuit) the audit cannot fail; a failure is reported as a contradiction.
inline FiberReport fibers(const EdgeMap& f, const Limits& limits = {}) {
  detail::require_fiber_hypotheses(f, limits);
  FiberReport report{fiber_partition(f), 0};
  for (const auto& c : enumerate_circuits(f.source(), limits)) {
    ++report.circuits_checked;
    for (const auto& fiber : report.partition.fibers) {
      if (c.intersects(fiber) && !fiber.is_subset_of(c)) {
        throw Error(ErrorCode::kInternalContradiction,
                    "a circuit meets a fiber without containing it", f.describe());
      }
    }
  }
  return report;
}

// Certificate that the chain graph carries the source's cycle matroid under
// the edge bijection `edge_map` (source edge i <-> chain-graph edge
// edge_map[i]).
struct TwoIsomorphismCertificate {
  std::vector<int> edge_map;
  bool identity_graph = false;        // chain graph is the source itself
  std::size_t circuits_compared = 0;
  std::size_t cocycle_pairs_checked = 0;
};

struct Decomposition {
  FiberPartition fibers;
  Graph chain_graph;
  TwoIsomorphismCertificate k;
  Graph quotient;
  EdgeMap h;  // chain graph -> quotient, each chain onto one edge
  EdgeMap q;  // quotient -> target, a circuit injection
};

namespace detail {

inline bool is_bond_pair(const Graph& g, int x, int y) {
  EdgeSet rest = g.all_edges();
  rest.reset(static_cast<std::size_t>(x));
  rest.reset(static_cast<std::size_t>(y));
  auto connected_with = [&](const EdgeSet& edges) {
    const auto label = component_labels(g, edges);
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
  };
  if (connected_with(rest)) return false;
  EdgeSet keep_x = rest;
  keep_x.set(static_cast<std::size_t>(x));
  EdgeSet keep_y = rest;
  keep_y.set(static_cast<std::size_t>(y));
  return connected_with(keep_x) && connected_with(keep_y);
}

// Edges of `chain` form a path whose interior vertices have degree 2 in g.
inline bool forms_suspended_chain(const Graph& g, const EdgeSet& chain) {
  if (chain.count() < 2) return true;
  const auto deg = degrees_in(g, chain);
  int ends = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = deg[static_cast<std::size_t>(v)];
    if (d > 2) return false;
    if (d == 1) ++ends;
    if (d == 2 && g.degree(v) != 2) return false;
  }
  if (ends != 2) return false;
  const auto label = component_labels(g, chain);
  int first = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] == 0) continue;
    if (first < 0) first = label[static_cast<std::size_t>(v)];
    if (label[static_cast<std::size_t>(v)] != first) return false;
  }
  return true;
}

inline std::vector<EdgeSet> retag_all(std::vector<EdgeSet> sets, std::uint64_t tag) {
  for (auto& s : sets) s = s.retagged(tag);
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace detail

// Three-factor decomposition f = q . h . k. Each fiber is collapsed to its
// lowest edge by contraction, giving the quotient; re-subdividing that edge
// into the fiber's edges gives the chain graph, whose cycle matroid is
// certified equal to the source's. The 2-switching sequence behind k is not
// synthesised.
inline Decomposition decompose(const EdgeMap& f, const Limits& limits = {}) {
  FiberReport fr = fibers(f, limits);
  const Graph& src = f.source();
  const auto& parts = fr.partition.fibers;

  TwoIsomorphismCertificate cert;
  for (const auto& fiber : parts) {
    const auto members = fiber.indices();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++cert.cocycle_pairs_checked;
        if (!detail::is_bond_pair(src, members[i], members[j])) {
          throw Error(ErrorCode::kCertificateFailure, "two edges of a fiber do not form a minimal cut",
                      f.describe());
        }
      }
    }
  }

  // Quotient: contract every fiber edge except the lowest one.
  std::vector<int> cls(static_cast<std::size_t>(src.vertex_count()));
  std::iota(cls.begin(), cls.end(), 0);
  auto find = [&](int x) {
    while (cls[static_cast<std::size_t>(x)] != x) x = cls[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& fiber : parts) {
    const auto members = fiber.indices();
    for (std::size_t i = 1; i < members.size(); ++i) {
      const auto [u, v] = src.endpoints(members[i]);
      const int a = find(u);
      const int b = find(v);
      if (a == b) {
        throw Error(ErrorCode::kCertificateFailure, "fiber contraction closes a loop", f.describe());
      }
      cls[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<VertexId> quotient_ids;
  for (int v = 0; v < src.vertex_count(); ++v) {
    if (find(v) == v) quotient_ids.push_back(src.id(v));
  }
  std::vector<std::pair<VertexId, VertexId>> quotient_edges;
  for (const auto& fiber : parts) {
    const auto [u, v] = src.endpoints(static_cast<int>(fiber.first()));
    quotient_edges.emplace_back(src.id(find(u)), src.id(find(v)));
  }
  Graph quotient = [&] {
    try {
      return Graph(quotient_ids, quotient_edges);
    } catch (const Error& e) {
      throw Error(ErrorCode::kCertificateFailure, std::string("quotient is not simple: ") + e.what(),
                  f.describe());
    }
  }();

  // Chain graph: the source itself when every fiber already is a suspended
  // chain, otherwise the quotient with each fiber edge re-subdivided.
  const bool already_chains = std::all_of(parts.begin(), parts.end(), [&](const EdgeSet& fiber) {
    return detail::forms_suspended_chain(src, fiber);
  });
  Graph chain_graph;
  if (already_chains) {
    chain_graph = src;
  } else {
    VertexId fresh = *std::max_element(src.vertex_ids().begin(), src.vertex_ids().end()) + 1;
    std::vector<VertexId> ids = quotient_ids;
    std::vector<std::pair<VertexId, VertexId>> pairs(static_cast<std::size_t>(src.edge_count()));
    for (std::size_t t = 0; t < parts.size(); ++t) {
      const auto members = parts[t].indices();
      VertexId prev = quotient_edges[t].first;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const VertexId next = i + 1 == members.size() ? quotient_edges[t].second : fresh++;
        if (i + 1 != members.size()) ids.push_back(next);
        pairs[static_cast<std::size_t>(members[i])] = {prev, next};
        prev = next;
      }
    }
    chain_graph = Graph(ids, pairs);
  }
  cert.identity_graph = already_chains;
  cert.edge_map.resize(static_cast<std::size_t>(src.edge_count()));
  std::iota(cert.edge_map.begin(), cert.edge_map.end(), 0);

  const auto source_circuits = detail::retag_all(enumerate_circuits(src, limits), chain_graph.tag());
  const auto chain_circuits = enumerate_circuits(chain_graph, limits);
  cert.circuits_compared = source_circuits.size();
  if (source_circuits != chain_circuits) {
    throw Error(ErrorCode::kCertificateFailure, "chain graph has a different cycle matroid", f.describe());
  }
  for (const auto& fiber : parts) {
    if (!detail::forms_suspended_chain(chain_graph, fiber.retagged(chain_graph.tag()))) {
      throw Error(ErrorCode::kCertificateFailure, "a fiber is not a suspended chain of the chain graph",
                  f.describe());
    }
  }

  auto chain_ptr = std::make_shared<const Graph>(chain_graph);
  auto quotient_ptr = std::make_shared<const Graph>(quotient);
  EdgeMap h(chain_ptr, quotient_ptr, f.assignment());
  std::vector<int> identity(parts.size());
  std::iota(identity.begin(), identity.end(), 0);
  EdgeMap q(quotient_ptr, f.target_ptr(), identity);

  if (classify_map(h, limits).kind == MapKind::kNotCircuitSurjection) {
    throw Error(ErrorCode::kCertificateFailure, "chain contraction does not preserve circuits", f.describe());
  }
  if (classify_map(q, limits).kind != MapKind::kCircuitInjection) {
    throw Error(ErrorCode::kCertificateFailure, "quotient map is not a circuit injection", f.describe());
  }
  for (int e = 0; e < src.edge_count(); ++e) {
    if (q(h(cert.edge_map[static_cast<std::size_t>(e)])) != f(e)) {
      throw Error(ErrorCode::kCertificateFailure, "composition differs from the map", f.describe());
    }
  }
  return Decomposition{std::move(fr.partition), std::move(chain_graph), std::move(cert),
                       std::move(quotient),     std::move(h),           std::move(q)};
}

namespace detail {

inline bool induces(const EdgeMap& f, const std::vector<int>& phi) {
  for (int e = 0; e < f.source().edge_count(); ++e) {
    const auto [u, v] = f.source().endpoints(e);
    const auto [a, b] = f.target().endpoints(f(e));
    const int pu = phi[static_cast<std::size_t>(u)];
    const int pv = phi[static_cast<std::size_t>(v)];
    if (!((pu == a && pv == b) || (pu == b && pv == a))) return false;
  }
  return true;
}

inline bool search_vertex_bijection(const EdgeMap& f, std::vector<int>& phi, std::vector<char>& used,
                                    int v) {
  const int n = f.source().vertex_count();
  if (v == n) return induces(f, phi);
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    bool consistent = true;
    for (int e : f.source().incident(v)) {
      const auto [a, b] = f.source().endpoints(e);
      const int other = a == v ? b : a;
      if (other > v) continue;
      const auto [x, y] = f.target().endpoints(f(e));
      const int po = phi[static_cast<std::size_t>(other)];
      if (!((w == x && po == y) || (w == y && po == x))) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    phi[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
    if (search_vertex_bijection(f, phi, used, v + 1)) return true;
    used[static_cast<std::size_t>(w)] = 0;
  }
  phi[static_cast<std::size_t>(v)] = -1;
  return false;
}

}  // namespace detail

// Vertex bijection phi (source index -> target index) with
// f({u, v}) = {phi(u), phi(v)} for every edge, if one exists. A vertex of
// degree >= 2 is forced to the common endpoint of two of its image edges;
// leftover freedom is settled by exhaustive search on graphs of at most 10
// vertices.
inline std::optional<std::vector<int>> induced_vertex_isomorphism(const EdgeMap& f) {
  if (!f.is_bijective()) throw Error(ErrorCode::kNotBijective, "edge map is not a bijection");
  const Graph& s = f.source();
  const Graph& t = f.target();
  const int n = s.vertex_count();
  if (n != t.vertex_count()) return std::nullopt;
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  bool forced_ok = true;
  for (int v = 0; v < n && forced_ok; ++v) {
    const auto& inc = s.incident(v);
    if (inc.size() < 2) continue;
    const auto [a, b] = t.endpoints(f(inc[0]));
    const auto [c, d] = t.endpoints(f(inc[1]));
    if (a == c || a == d) {
      phi[static_cast<std::size_t>(v)] = a;
    } else if (b == c || b == d) {
      phi[static_cast<std::size_t>(v)] = b;
    } else {
      forced_ok = false;
    }
  }
  if (forced_ok) {
    for (int v = 0; v < n; ++v) {
      if (phi[static_cast<std::size_t>(v)] >= 0 || s.degree(v) == 0) continue;
      const int e = s.incident(v).front();
      const auto [a, b] = s.endpoints(e);
      const int other = a == v ? b : a;
      const auto [x, y] = t.endpoints(f(e));
      const int po = phi[static_cast<std::size_t>(other)];
      phi[static_cast<std::size_t>(v)] = po == x ? y : (po == y ? x : (po < 0 ? x : -1));
      if (po < 0) phi[static_cast<std::size_t>(other)] = y;
    }
    std::vector<int> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    bool bijective = true;
    for (int i = 0; i < n; ++i) bijective = bijective && sorted[static_cast<std::size_t>(i)] == i;
    if (bijective && detail::induces(f, phi)) return phi;
  }
  if (n > 10) return std::nullopt;
  std::vector<int> searched(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  if (detail::search_vertex_bijection(f, searched, used, 0)) return searched;
  return std::nullopt;
}

namespace detail {

class SurjectionSearch {
 public:
  SurjectionSearch(const Graph& source, const Graph& target, const Limits& limits,
                   const std::function<void(const std::vector<int>&)>& emit)
      : source_(source), target_(target), emit_(emit) {
    const int ms = source.edge_count();
    const int mt = target.edge_count();
    const std::size_t table = std::size_t{1} << mt;
    is_circuit_.assign(table, 0);
    inside_circuit_.assign(table, 0);
    for (const auto& c : enumerate_circuits(target, limits)) {
      const auto mask = static_cast<std::uint32_t>(c.low_mask());
      is_circuit_[mask] = 1;
      for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
        inside_circuit_[sub] = 1;
        if (sub == 0) break;
      }
    }
    circuits_ = enumerate_circuits(source, limits);
    order_ = edge_order(ms);
    position_.assign(static_cast<std::size_t>(ms), 0);
    for (int i = 0; i < ms; ++i) position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    through_.assign(static_cast<std::size_t>(ms), {});
    remaining_.assign(circuits_.size(), 0);
    for (std::size_t c = 0; c < circuits_.size(); ++c) {
      circuits_[c].for_each([&](std::size_t e) { through_[e].push_back(c); });
      remaining_[c] = static_cast<int>(circuits_[c].count());
    }
    image_.assign(circuits_.size(), 0);
    hits_.assign(static_cast<std::size_t>(mt), 0);
    assignment_.assign(static_cast<std::size_t>(ms), -1);
  }

  void run() { extend(0, 0); }

 private:
  // Greedy order that closes source circuits as early as possible.
  std::vector<int> edge_order(int ms) const {
    std::vector<int> order;
    EdgeSet chosen = source_.empty_edges();
    for (int step = 0; step < ms; ++step) {
      int best = -1;
      std::pair<std::size_t, std::size_t> best_score{0, 0};
      for (int e = 0; e < ms; ++e) {
        if (chosen.test(static_cast<std::size_t>(e))) continue;
        EdgeSet with = chosen;
        with.set(static_cast<std::size_t>(e));
        std::size_t closed = 0;
        std::size_t touched = 0;
        for (const auto& c : circuits_) {
          if (c.is_subset_of(with)) ++closed;
          if (c.test(static_cast<std::size_t>(e))) touched += (c & with).count();
        }
        const std::pair<std::size_t, std::size_t> score{closed, touched};
        if (best < 0 || score > best_score) {
          best = e;
          best_score = score;
        }
      }
      chosen.set(static_cast<std::size_t>(best));
      order.push_back(best);
    }
    return order;
  }

  void extend(int depth, int distinct_hits) {
    const int ms = source_.edge_count();
    const int mt = target_.edge_count();
    if (depth == ms) {
      if (distinct_hits == mt) emit_(assignment_);
      return;
    }
    const int e = order_[static_cast<std::size_t>(depth)];
    const auto& through = through_[static_cast<std::size_t>(e)];
    for (int t = 0; t < mt; ++t) {
      const int hits_after = distinct_hits + (hits_[static_cast<std::size_t>(t)] == 0 ? 1 : 0);
      if (ms - depth - 1 < mt - hits_after) continue;
      bool ok = true;
      for (std::size_t c : through) {
        const std::uint32_t img = image_[c] | (std::uint32_t{1} << t);
        const bool closes = remaining_[c] == 1;
        if (closes ? !is_circuit_[img] : !inside_circuit_[img]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<std::uint32_t> saved;
      saved.reserve(through.size());
      for (std::size_t c : through) {
        saved.push_back(image_[c]);
        image_[c] |= std::uint32_t{1} << t;
        --remaining_[c];
      }
      ++hits_[static_cast<std::size_t>(t)];
      assignment_[static_cast<std::size_t>(e)] = t;
      extend(depth + 1, hits_after);
      assignment_[static_cast<std::size_t>(e)] = -1;
      --hits_[static_cast<std::size_t>(t)];
      for (std::size_t i = 0; i < through.size(); ++i) {
        image_[through[i]] = saved[i];
        ++remaining_[through[i]];
      }
    }
  }

  const Graph& source_;
  const Graph& target_;
  const std::function<void(const std::vector<int>&)>& emit_;
  std::vector<char> is_circuit_;
  std::vector<char> inside_circuit_;
  std::vector<EdgeSet> circuits_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<int> remaining_;
  std::vector<std::uint32_t> image_;
  std::vector<int> hits_;
  std::vector<int> assignment_;
};

}  // namespace detail

inline constexpr int kMaxSurjectionTargetEdges = 24;

// Streams every circuit surjection source -> target as an assignment vector.
// Partial assignments are cut as soon as some source circuit's partial image
// lies in no target circuit, or its complete image is not a circuit.
inline void for_each_circuit_surjection(const Graph& source, const Graph& target,
                                        const std::function<void(const std::vector<int>&)>& emit,
                                        const Limits& limits = {}) {
  if (static_cast<std::size_t>(source.edge_count()) > limits.surjection_edge_cap) {
    throw Error(ErrorCode::kCapExceeded, "source has more than " +
                                             std::to_string(limits.surjection_edge_cap) + " edges");
  }
  if (target.edge_count() > source.edge_count() || target.edge_count() == 0) return;
  if (target.edge_count() > kMaxSurjectionTargetEdges) {
    throw Error(ErrorCode::kCapExceeded, "target too large for surjection enumeration");
  }
  detail::SurjectionSearch(source, target, limits, emit).run();
}

inline std::vector<EdgeMap> enumerate_circuit_surjections(const Graph& source, const Graph& target,
                                                          const Limits& limits = {}) {
  auto s = std::make_shared<const Graph>(source);
  auto t = std::make_shared<const Graph>(target);
  std::vector<EdgeMap> out;
  for_each_circuit_surjection(
      source, target, [&](const std::vector<int>& a) { out.emplace_back(s, t, a); }, limits);
  return out;
}

}  // namespace cyclemap
