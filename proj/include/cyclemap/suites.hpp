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

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bonds.hpp"
#include "circuits.hpp"
#include "connectivity.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "iso.hpp"
#include "limits.hpp"
#include "maps.hpp"
#include "matroid.hpp"
#include "parallel.hpp"
#include "witness.hpp"

namespace cyclemap {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool passed() const {
    for (const auto& c : cases) {
      if (!c.passed) return false;
    }
    return !cases.empty();
  }
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Named families plus every connected simple graph on 4 to 6 vertices.
inline std::vector<NamedGraph> catalog_graphs() {
  std::vector<NamedGraph> out;
  auto add = [&](const std::string& name, std::vector<int> params) {
    std::string label = name;
    for (int p : params) label += "-" + std::to_string(p);
    out.push_back({label, generate_named(name, params)});
  };
  for (int n = 3; n <= 8; ++n) add("cycle", {n});
  for (int n = 2; n <= 6; ++n) add("path", {n});
  for (int n = 3; n <= 6; ++n) add("complete", {n});
  for (int n = 3; n <= 7; ++n) add("wheel", {n});
  for (int n = 3; n <= 5; ++n) add("prism", {n});
  add("bowtie", {});
  add("petersen", {});
  add("k4-subdivided", {});
  for (int n = 4; n <= 6; ++n) {
    const auto graphs = connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      out.push_back({"connected-" + std::to_string(n) + "#" + std::to_string(i), graphs[i]});
    }
  }
  return out;
}

namespace detail {

template <typename Fn>
CaseResult run_case(const std::string& name, Fn&& body) {
  CaseResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body(r.passed);
  } catch (const Error& e) {
    r.passed = false;
    r.detail = e.what();
    if (!e.reproducer().empty()) r.detail += "\n" + e.reproducer();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Per-target tallies collected by the surjection sweeps.
struct SweepTally {
  std::size_t surjections = 0;
  std::size_t non_bijective = 0;
  std::size_t not_induced = 0;
  std::size_t audited = 0;
  std::size_t decomposed = 0;
  std::string first_failure;
};

inline void sweep_target(const Graph& source, const Graph& target, bool audit, SweepTally& t,
                         const Limits& limits) {
  const bool source_2c = is_k_connected(source, 2);
  const bool target_circuit = is_cycle_graph(target);
  auto src = std::make_shared<const Graph>(source);
  auto tgt = std::make_shared<const Graph>(target);
  for_each_circuit_surjection(
      source, target,
      [&](const std::vector<int>& a) {
        ++t.surjections;
        EdgeMap f(src, tgt, a);
        if (!audit) {
          if (!f.is_bijective()) {
            ++t.non_bijective;
            if (t.first_failure.empty()) t.first_failure = f.describe();
          } else if (!induced_vertex_isomorphism(f)) {
            ++t.not_induced;
            if (t.first_failure.empty()) t.first_failure = f.describe();
          }
          return;
        }
        if (!source_2c || target_circuit) return;
        fibers(f, limits);
        ++t.audited;
        const Decomposition d = decompose(f, limits);
        for (int e = 0; e < source.edge_count(); ++e) {
          const int through = d.q(d.h(d.k.edge_map[static_cast<std::size_t>(e)]));
          if (through != f(e)) {
            throw Error(ErrorCode::kCertificateFailure, "factorization disagrees with the map",
                        f.describe());
          }
        }
        ++t.decomposed;
      },
      limits);
}

inline SweepTally sweep(const Graph& source, const std::vector<std::vector<Graph>>& levels, bool audit,
                        const Limits& limits) {
  std::vector<const Graph*> targets;
  for (int m = 1; m <= source.edge_count() && m < static_cast<int>(levels.size()); ++m) {
    for (const auto& g : levels[static_cast<std::size_t>(m)]) targets.push_back(&g);
  }
  std::vector<SweepTally> slots(targets.size());
  parallel_for(targets.size(), limits.threads,
               [&](std::size_t i) { sweep_target(source, *targets[i], audit, slots[i], limits); });
  SweepTally total;
  for (const auto& s : slots) {
    total.surjections += s.surjections;
    total.non_bijective += s.non_bijective;
    total.not_induced += s.not_induced;
    total.audited += s.audited;
    total.decomposed += s.decomposed;
    if (total.first_failure.empty()) total.first_failure = s.first_failure;
  }
  return total;
}

inline std::vector<NamedGraph> surjection_sources() {
  return {{"K4", complete_graph(4)}, {"prism", prism_graph(3)}, {"W5", wheel_graph(5)}, {"K5", complete_graph(5)}};
}

// 2-connected sources with suspended chains, so fibers of size > 1 occur.
inline std::vector<NamedGraph> chained_sources() {
  std::vector<NamedGraph> out;
  out.push_back({"K4-subdivided", k4_subdivided_graph()});
  out.push_back({"K4-double-subdivided",
                 build_graph(6, {{0, 4}, {4, 5}, {5, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
  out.push_back({"K4-two-subdivided",
                 build_graph(6, {{0, 4}, {4, 1}, {2, 5}, {5, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})});
  out.push_back({"theta-2-2-2", build_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}})});
  out.push_back({"prism-subdivided",
                 build_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {6, 3}, {1, 4}, {2, 5}})});
  return out;
}

inline const std::vector<std::size_t>& simple_graph_census() {
  // Simple graphs without isolated vertices, by edge count 0..10.
  static const std::vector<std::size_t> counts = {1, 1, 2, 5, 11, 26, 68, 177, 497, 1476, 4613};
  return counts;
}

}  // namespace detail

inline SuiteResult suite_surjections(const Limits& limits = {}) {
  SuiteResult out{"thm12", {}};
  const auto levels = graphs_by_edge_count(10);
  out.cases.push_back(detail::run_case("target census", [&](bool& ok) {
    std::string counts;
    ok = true;
    for (std::size_t m = 0; m < levels.size(); ++m) {
      ok = ok && levels[m].size() == detail::simple_graph_census()[m];
      counts += (m ? " " : "") + std::to_string(levels[m].size());
    }
    return "targets by edge count: " + counts;
  }));
  for (const auto& [name, source] : detail::surjection_sources()) {
    out.cases.push_back(detail::run_case(name + " onto all targets", [&, &source = source](bool& ok) {
      const auto t = detail::sweep(source, levels, false, limits);
      ok = t.surjections > 0 && t.non_bijective == 0 && t.not_induced == 0;
      std::string d = std::to_string(t.surjections) + " surjections, " + std::to_string(t.non_bijective) +
                      " non-bijective, " + std::to_string(t.not_induced) + " without induced vertex map";
      if (!t.first_failure.empty()) d += "\n" + t.first_failure;
      return d;
    }));
  }
  out.cases.push_back(detail::run_case("K4 onto K4", [&](bool& ok) {
    const auto n = enumerate_circuit_surjections(complete_graph(4), complete_graph(4), limits).size();
    ok = n == 24;
    return std::to_string(n) + " maps";
  }));
  out.cases.push_back(detail::run_case("K4 onto C3", [&](bool& ok) {
    const auto n = enumerate_circuit_surjections(complete_graph(4), cycle_graph(3), limits).size();
    ok = n == 0;
    return std::to_string(n) + " maps";
  }));
  return out;
}

inline SuiteResult suite_fiber_audit(const Limits& limits = {}) {
  SuiteResult out{"lemma11", {}};
  const auto levels = graphs_by_edge_count(10);
  auto sources = detail::surjection_sources();
  for (auto& s : detail::chained_sources()) sources.push_back(std::move(s));
  for (const auto& [name, source] : sources) {
    out.cases.push_back(detail::run_case(name + " fiber audit", [&, &source = source](bool& ok) {
      const auto t = detail::sweep(source, levels, true, limits);
      ok = t.audited == t.decomposed;
      return std::to_string(t.surjections) + " surjections, " + std::to_string(t.audited) +
             " onto non-circuits audited and factored";
    }));
  }
  return out;
}

inline SuiteResult suite_witness_oracle(const Limits& limits = {}) {
  SuiteResult out{"thm22-oracle", {}};
  for (int n = 4; n <= 6; ++n) {
    out.cases.push_back(detail::run_case(std::to_string(n) + "-vertex connected graphs", [&](bool& ok) {
      const auto graphs = connected_graphs(n);
      std::vector<char> agree(graphs.size(), 0);
      std::vector<char> none(graphs.size(), 0);
      parallel_for(graphs.size(), limits.threads, [&](std::size_t i) {
        const auto report = decide_no_nontrivial_map(graphs[i], limits);
        const auto found = enumerate_single_generator_extensions(graphs[i], limits);
        none[i] = report.verdict == Verdict::kNoNontrivialMap;
        agree[i] = (none[i] != 0) == !found.has_value();
      });
      std::size_t agreed = 0;
      std::size_t nones = 0;
      std::string first;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        agreed += agree[i] != 0;
        nones += none[i] != 0;
        if (!agree[i] && first.empty()) first = detail::edge_list_dump(graphs[i]);
      }
      ok = agreed == graphs.size();
      std::string d = std::to_string(agreed) + "/" + std::to_string(graphs.size()) + " graphs agree, " +
                      std::to_string(nones) + " without a nontrivial map";
      if (!first.empty()) d += "\nfirst disagreement: " + first;
      return d;
    }));
  }
  return out;
}

inline SuiteResult suite_dual_complete(const Limits& limits = {}) {
  SuiteResult out{"remark-k5", {}};
  auto describe = [](const DualCompleteWitness& w) {
    return std::to_string(w.bond_matroid.circuits().size()) + " bonds, extension has " +
           std::to_string(w.extended.circuits().size()) + " circuits, dimension " +
           std::to_string(w.extension_dimension) + ", injection " + (w.injection ? "yes" : "no") +
           ", nontrivial " + (w.nontrivial ? "yes" : "no");
  };
  for (int n = 5; n <= 6; ++n) {
    out.cases.push_back(detail::run_case("bonds of K" + std::to_string(n), [&](bool& ok) {
      const auto w = dual_complete_witness(n, limits);
      ok = w.injection && w.nontrivial && verify_circuit_axioms(w.extended, limits).ok() &&
           w.extension_dimension == n;
      return describe(w);
    }));
  }
  // Below five vertices the bonds need not stay minimal; the outcome is only reported.
  out.cases.push_back(detail::run_case("bonds of K4 (reported)", [&](bool& ok) {
    const auto w = dual_complete_witness(4, limits);
    ok = verify_circuit_axioms(w.extended, limits).ok();
    return describe(w);
  }));
  return out;
}

inline SuiteResult suite_construction_window(const Limits& limits = {}) {
  SuiteResult out{"construction-window", {}};
  const std::vector<std::pair<int, int>> sizes = {{3, 1}, {4, 1}, {3, 2}, {5, 1}};
  for (const auto& [n, depth] : sizes) {
    out.cases.push_back(detail::run_case(
        "window n=" + std::to_string(n) + " depth=" + std::to_string(depth), [&, n = n, depth = depth](bool& ok) {
          const auto w = generate_construction_window(n, depth, limits);
          const auto circuits = enumerate_circuits(w.graph, limits);
          auto window = std::make_shared<const Graph>(w.graph);
          std::vector<int> onto(w.labels.size());
          for (std::size_t e = 0; e < onto.size(); ++e) onto[e] = w.labels[e] - 1;
          const auto kind = classify_map(EdgeMap(window, std::make_shared<const Graph>(cycle_graph(3)), onto),
                                         limits).kind;
          ok = kind == MapKind::kCircuitSurjection;
          return std::to_string(w.graph.vertex_count()) + " vertices, " + std::to_string(w.graph.edge_count()) +
                 " edges, " + std::to_string(circuits.size()) + " circuits all three-labelled";
        }));
  }
  return out;
}

inline SuiteResult suite_matroid_axioms(const Limits& limits = {}) {
  SuiteResult out{"matroid-axioms", {}};
  for (const auto& [name, g] : std::vector<NamedGraph>{{"bowtie", bowtie_graph()}, {"petersen", petersen_graph()}}) {
    out.cases.push_back(detail::run_case("truncation of " + name, [&, &g = g](bool& ok) {
      const Matroid t = truncation(g, limits);
      const Matroid m = cycle_matroid(g, limits);
      const bool axioms = verify_circuit_axioms(t, limits).ok();
      const bool nontrivial = !is_trivial(m, t);
      const bool binary = is_binary(t);
      ok = axioms && nontrivial && !binary && rank(t) == rank(m) - 1;
      return std::to_string(t.circuits().size()) + " circuits, axioms " + (axioms ? "hold" : "fail") +
             ", identity injection " + (nontrivial ? "nontrivial" : "trivial") + ", " +
             (binary ? "binary" : "not binary");
    }));
  }
  out.cases.push_back(detail::run_case("cycle and bond matroids of named graphs", [&](bool& ok) {
    std::size_t checked = 0;
    ok = true;
    for (const auto& [name, g] : catalog_graphs()) {
      if (name.rfind("connected-", 0) == 0 || g.edge_count() > 15) continue;
      const Matroid m = cycle_matroid(g, limits);
      ok = ok && verify_circuit_axioms(m, limits).ok() && is_binary(m) && rank(m) == rank_from_span(m);
      if (static_cast<std::size_t>(g.vertex_count()) <= limits.bond_vertex_cap) {
        const Matroid b = bond_matroid(g, limits);
        ok = ok && verify_circuit_axioms(b, limits).ok() && is_binary(b);
      }
      ++checked;
    }
    return std::to_string(checked) + " graphs";
  }));
  out.cases.push_back(detail::run_case("uniform U2,4", [&](bool& ok) {
    const Ground ground = Ground::from_names({"a", "b", "c", "d"});
    std::vector<EdgeSet> triples;
    for (int skip = 0; skip < 4; ++skip) {
      EdgeSet s = ground.full_set();
      s.reset(static_cast<std::size_t>(skip));
      triples.push_back(s);
    }
    const Matroid u(ground, triples);
    ok = verify_circuit_axioms(u, limits).ok() && !is_binary(u) && rank(u) == 2;
    return std::string("four 3-element circuits");
  }));
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm12",      "lemma11",
                                                 "thm22-oracle", "remark-k5",
                                                 "construction-window", "matroid-axioms"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const Limits& limits = {}) {
  if (name == "thm12") return suite_surjections(limits);
  if (name == "lemma11") return suite_fiber_audit(limits);
  if (name == "thm22-oracle") return suite_witness_oracle(limits);
  if (name == "remark-k5") return suite_dual_complete(limits);
  if (name == "construction-window") return suite_construction_window(limits);
  if (name == "matroid-axioms") return suite_matroid_axioms(limits);
  throw Error(ErrorCode::kUnknownName, "unknown suite " + name);
}

}  // namespace cyclemap
