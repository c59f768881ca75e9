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


// Acceptance run: one pass/fail line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "cyclemap.hpp"

using namespace cyclemap;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string summarize(const SuiteResult& r) {
  std::string out;
  for (const auto& c : r.cases) {
    if (!out.empty()) out += "; ";
    out += (c.passed ? "" : "FAILED ") + c.name + ": " + c.detail.substr(0, c.detail.find('\n'));
  }
  return out;
}

Outcome from_suite(const SuiteResult& r) { return {r.passed(), summarize(r)}; }

}  // namespace

int main() {
  Limits limits;
  limits.threads = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 8u));

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"no-map decision agrees with the single-generator oracle on connected graphs with 4-6 vertices",
       [&] { return from_suite(suite_witness_oracle(limits)); }},
      {"circuit surjections from K4, prism, W5 (and K5) are bijective and vertex-induced; K4->K4 has 24, K4->C3 has 0",
       [&] { return from_suite(suite_surjections(limits)); }},
      {"fiber-containment audit passes for every surjection with 2-connected source and non-circuit target",
       [&] { return from_suite(suite_fiber_audit(limits)); }},
      {"enumerated circuits equal minimal nonzero cycle-space vectors on catalog graphs with <= 15 edges",
       [&]() -> Outcome {
         std::size_t graphs = 0;
         std::size_t circuits = 0;
         for (const auto& [name, g] : catalog_graphs()) {
           if (g.edge_count() > 15) continue;
           const auto enumerated = enumerate_circuits(g, limits);
           if (enumerated != span_min(g.ground(), fundamental_cycles(g), limits).circuits()) {
             return {false, "mismatch on " + name};
           }
           ++graphs;
           circuits += enumerated.size();
         }
         return {true, std::to_string(graphs) + " graphs, " + std::to_string(circuits) + " circuits"};
       }},
      {"truncations of bowtie and Petersen satisfy the circuit axioms, extend the identity nontrivially, are not binary",
       [&]() -> Outcome {
         std::string detail;
         bool ok = true;
         for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"bowtie", bowtie_graph()},
                                                                                 {"petersen", petersen_graph()}}) {
           const Matroid t = truncation(g, limits);
           const bool axioms = verify_circuit_axioms(t, limits).ok();
           const bool nontrivial = !is_trivial(cycle_matroid(g, limits), t);
           const bool binary = is_binary(t);
           ok = ok && axioms && nontrivial && !binary;
           detail += (detail.empty() ? "" : "; ") + name + ": " + std::to_string(t.circuits().size()) +
                     " circuits, axioms " + (axioms ? "ok" : "FAIL") + ", nontrivial " + (nontrivial ? "yes" : "no") +
                     ", binary " + (binary ? "yes" : "no");
         }
         return {ok, detail};
       }},
      {"identity from the bond matroid of K5 into the span closure with E(K5) is a nontrivial circuit injection",
       [&]() -> Outcome {
         const auto w = dual_complete_witness(5, limits);
         return {w.injection && w.nontrivial && !is_trivial(w.bond_matroid, w.extended),
                 std::to_string(w.bond_matroid.circuits().size()) + " bonds, " +
                     std::to_string(w.extended.circuits().size()) + " circuits after extension, dimension " +
                     std::to_string(w.extension_dimension)};
       }},
      {"Petersen: not Hamiltonian, almost Hamiltonian, nontrivial map exists, witness matroid binary and larger",
       [&]() -> Outcome {
         const Graph p = petersen_graph();
         const bool ham = is_hamiltonian(p, limits);
         const bool almost = is_almost_hamiltonian(p, limits);
         const auto r = decide_no_nontrivial_map(p, limits);
         const Matroid m = cycle_matroid(p, limits);
         bool extends = r.witness_matroid.has_value();
         if (extends) {
           for (const auto& c : m.circuits()) extends = extends && r.witness_matroid->is_circuit(c);
           extends = extends && r.witness_matroid->circuits().size() > m.circuits().size();
         }
         const bool binary = r.witness_matroid && is_binary(*r.witness_matroid);
         return {!ham && almost && r.verdict == Verdict::kNontrivialMapExists && extends && binary,
                 std::string("verdict ") + verdict_name(r.verdict) + ", witness |S| = " +
                     std::to_string(r.witness_s ? r.witness_s->count() : 0) + ", witness circuits " +
                     std::to_string(r.witness_matroid ? r.witness_matroid->circuits().size() : 0) + " vs " +
                     std::to_string(m.circuits().size())};
       }},
      {"construction windows (3,1) and (4,1) pass the label self-test",
       [&]() -> Outcome {
         std::string detail;
         for (int n : {3, 4}) {
           const auto w = generate_construction_window(n, 1, limits);
           audit_window_labels(w, limits);
           detail += (detail.empty() ? "" : "; ") + std::to_string(n) + ": " +
                     std::to_string(enumerate_circuits(w.graph, limits).size()) + " circuits all three-labelled";
         }
         return {true, detail};
       }},
      {"every 3-connected catalog graph has |E| >= 3|V|/2",
       [&]() -> Outcome {
         std::size_t checked = 0;
         for (const auto& [name, g] : catalog_graphs()) {
           if (!is_k_connected(g, 3)) continue;
           ++checked;
           if (2 * g.edge_count() < 3 * g.vertex_count()) return {false, "violated by " + name};
         }
         return {checked > 0, std::to_string(checked) + " 3-connected graphs checked"};
       }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("criterion %zu [PRIMARY] %s: %s (%.2fs) | %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
