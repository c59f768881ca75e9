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


// Command-line front end: analyze graphs, verify edge maps, run self-test
// suites and emit named graphs, all as JSON reports.

#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclemap.hpp"

namespace {

using cyclemap::Error;
using cyclemap::ErrorCategory;
using cyclemap::Json;

enum ExitCode { kOk = 0, kTestFailure = 1, kInputError = 2, kBudget = 3, kAlarm = 4 };

struct RunConfig {
  std::size_t budget_circuits = cyclemap::Limits{}.circuit_budget;
  std::size_t budget_search = cyclemap::Limits{}.search_budget;
  std::size_t span_cap = cyclemap::Limits{}.span_cap;
  int threads = 1;
  std::string format = "json";

  cyclemap::Limits limits() const {
    cyclemap::Limits l;
    l.circuit_budget = budget_circuits;
    l.search_budget = budget_search;
    l.span_cap = span_cap;
    l.threads = threads;
    return l;
  }
};

void render_text(const Json& j, const std::string& indent, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      out << indent << it.key() << ":\n";
      render_text(*it, indent + "  ", out);
    } else {
      out << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

void emit(const Json& report, const RunConfig& cfg) {
  if (cfg.format == "text") {
    render_text(report, "", std::cout);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

Json analyze(const std::string& path, const RunConfig& cfg) {
  const auto limits = cfg.limits();
  const cyclemap::Graph g = cyclemap::graph_from_json(cyclemap::read_json_file(path));
  Json report;
  report["vertices"] = g.vertex_count();
  report["edges"] = g.edge_count();
  report["connected"] = cyclemap::is_connected(g);
  report["vertex_connectivity"] = cyclemap::vertex_connectivity(g);
  report["circuits"] = cyclemap::enumerate_circuits(g, limits).size();
  report["hamiltonian"] = cyclemap::is_hamiltonian(g, limits);
  report["almost_hamiltonian"] = cyclemap::is_almost_hamiltonian(g, limits);
  report["no_map"] = cyclemap::witness_report_to_json(cyclemap::decide_no_nontrivial_map(g, limits), g);
  return report;
}

Json verify_map(const std::string& path, const RunConfig& cfg) {
  const auto limits = cfg.limits();
  const cyclemap::EdgeMap f = cyclemap::edge_map_from_json(cyclemap::read_json_file(path));
  const auto cls = cyclemap::classify_map(f, limits);
  Json report;
  report["classification"] = cyclemap::map_kind_name(cls.kind);
  report["onto"] = cls.onto;
  report["bijective"] = cls.bijective;
  report["circuits_checked"] = cls.circuits_checked;
  report["violating_circuit"] = nullptr;
  if (cls.violating_circuit) report["violating_circuit"] = cyclemap::edge_set_to_json(*cls.violating_circuit);
  report["precondition"] = nullptr;
  report["fibers"] = nullptr;
  report["decomposition"] = nullptr;
  report["vertex_isomorphism"] = nullptr;
  if (cls.kind == cyclemap::MapKind::kNotCircuitSurjection) return report;

  try {
    const auto d = cyclemap::decompose(f, limits);
    Json sizes = Json::array();
    Json sets = Json::array();
    for (const auto& fiber : d.fibers.fibers) {
      sizes.push_back(fiber.count());
      sets.push_back(cyclemap::edge_set_to_json(fiber));
    }
    report["fibers"] = Json{{"sizes", sizes}, {"sets", sets}, {"audit", "passed"}};
    report["decomposition"] = Json{{"chain_graph", cyclemap::graph_to_json(d.chain_graph)},
                                   {"chain_graph_is_source", d.k.identity_graph},
                                   {"k", d.k.edge_map},
                                   {"quotient", cyclemap::graph_to_json(d.quotient)},
                                   {"h", d.h.assignment()},
                                   {"q", d.q.assignment()}};
  } catch (const Error& e) {
    if (e.code() != cyclemap::ErrorCode::kPreconditionUnmet) throw;
    report["precondition"] = e.what();
  }
  if (cls.bijective) {
    if (const auto phi = cyclemap::induced_vertex_isomorphism(f)) {
      Json m = Json::object();
      for (std::size_t v = 0; v < phi->size(); ++v) {
        m[std::to_string(f.source().id(static_cast<int>(v)))] = f.target().id((*phi)[v]);
      }
      report["vertex_isomorphism"] = m;
    }
  }
  return report;
}

int selftest(const std::string& suite, const RunConfig& cfg) {
  const auto result = cyclemap::run_suite(suite, cfg.limits());
  if (cfg.format == "text") {
    for (const auto& c : result.cases) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << static_cast<long long>(c.millis)
                << " ms): " << c.detail << "\n";
    }
    std::cout << (result.passed() ? "suite passed" : "suite FAILED") << "\n";
  } else {
    Json cases = Json::array();
    for (const auto& c : result.cases) {
      cases.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    emit(Json{{"suite", result.suite}, {"passed", result.passed()}, {"cases", cases}}, cfg);
  }
  return result.passed() ? kOk : kTestFailure;
}

int exit_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::kInput: return kInputError;
    case ErrorCategory::kBudget: return kBudget;
    case ErrorCategory::kTheoremAlarm: return kAlarm;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclemap: circuit-preserving edge maps of graphs and matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--budget-circuits", cfg.budget_circuits, "circuit enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-search", cfg.budget_search, "search node budget")->check(CLI::PositiveNumber);
  app.add_option("--span-cap", cfg.span_cap, "largest span dimension to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));

  std::string path;
  auto* analyze_cmd = app.add_subcommand("analyze", "report on a graph file");
  analyze_cmd->add_option("graph", path, "graph JSON file")->required();
  auto* map_cmd = app.add_subcommand("verify-map", "classify and decompose an edge map file");
  map_cmd->add_option("map", path, "edge map JSON file")->required();
  std::string suite;
  auto* selftest_cmd = app.add_subcommand("selftest", "run a self-test suite");
  selftest_cmd->add_option("suite", suite, "one of: thm12 lemma11 thm22-oracle remark-k5 construction-window matroid-axioms")
      ->required();
  std::string name;
  std::vector<int> params;
  auto* generate_cmd = app.add_subcommand("generate", "print a named graph or a construction window");
  generate_cmd->add_option("name", name, "graph family, or 'window'")->required();
  generate_cmd->add_option("params", params, "family parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) emit(analyze(path, cfg), cfg);
    if (*map_cmd) emit(verify_map(path, cfg), cfg);
    if (*selftest_cmd) return selftest(suite, cfg);
    if (*generate_cmd) {
      if (name == "window") {
        if (params.size() != 2) throw Error(cyclemap::ErrorCode::kBadParams, "window takes n and depth");
        const auto w = cyclemap::generate_construction_window(params[0], params[1], cfg.limits());
        emit(Json{{"graph", cyclemap::graph_to_json(w.graph)}, {"labels", w.labels}}, cfg);
      } else {
        emit(cyclemap::graph_to_json(cyclemap::generate_named(name, params)), cfg);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.reproducer().empty()) std::cerr << "reproducer:\n" << e.reproducer();
    return exit_for(e);
  }
  return kOk;
}
