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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/maps.hpp"
#include "cyclemap/matroid.hpp"
#include "cyclemap/witness.hpp"

namespace cyclemap {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

namespace detail {

[[noreturn]] inline void bad_shape(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_shape(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad_shape(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace detail

inline Json edge_set_to_json(const EdgeSet& s) { return Json(s.indices()); }

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edge_id_pairs()) edges.push_back({u, v});
  return Json{{"vertices", g.vertex_ids()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  const Json& vertices = detail::field(j, "vertices");
  const Json& edges = detail::field(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) detail::bad_shape("vertices and edges must be arrays");
  std::vector<VertexId> ids;
  for (const auto& v : vertices) ids.push_back(detail::as_int(v, "vertex id"));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) detail::bad_shape("each edge must be a pair");
    pairs.emplace_back(detail::as_int(e[0], "edge endpoint"), detail::as_int(e[1], "edge endpoint"));
  }
  return Graph(std::move(ids), pairs);
}

inline Json matroid_to_json(const Matroid& m) {
  Json circuits = Json::array();
  for (const auto& c : m.circuits()) circuits.push_back(edge_set_to_json(c));
  return Json{{"cells", m.ground().names}, {"circuits", circuits}};
}

inline Matroid matroid_from_json(const Json& j) {
  const Json& cells = detail::field(j, "cells");
  const Json& circuits = detail::field(j, "circuits");
  if (!cells.is_array() || !circuits.is_array()) detail::bad_shape("cells and circuits must be arrays");
  std::vector<std::string> names;
  for (const auto& c : cells) {
    if (!c.is_string()) detail::bad_shape("cell names must be strings");
    names.push_back(c.get<std::string>());
  }
  Ground ground = Ground::from_names(std::move(names));
  std::vector<EdgeSet> family;
  for (const auto& c : circuits) {
    if (!c.is_array()) detail::bad_shape("each circuit must be an array of cell indices");
    EdgeSet s = ground.empty_set();
    for (const auto& i : c) {
      const auto idx = detail::as_int(i, "cell index");
      if (idx < 0 || static_cast<std::size_t>(idx) >= ground.size()) detail::bad_shape("cell index out of range");
      s.set(static_cast<std::size_t>(idx));
    }
    family.push_back(s);
  }
  return Matroid(std::move(ground), std::move(family));
}

inline Json edge_map_to_json(const EdgeMap& f) {
  return Json{{"source", graph_to_json(f.source())},
              {"target", graph_to_json(f.target())},
              {"assignment", f.assignment()}};
}

inline EdgeMap edge_map_from_json(const Json& j) {
  Graph source = graph_from_json(detail::field(j, "source"));
  Graph target = graph_from_json(detail::field(j, "target"));
  const Json& assignment = detail::field(j, "assignment");
  if (!assignment.is_array()) detail::bad_shape("assignment must be an array");
  std::vector<int> a;
  for (const auto& t : assignment) a.push_back(static_cast<int>(detail::as_int(t, "assignment entry")));
  return EdgeMap(std::move(source), std::move(target), std::move(a));
}

inline Json vertex_ids_json(const Graph& g, const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(g.id(v));
  return out;
}

inline Json witness_report_to_json(const WitnessReport& r, const Graph& g) {
  Json j{{"verdict", verdict_name(r.verdict)},
         {"reason", reason_name(r.reason)},
         {"witness_S", nullptr},
         {"witness_matroid", nullptr},
         {"odd_vertices", nullptr}};
  if (r.witness_s) j["witness_S"] = edge_set_to_json(*r.witness_s);
  if (r.witness_matroid) j["witness_matroid"] = matroid_to_json(*r.witness_matroid);
  if (r.odd_vertices) j["odd_vertices"] = vertex_ids_json(g, *r.odd_vertices);
  return j;
}

}  // namespace cyclemap
