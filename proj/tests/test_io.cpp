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


#include <gtest/gtest.h>

#include "cyclemap.hpp"

using namespace cyclemap;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kSelfTestFailed;
}

}  // namespace

TEST(Json, GraphRoundTrip) {
  const Graph g = build_graph({10, 3, 7}, {{10, 3}, {3, 7}, {7, 10}});
  const Json j = graph_to_json(g);
  EXPECT_EQ(j["vertices"], Json({10, 3, 7}));
  EXPECT_EQ(j["edges"][0], Json({10, 3}));
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(graph_from_json(parse_json(j.dump())), g);
}

TEST(Json, GraphErrors) {
  EXPECT_EQ(code_of([] { parse_json("{\"vertices\": [1,"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { graph_from_json(parse_json("{\"vertices\": [1, 2]}")); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { graph_from_json(parse_json("{\"vertices\": [1, 2], \"edges\": [[1]]}")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { graph_from_json(parse_json("{\"vertices\": [\"a\"], \"edges\": []}")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { graph_from_json(parse_json("{\"vertices\": [1, 2], \"edges\": [[1, 1]]}")); }),
            ErrorCode::kLoopEdge);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/graph.json"); }), ErrorCode::kParseError);
}

TEST(Json, MatroidRoundTrip) {
  const Matroid m = cycle_matroid(complete_graph(4));
  const Json j = matroid_to_json(m);
  EXPECT_EQ(j["cells"].size(), 6u);
  EXPECT_EQ(j["circuits"].size(), 7u);
  const Matroid back = matroid_from_json(parse_json(j.dump()));
  EXPECT_EQ(back.circuits().size(), 7u);
  EXPECT_EQ(matroid_to_json(back), j);
  EXPECT_EQ(code_of([] { matroid_from_json(parse_json("{\"cells\": [\"a\"], \"circuits\": [[3]]}")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { matroid_from_json(parse_json("{\"cells\": [\"a\"], \"circuits\": [[]]}")); }),
            ErrorCode::kEmptyCircuit);
}

TEST(Json, EdgeMapRoundTrip) {
  const EdgeMap f(k4_subdivided_graph(), complete_graph(4), {0, 0, 1, 2, 3, 4, 5});
  const EdgeMap back = edge_map_from_json(parse_json(edge_map_to_json(f).dump()));
  EXPECT_EQ(back.assignment(), f.assignment());
  EXPECT_EQ(back.source(), f.source());
  EXPECT_EQ(back.target(), f.target());
  EXPECT_EQ(code_of([] {
              edge_map_from_json(parse_json(
                  "{\"source\": {\"vertices\": [0, 1], \"edges\": [[0, 1]]},"
                  " \"target\": {\"vertices\": [0, 1], \"edges\": [[0, 1]]}, \"assignment\": [1]}"));
            }),
            ErrorCode::kBadParams);
}

TEST(Json, WitnessReportShape) {
  const Graph k4 = complete_graph(4);
  const Json none = witness_report_to_json(decide_no_nontrivial_map(k4), k4);
  EXPECT_EQ(none["verdict"], "no_nontrivial_map");
  EXPECT_EQ(none["reason"], "hamiltonian");
  EXPECT_TRUE(none["witness_S"].is_null());
  EXPECT_TRUE(none["witness_matroid"].is_null());
  const Graph pet = petersen_graph();
  const Json found = witness_report_to_json(decide_no_nontrivial_map(pet), pet);
  EXPECT_EQ(found["verdict"], "nontrivial_map_exists");
  EXPECT_EQ(found["witness_S"].size(), 5u);
  EXPECT_EQ(found["odd_vertices"].size(), 10u);
  const Matroid b = matroid_from_json(found["witness_matroid"]);
  EXPECT_TRUE(is_binary(b));
  EXPECT_EQ(found.dump(), witness_report_to_json(decide_no_nontrivial_map(pet), pet).dump());
}
