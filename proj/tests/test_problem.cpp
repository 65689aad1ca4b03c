// Copyright 2026 The qlb authors
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

#include <algorithm>
#include <set>

#include <doctest.h>

#include "qlb/errors.hpp"
#include "qlb/problem.hpp"
#include "qlb/rng.hpp"

using namespace qlb;

TEST_SUITE("problem") {

TEST_CASE("builtin instance shape") {
  WeightedGraph g = builtin_instance();
  CHECK(g.node_count == 5);
  REQUIRE(g.edges.size() == 5);
  CHECK(total_weight(g) == 9.0);
  CHECK(g.edges[0].u == 0);
  CHECK(g.edges[0].v == 1);
  CHECK(g.edges[0].w == 3.0);
  CHECK_NOTHROW(validate_graph(g));
}

TEST_CASE("cut values on known assignments") {
  WeightedGraph g = builtin_instance();
  CHECK(cut_value(g, "00000") == 0.0);
  CHECK(cut_value(g, "11111") == 0.0);
  CHECK(cut_value(g, "01001") == 8.0);
  CHECK(energy(g, "01001") == -8.0);
  CHECK(energy(g, "00000") == 0.0);
  CHECK(energy(g, "00001") == -5.0);
  CHECK_THROWS_AS(cut_value(g, "0000"), std::invalid_argument);
}

TEST_CASE("assignment string round trip") {
  for (std::uint64_t x = 0; x < 32; ++x) {
    Assignment a = assignment_from_index(x, 5);
    CHECK(a.size() == 5);
    CHECK(index_from_assignment(a) == x);
  }
  // node 0 is the leftmost character
  CHECK(assignment_from_index(1, 5) == "10000");
  CHECK(assignment_from_index(16, 5) == "00001");
  CHECK_THROWS_AS(index_from_assignment("01x01"), std::invalid_argument);
}

TEST_CASE("brute force on the builtin instance") {
  MaxCutResult r = brute_force_max_cut(builtin_instance());
  CHECK(r.max_cut == 8.0);
  std::set<Assignment> expected = {"01001", "01110", "10001", "10110"};
  CHECK(std::set<Assignment>(r.argmax.begin(), r.argmax.end()) == expected);
}

TEST_CASE("brute force edge cases") {
  WeightedGraph single{2, {{0, 1, 5.0}}};
  MaxCutResult r = brute_force_max_cut(single);
  CHECK(r.max_cut == 5.0);
  CHECK(std::set<Assignment>(r.argmax.begin(), r.argmax.end()) ==
        std::set<Assignment>{"01", "10"});

  WeightedGraph edgeless{3, {}};
  r = brute_force_max_cut(edgeless);
  CHECK(r.max_cut == 0.0);
  CHECK(r.argmax.size() == 8);
}

TEST_CASE("partition symmetry and bounds") {
  WeightedGraph g = builtin_instance();
  for (std::uint64_t x = 0; x < 32; ++x) {
    double cut = cut_value_index(g, x);
    CHECK(cut == cut_value_index(g, ~x & 31u));
    CHECK(cut >= 0.0);
    CHECK(cut <= total_weight(g));
    CHECK(energy_index(g, x) == -cut);
  }
}

TEST_CASE("mean energy over all assignments is half the negative total weight") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g;
    g.node_count = 2 + static_cast<int>(rng.next() % 5);
    for (int u = 0; u < g.node_count; ++u)
      for (int v = u + 1; v < g.node_count; ++v)
        if (rng.u01() < 0.6) g.edges.push_back({u, v, rng.u01() * 4.0});
    double sum = 0.0;
    std::uint64_t total = std::uint64_t{1} << g.node_count;
    for (std::uint64_t x = 0; x < total; ++x) sum += energy_index(g, x);
    CHECK(sum / static_cast<double>(total) ==
          doctest::Approx(-total_weight(g) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("graph validation rejects bad graphs") {
  CHECK_THROWS_AS(validate_graph(WeightedGraph{0, {}}), data_error);
  CHECK_THROWS_AS(validate_graph(WeightedGraph{21, {}}), data_error);
  CHECK_THROWS_AS(validate_graph(WeightedGraph{3, {{0, 0, 1.0}}}), data_error);
  CHECK_THROWS_AS(validate_graph(WeightedGraph{3, {{0, 3, 1.0}}}), data_error);
  CHECK_THROWS_AS(validate_graph(WeightedGraph{3, {{0, 1, -1.0}}}), data_error);
  CHECK_THROWS_AS(validate_graph(WeightedGraph{3, {{0, 1, 1.0}, {1, 0, 2.0}}}), data_error);
  CHECK_NOTHROW(validate_graph(WeightedGraph{3, {{0, 1, 0.0}}}));
}

TEST_CASE("graph json round trip") {
  WeightedGraph g = builtin_instance();
  WeightedGraph back = graph_from_json(graph_to_json(g));
  CHECK(back.node_count == g.node_count);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(back.edges[i].u == g.edges[i].u);
    CHECK(back.edges[i].v == g.edges[i].v);
    CHECK(back.edges[i].w == g.edges[i].w);
  }
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse("{\"nodes\": 3}")), data_error);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse("{\"nodes\": 2, \"edges\": [[0]]}")),
                  data_error);
}

}  // TEST_SUITE
