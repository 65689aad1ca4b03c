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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qlb {

/// Largest instance the statevector simulator and the brute-force oracle
/// accept.
constexpr int kMaxNodes = 20;

struct Edge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

/// Weighted undirected graph on nodes 0..node_count-1. Edges keep their
/// insertion order; that order fixes the cost-layer gate order downstream.
struct WeightedGraph {
  int node_count = 0;
  std::vector<Edge> edges;
};

/// Partition indicator rendered as a '0'/'1' string, node 0 leftmost.
using Assignment = std::string;

/// Throws data_error if the graph violates its invariants: 1 <= node_count
/// <= kMaxNodes, edge endpoints valid and distinct, weights nonnegative and
/// finite, no duplicate undirected edge.
void validate_graph(const WeightedGraph& g);

/// The bundled 5-node benchmark instance (total weight 9, max cut 8).
WeightedGraph builtin_instance();

double total_weight(const WeightedGraph& g);

/// Renders basis index x as an Assignment: character q is bit q of x.
Assignment assignment_from_index(std::uint64_t index, int node_count);

/// Inverse of assignment_from_index. Throws std::invalid_argument on
/// characters other than '0'/'1'.
std::uint64_t index_from_assignment(const Assignment& a);

/// Total weight of edges whose endpoints fall in different parts.
double cut_value(const WeightedGraph& g, const Assignment& a);
double cut_value_index(const WeightedGraph& g, std::uint64_t x);

/// energy = -cut_value. Low energy corresponds to good cuts.
double energy(const WeightedGraph& g, const Assignment& a);
double energy_index(const WeightedGraph& g, std::uint64_t x);

struct MaxCutResult {
  double max_cut = 0.0;
  std::vector<Assignment> argmax;  // in basis-index order
};

/// Exhaustive search over all 2^n assignments. Throws std::invalid_argument
/// above kMaxNodes.
MaxCutResult brute_force_max_cut(const WeightedGraph& g);

/// Graph file schema: {"nodes": n, "edges": [[u, v, w], ...]}.
nlohmann::json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);

}  // namespace qlb
