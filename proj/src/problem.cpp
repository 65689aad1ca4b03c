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

#include "qlb/problem.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qlb/errors.hpp"

namespace qlb {

void validate_graph(const WeightedGraph& g) {
  if (g.node_count < 1) throw data_error("graph: node_count must be positive");
  if (g.node_count > kMaxNodes)
    throw data_error("graph: node_count " + std::to_string(g.node_count) +
                     " exceeds the limit of " + std::to_string(kMaxNodes));
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.u >= g.node_count || e.v < 0 || e.v >= g.node_count)
      throw data_error("graph: edge endpoint out of range");
    if (e.u == e.v) throw data_error("graph: self-loop on node " + std::to_string(e.u));
    if (!(e.w >= 0.0) || !std::isfinite(e.w))
      throw data_error("graph: edge weight must be a finite nonnegative number");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw data_error("graph: duplicate edge {" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + "}");
  }
}

WeightedGraph builtin_instance() {
  WeightedGraph g;
  g.node_count = 5;
  g.edges = {{0, 1, 3.0}, {1, 2, 1.0}, {1, 4, 1.0}, {2, 4, 2.0}, {3, 4, 2.0}};
  return g;
}

double total_weight(const WeightedGraph& g) {
  double sum = 0.0;
  for (const Edge& e : g.edges) sum += e.w;
  return sum;
}

Assignment assignment_from_index(std::uint64_t index, int node_count) {
  Assignment a(static_cast<std::size_t>(node_count), '0');
  for (int q = 0; q < node_count; ++q)
    if ((index >> q) & 1u) a[static_cast<std::size_t>(q)] = '1';
  return a;
}

std::uint64_t index_from_assignment(const Assignment& a) {
  std::uint64_t x = 0;
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a[q] == '1')
      x |= (std::uint64_t{1} << q);
    else if (a[q] != '0')
      throw std::invalid_argument("assignment: expected only '0'/'1' characters");
  }
  return x;
}

double cut_value(const WeightedGraph& g, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(g.node_count))
    throw std::invalid_argument("assignment length does not match node_count");
  return cut_value_index(g, index_from_assignment(a));
}

double cut_value_index(const WeightedGraph& g, std::uint64_t x) {
  double cut = 0.0;
  for (const Edge& e : g.edges) {
    std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if (std::popcount(x & mask) == 1) cut += e.w;
  }
  return cut;
}

double energy(const WeightedGraph& g, const Assignment& a) { return -cut_value(g, a); }

double energy_index(const WeightedGraph& g, std::uint64_t x) { return -cut_value_index(g, x); }

MaxCutResult brute_force_max_cut(const WeightedGraph& g) {
  if (g.node_count < 1 || g.node_count > kMaxNodes)
    throw std::invalid_argument("brute_force_max_cut: node_count out of range");
  MaxCutResult result;
  result.max_cut = -1.0;
  std::uint64_t total = std::uint64_t{1} << g.node_count;
  for (std::uint64_t x = 0; x < total; ++x) {
    double cut = cut_value_index(g, x);
    if (cut > result.max_cut) {
      result.max_cut = cut;
      result.argmax.clear();
    }
    if (cut == result.max_cut) result.argmax.push_back(assignment_from_index(x, g.node_count));
  }
  return result;
}

nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges) edges.push_back({e.u, e.v, e.w});
  return {{"nodes", g.node_count}, {"edges", edges}};
}

WeightedGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw data_error("graph json: expected object with \"nodes\" and \"edges\"");
  WeightedGraph g;
  if (!j["nodes"].is_number_integer()) throw data_error("graph json: \"nodes\" must be an integer");
  g.node_count = j["nodes"].get<int>();
  if (!j["edges"].is_array()) throw data_error("graph json: \"edges\" must be an array");
  for (const auto& rec : j["edges"]) {
    if (!rec.is_array() || rec.size() != 3 || !rec[0].is_number_integer() ||
        !rec[1].is_number_integer() || !rec[2].is_number())
      throw data_error("graph json: each edge must be [u, v, w]");
    g.edges.push_back({rec[0].get<int>(), rec[1].get<int>(), rec[2].get<double>()});
  }
  validate_graph(g);
  return g;
}

}  // namespace qlb
