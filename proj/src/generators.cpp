// Copyright 2026 The FLG Authors.
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

#include "flg/generators.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace flg {

VertexId LowerBoundLayout::small_center(std::size_t i) const { return (i - 1) * x; }
VertexId LowerBoundLayout::small_leaf(std::size_t i, std::size_t j) const { return (i - 1) * x + j; }
VertexId LowerBoundLayout::big_leaf(std::size_t i) const { return (k - 1) * x + (i - 1); }
VertexId LowerBoundLayout::big_center() const { return (k - 1) * x + k * x; }
std::size_t LowerBoundLayout::num_vertices() const { return (k - 1) * x + k * x + 1; }

Instance gen_lower_bound(std::size_t k, std::size_t x) {
  if (k < 2 || x < 4) throw std::invalid_argument("lower-bound family needs k >= 2 and x >= 4");
  const LowerBoundLayout layout{k, x};
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < x; ++j) edges.push_back({layout.small_leaf(i, j), layout.small_center(i)});
  }
  for (std::size_t i = 1; i <= k * x; ++i) edges.push_back({layout.big_leaf(i), layout.big_center()});
  for (std::size_t i = 1; i < k; ++i) edges.push_back({layout.small_leaf(i, 1), layout.big_leaf(i)});
  return Instance{HostGraph(std::vector<Weight>(layout.num_vertices(), 1), std::move(edges)), k};
}

VertexId literal_vertex(Literal lit) {
  const auto var = static_cast<VertexId>(std::abs(lit) - 1);
  return 2 * var + (lit < 0 ? 1 : 0);
}

Instance gen_3sat(const CnfFormula& formula) {
  const std::size_t vars = formula.num_variables();
  const std::size_t n = 2 * vars + formula.clauses().size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vars; ++i) {
    edges.push_back({2 * i, 2 * i + 1});
    edges.push_back({2 * i + 1, 2 * i});
  }
  for (std::size_t c = 0; c < formula.clauses().size(); ++c) {
    for (Literal lit : formula.clauses()[c]) edges.push_back({2 * vars + c, literal_vertex(lit)});
  }
  return Instance{HostGraph(std::vector<Weight>(n, 1), std::move(edges)), vars};
}

std::optional<std::vector<bool>> decode_assignment(const HostGraph& g, const CnfFormula& formula, const Placement& s) {
  validate_placement(g, s);
  if (covered_clients(g, s).size() != g.num_vertices()) return std::nullopt;
  const std::size_t vars = formula.num_variables();
  std::vector<int> occupied(2 * vars, 0);
  for (VertexId v : s.locations()) {
    if (v < 2 * vars) occupied[v] = 1;
  }
  std::vector<bool> assignment(vars);
  for (std::size_t i = 0; i < vars; ++i) {
    if (occupied[2 * i] == occupied[2 * i + 1]) return std::nullopt;
    assignment[i] = occupied[2 * i] == 1;
  }
  return assignment;
}

Placement encode_assignment(const std::vector<bool>& assignment) {
  std::vector<VertexId> locations;
  for (std::size_t i = 0; i < assignment.size(); ++i) locations.push_back(2 * i + (assignment[i] ? 0 : 1));
  return Placement(std::move(locations));
}

InstanceWithPlacement gen_basic_us_counterexample() {
  return {Instance{HostGraph({1, 1}, {{0, 1}, {1, 0}}), 2}, Placement({0, 1})};
}

Instance gen_random(std::size_t n, double edge_density, Weight max_weight, std::size_t k, std::uint64_t seed) {
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) throw std::invalid_argument("edge density must lie in [0, 1]");
  if (max_weight < 1) throw std::invalid_argument("max weight must be at least 1");
  std::mt19937_64 rng(seed);
  // Portable draws: raw 64-bit outputs only, no library distributions.
  const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Weight> weights(n);
  for (auto& w : weights) w = 1 + static_cast<Weight>(rng() % static_cast<std::uint64_t>(max_weight));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && unit() < edge_density) edges.push_back({u, v});
    }
  }
  return Instance{HostGraph(std::move(weights), std::move(edges)), k};
}

}  // namespace flg
