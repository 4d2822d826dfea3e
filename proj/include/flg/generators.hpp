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

#ifndef FLG_GENERATORS_HPP_
#define FLG_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "flg/cnf.hpp"
#include "flg/core.hpp"
#include "flg/instance_io.hpp"

namespace flg {

// Star family with a unique SPE far from the optimum. Unit weights;
// k - 1 small stars (center + x - 1 leaves), one big star (center + k * x
// leaves), and big-star leaf i linked with leaf 1 of small star i. Every leaf
// has an edge to its center, so a facility on a center attracts the whole
// star; leaf 1 of small star i also shops at big-star leaf i.
//
// Vertex order: for i = 1..k-1 the small center followed by its leaves, then
// the big-star leaves, then the big center (the last vertex).
// Throws std::invalid_argument unless k >= 2 and x >= 4.
Instance gen_lower_bound(std::size_t k, std::size_t x);

struct LowerBoundLayout {
  std::size_t k;
  std::size_t x;
  VertexId small_center(std::size_t i) const;           // i in [1, k-1]
  VertexId small_leaf(std::size_t i, std::size_t j) const;  // j in [1, x-1]
  VertexId big_leaf(std::size_t i) const;              // i in [1, k*x]
  VertexId big_center() const;
  std::size_t num_vertices() const;
};

// 3SAT reduction: vertices 2i and 2i+1 are the literals x_{i+1} and its
// negation (mutually linked), followed by one vertex per clause with an edge
// to each of its literals. Unit weights, k = number of variables.
Instance gen_3sat(const CnfFormula& formula);
VertexId literal_vertex(Literal lit);

// Reads an assignment off a placement covering every client: x is true iff
// its positive literal vertex is occupied. nullopt when some client is
// uncovered or a variable has no (or both) literal vertices occupied.
std::optional<std::vector<bool>> decode_assignment(const HostGraph& g, const CnfFormula& formula, const Placement& s);
// Placement with facility i on the literal of variable i + 1 chosen by the
// assignment.
Placement encode_assignment(const std::vector<bool>& assignment);

struct InstanceWithPlacement {
  Instance instance;
  Placement placement;
};

// Two unit vertices with edges both ways and a facility on each.
InstanceWithPlacement gen_basic_us_counterexample();

// Each ordered pair (u, v), u != v, is an edge with probability
// `edge_density`; weights are uniform in [1, max_weight]. Deterministic per
// seed. Throws std::invalid_argument for a density outside [0, 1] or
// max_weight < 1.
Instance gen_random(std::size_t n, double edge_density, Weight max_weight, std::size_t k, std::uint64_t seed);

}  // namespace flg

#endif  // FLG_GENERATORS_HPP_
