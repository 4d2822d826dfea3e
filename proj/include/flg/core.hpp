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

#ifndef FLG_CORE_HPP_
#define FLG_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flg/rational.hpp"

namespace flg {

using VertexId = std::size_t;
using FacilityIndex = std::size_t;
using Weight = std::int64_t;

// An ordered pair (from, to): `to` is in the shopping range of `from`, and a
// facility placed on `to` attracts `from`.
struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed vertex-weighted host graph. Every vertex is both a client with a
// spending capacity and a candidate facility location. Immutable once built.
class HostGraph {
 public:
  HostGraph() = default;
  // Throws InputError on negative weights, self-loops, duplicate edges or
  // endpoints out of range.
  HostGraph(std::vector<Weight> weights, std::vector<Edge> edges);

  std::size_t num_vertices() const { return weights_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  Weight weight(VertexId v) const { return weights_.at(v); }
  std::span<const Weight> weights() const { return weights_; }
  Weight total_weight() const { return total_weight_; }
  // Edges in construction order.
  std::span<const Edge> edges() const { return edges_; }
  // Sorted, without v itself.
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_.at(v); }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_.at(v); }
  bool has_edge(VertexId from, VertexId to) const;

 private:
  std::vector<Weight> weights_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  Weight total_weight_ = 0;
};

// One location per facility agent; co-location is allowed.
class Placement {
 public:
  Placement() = default;
  explicit Placement(std::vector<VertexId> locations) : locations_(std::move(locations)) {}

  std::size_t size() const { return locations_.size(); }
  bool empty() const { return locations_.empty(); }
  VertexId operator[](FacilityIndex j) const { return locations_[j]; }
  VertexId at(FacilityIndex j) const { return locations_.at(j); }
  std::span<const VertexId> locations() const { return locations_; }

  Placement with_location(FacilityIndex j, VertexId v) const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<VertexId> locations_;
};

// Sparse client weight distribution: for every client the (facility, amount)
// entries it sends, sorted by facility index.
class WeightDistribution {
 public:
  using Entry = std::pair<FacilityIndex, Rational>;

  WeightDistribution() = default;
  WeightDistribution(std::size_t num_clients, std::size_t num_facilities)
      : num_facilities_(num_facilities), entries_(num_clients) {}

  std::size_t num_clients() const { return entries_.size(); }
  std::size_t num_facilities() const { return num_facilities_; }
  std::span<const Entry> entries(VertexId client) const { return entries_.at(client); }
  // Sets (or overwrites) one entry; a zero amount removes it.
  void set(VertexId client, FacilityIndex facility, Rational amount);
  Rational get(VertexId client, FacilityIndex facility) const;

 private:
  std::size_t num_facilities_ = 0;
  std::vector<std::vector<Entry>> entries_;
};

using LoadVector = std::vector<Rational>;

// Closed out-neighbourhood {v} ∪ out(v), sorted. Throws std::out_of_range.
std::vector<VertexId> shopping_range(const HostGraph& g, VertexId v);

// Union of {s_j} ∪ in(s_j) over the given facilities, sorted.
// Throws std::out_of_range on a bad facility index.
std::vector<VertexId> attraction_range(const HostGraph& g, const Placement& s,
                                       std::span<const FacilityIndex> facilities);

// Facilities whose location lies in the shopping range of v, ascending.
std::vector<FacilityIndex> facilities_in_range(const HostGraph& g, const Placement& s, VertexId v);

// Clients with at least one facility in their shopping range, sorted.
std::vector<VertexId> covered_clients(const HostGraph& g, const Placement& s);

// Weighted participation rate: total weight of the covered clients.
Weight social_welfare(const HostGraph& g, const Placement& s);
// Same, for a set of occupied locations (duplicates allowed).
Weight covered_weight(const HostGraph& g, std::span<const VertexId> locations);

// Throws std::out_of_range if some location is not a vertex of g.
void validate_placement(const HostGraph& g, const Placement& s);

bool is_feasible_distribution(const HostGraph& g, const Placement& s, const WeightDistribution& sigma);

// Column sums of sigma. Throws std::invalid_argument if sigma is infeasible.
LoadVector facility_loads(const HostGraph& g, const Placement& s, const WeightDistribution& sigma);

// Maximum load over the facilities v patronizes; nullopt if none.
std::optional<Rational> client_cost(const HostGraph& g, const Placement& s, const WeightDistribution& sigma,
                                    VertexId v);

}  // namespace flg

#endif  // FLG_CORE_HPP_
