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

#ifndef FLG_MAXFLOW_HPP_
#define FLG_MAXFLOW_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flg/core.hpp"

namespace flg {

// Neighbour scan order during breadth-first augmenting path search. Both
// orders yield a maximum flow; they generally yield different flows.
enum class AugmentOrder { kForward, kReverse };

// Flow values on every arc of a FlowNetwork, expressed in units of 1/scale.
struct FlowState {
  std::vector<std::int64_t> arc_flow;
  std::int64_t value = 0;
  std::int64_t scale = 1;
};

// Bipartite network source -> clients -> facilities -> sink. Client arcs carry
// scale * w(v); facility -> sink arcs carry a rational capacity (or an
// "infinite" one) multiplied by the same scale, so every capacity is an
// integer.
//
// Node layout: 0 = source, 1 = sink, then clients, then facilities.
class FlowNetwork {
 public:
  struct Arc {
    std::size_t from;
    std::size_t to;
    std::int64_t capacity;
  };

  // One client node per vertex with positive weight and one facility node per
  // entry of `facilities`; a client is joined to every facility whose
  // attraction range contains it. Sink capacities start at 0.
  // Throws std::invalid_argument if `facilities` is empty.
  static FlowNetwork build(const HostGraph& g, std::span<const Weight> weights, const Placement& s,
                           std::span<const FacilityIndex> facilities);

  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;

  std::size_t num_nodes() const { return 2 + clients_.size() + facilities_.size(); }
  std::size_t num_clients() const { return clients_.size(); }
  std::size_t num_facilities() const { return facilities_.size(); }
  std::size_t client_node(std::size_t c) const { return 2 + c; }
  std::size_t facility_node(std::size_t f) const { return 2 + clients_.size() + f; }
  VertexId client_vertex(std::size_t c) const { return clients_.at(c); }
  FacilityIndex facility(std::size_t f) const { return facilities_.at(f); }
  Weight client_weight(std::size_t c) const { return client_weights_.at(c); }

  // Forward arcs only; the reverse arc of arc a is implicit.
  std::span<const Arc> arcs() const { return arcs_; }
  // Residual entries touching `node` (see adjacency_).
  std::span<const std::size_t> residual_entries(std::size_t node) const { return adjacency_.at(node); }
  std::size_t sink_arc(std::size_t f) const { return sink_arcs_.at(f); }
  // Client -> facility arcs leaving client c.
  std::span<const std::size_t> range_arcs(std::size_t c) const { return range_arcs_.at(c); }

  std::int64_t scale() const { return scale_; }
  // Sum of scaled client capacities (the largest possible flow value).
  std::int64_t total_supply() const;
  // Value used for an infinite sink arc: total_supply() + 1.
  std::int64_t infinity() const { return total_supply() + 1; }

  // Sets every sink arc to `cap` and rescales so that scale = denominator of
  // cap. Throws std::invalid_argument on a negative cap.
  void set_sink_capacities(const Rational& cap);
  // Sets one sink arc; the scale becomes lcm(scale, denominator of cap).
  void set_sink_capacity(std::size_t f, const Rational& cap);
  void set_sink_capacity_infinite(std::size_t f);

  // The capacity of a sink arc as a rational (infinite arcs report nullopt).
  std::optional<Rational> sink_capacity(std::size_t f) const;

  std::string to_dot() const;

 private:
  void rescale(std::int64_t new_scale);
  std::int64_t scaled(const Rational& cap) const;

  std::vector<VertexId> clients_;
  std::vector<Weight> client_weights_;
  std::vector<FacilityIndex> facilities_;
  std::vector<Arc> arcs_;
  // Residual entries: 2 * arc for the forward direction, 2 * arc + 1 for the
  // reverse one.
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> sink_arcs_;
  std::vector<std::vector<std::size_t>> range_arcs_;
  std::vector<Rational> sink_caps_;
  std::vector<char> sink_infinite_;
  std::int64_t scale_ = 1;

};

// Maximum flow from scratch by shortest augmenting paths.
FlowState max_flow(const FlowNetwork& net, AugmentOrder order = AugmentOrder::kForward);

// Continues augmenting from `state` until it is maximum. `state` must be
// feasible for the current capacities, possibly at a scale dividing
// net.scale(); it is converted to the network scale first. Throws
// InvariantViolation on an infeasible state.
void augment_to_max(const FlowNetwork& net, FlowState& state, AugmentOrder order = AugmentOrder::kForward);

// Whether the residual graph of `state` has a source -> sink path. Does not
// modify `state`. Same feasibility contract as augment_to_max.
bool has_augmenting_path(const FlowNetwork& net, const FlowState& state);

// Flow on arc a, as a rational amount of the original (unscaled) weight.
Rational arc_flow(const FlowState& state, std::size_t arc);

}  // namespace flg

#endif  // FLG_MAXFLOW_HPP_
