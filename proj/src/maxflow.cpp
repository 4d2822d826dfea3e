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

#include "flg/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flg/errors.hpp"

namespace flg {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  const __int128 product = static_cast<__int128>(a) * b;
  if (product > std::numeric_limits<std::int64_t>::max() / 4) {
    throw std::overflow_error("scaled flow capacity exceeds 64 bits");
  }
  return static_cast<std::int64_t>(product);
}

// Brings `state` to the scale of `net` and checks capacity bounds and
// conservation.
FlowState aligned(const FlowNetwork& net, const FlowState& state) {
  const auto arcs = net.arcs();
  if (state.arc_flow.size() != arcs.size()) throw InvariantViolation("flow state does not match network");
  if (state.scale <= 0 || net.scale() % state.scale != 0) {
    throw InvariantViolation("flow state scale does not divide network scale");
  }
  FlowState out = state;
  const std::int64_t factor = net.scale() / state.scale;
  if (factor != 1) {
    for (auto& f : out.arc_flow) f = checked_mul(f, factor);
    out.value = checked_mul(out.value, factor);
    out.scale = net.scale();
  }
  std::vector<std::int64_t> balance(net.num_nodes(), 0);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (out.arc_flow[a] < 0 || out.arc_flow[a] > arcs[a].capacity) {
      throw InvariantViolation("flow state violates a capacity after a capacity change");
    }
    balance[arcs[a].from] -= out.arc_flow[a];
    balance[arcs[a].to] += out.arc_flow[a];
  }
  for (std::size_t node = 2; node < balance.size(); ++node) {
    if (balance[node] != 0) throw InvariantViolation("flow state violates conservation");
  }
  if (balance[FlowNetwork::kSink] != out.value) throw InvariantViolation("flow value mismatch");
  return out;
}

std::int64_t residual(const FlowNetwork& net, const FlowState& state, std::size_t entry) {
  const std::size_t a = entry / 2;
  return entry % 2 == 0 ? net.arcs()[a].capacity - state.arc_flow[a] : state.arc_flow[a];
}

std::size_t head(const FlowNetwork& net, std::size_t entry) {
  const auto& arc = net.arcs()[entry / 2];
  return entry % 2 == 0 ? arc.to : arc.from;
}

// Breadth-first search in the residual graph; fills `parent` with the entry
// used to reach each node. Returns whether the sink was reached.
bool find_path(const FlowNetwork& net, const FlowState& state, AugmentOrder order,
               std::vector<std::size_t>& parent) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  parent.assign(net.num_nodes(), kNone);
  std::vector<char> visited(net.num_nodes(), 0);
  std::deque<std::size_t> queue{FlowNetwork::kSource};
  visited[FlowNetwork::kSource] = 1;
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    const auto entries = net.residual_entries(node);
    const auto visit = [&](std::size_t entry) {
      const std::size_t next = head(net, entry);
      if (visited[next] || residual(net, state, entry) <= 0) return false;
      visited[next] = 1;
      parent[next] = entry;
      if (next == FlowNetwork::kSink) return true;
      queue.push_back(next);
      return false;
    };
    if (order == AugmentOrder::kForward) {
      for (std::size_t entry : entries) {
        if (visit(entry)) return true;
      }
    } else {
      for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (visit(*it)) return true;
      }
    }
  }
  return false;
}

void augment_loop(const FlowNetwork& net, FlowState& state, AugmentOrder order) {
  std::vector<std::size_t> parent;
  while (find_path(net, state, order, parent)) {
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (std::size_t node = FlowNetwork::kSink; node != FlowNetwork::kSource;) {
      const std::size_t entry = parent[node];
      bottleneck = std::min(bottleneck, residual(net, state, entry));
      node = head(net, entry ^ 1);
    }
    for (std::size_t node = FlowNetwork::kSink; node != FlowNetwork::kSource;) {
      const std::size_t entry = parent[node];
      state.arc_flow[entry / 2] += entry % 2 == 0 ? bottleneck : -bottleneck;
      node = head(net, entry ^ 1);
    }
    state.value += bottleneck;
  }
}

}  // namespace

FlowNetwork FlowNetwork::build(const HostGraph& g, std::span<const Weight> weights, const Placement& s,
                               std::span<const FacilityIndex> facilities) {
  if (facilities.empty()) throw std::invalid_argument("flow network needs at least one facility");
  if (weights.size() != g.num_vertices()) throw std::invalid_argument("weight vector size mismatch");
  FlowNetwork net;
  net.facilities_.assign(facilities.begin(), facilities.end());
  std::vector<std::size_t> client_index(g.num_vertices(), std::numeric_limits<std::size_t>::max());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (weights[v] < 0) throw std::invalid_argument("negative client weight");
    if (weights[v] == 0) continue;
    client_index[v] = net.clients_.size();
    net.clients_.push_back(v);
    net.client_weights_.push_back(weights[v]);
  }
  net.adjacency_.assign(net.num_nodes(), {});
  net.range_arcs_.assign(net.clients_.size(), {});
  const auto add_arc = [&net](std::size_t from, std::size_t to, std::int64_t cap) {
    const std::size_t id = net.arcs_.size();
    net.arcs_.push_back({from, to, cap});
    net.adjacency_[from].push_back(2 * id);
    net.adjacency_[to].push_back(2 * id + 1);
    return id;
  };
  for (std::size_t c = 0; c < net.clients_.size(); ++c) add_arc(kSource, net.client_node(c), net.client_weights_[c]);
  // Range arcs grouped by client, facilities in the given order.
  std::vector<std::vector<std::size_t>> facilities_of(net.clients_.size());
  for (std::size_t f = 0; f < net.facilities_.size(); ++f) {
    const VertexId loc = s.at(net.facilities_[f]);
    const auto attach = [&](VertexId v) {
      if (client_index.at(v) != std::numeric_limits<std::size_t>::max()) facilities_of[client_index[v]].push_back(f);
    };
    attach(loc);
    for (VertexId u : g.in_neighbors(loc)) attach(u);
  }
  for (std::size_t c = 0; c < net.clients_.size(); ++c) {
    for (std::size_t f : facilities_of[c]) {
      net.range_arcs_[c].push_back(add_arc(net.client_node(c), net.facility_node(f), net.client_weights_[c]));
    }
  }
  for (std::size_t f = 0; f < net.facilities_.size(); ++f) {
    net.sink_arcs_.push_back(add_arc(net.facility_node(f), kSink, 0));
  }
  net.sink_caps_.assign(net.facilities_.size(), Rational(0));
  net.sink_infinite_.assign(net.facilities_.size(), 0);
  return net;
}

std::int64_t FlowNetwork::total_supply() const {
  std::int64_t total = 0;
  for (std::size_t c = 0; c < clients_.size(); ++c) total += arcs_[c].capacity;
  return total;
}

std::int64_t FlowNetwork::scaled(const Rational& cap) const {
  // cap.den divides scale_ by construction.
  return checked_mul(cap.numerator_i64(), scale_ / cap.denominator_i64());
}

void FlowNetwork::rescale(std::int64_t new_scale) {
  scale_ = new_scale;
  for (std::size_t c = 0; c < clients_.size(); ++c) {
    const std::int64_t cap = checked_mul(client_weights_[c], scale_);
    arcs_[c].capacity = cap;
    for (std::size_t a : range_arcs_[c]) arcs_[a].capacity = cap;
  }
  const std::int64_t inf = infinity();
  for (std::size_t f = 0; f < facilities_.size(); ++f) {
    arcs_[sink_arcs_[f]].capacity = sink_infinite_[f] ? inf : scaled(sink_caps_[f]);
  }
}

void FlowNetwork::set_sink_capacities(const Rational& cap) {
  if (cap.sign() < 0) throw std::invalid_argument("negative sink capacity");
  std::fill(sink_caps_.begin(), sink_caps_.end(), cap);
  std::fill(sink_infinite_.begin(), sink_infinite_.end(), 0);
  rescale(cap.denominator_i64());
}

void FlowNetwork::set_sink_capacity(std::size_t f, const Rational& cap) {
  if (cap.sign() < 0) throw std::invalid_argument("negative sink capacity");
  sink_caps_.at(f) = cap;
  sink_infinite_[f] = 0;
  rescale(std::lcm(scale_, cap.denominator_i64()));
}

void FlowNetwork::set_sink_capacity_infinite(std::size_t f) {
  sink_infinite_.at(f) = 1;
  rescale(scale_);
}

std::optional<Rational> FlowNetwork::sink_capacity(std::size_t f) const {
  if (sink_infinite_.at(f)) return std::nullopt;
  return sink_caps_[f];
}

std::string FlowNetwork::to_dot() const {
  std::ostringstream out;
  out << "digraph flow {\n  rankdir=LR;\n  n0 [label=\"s\"];\n  n1 [label=\"t\"];\n";
  for (std::size_t c = 0; c < clients_.size(); ++c) out << "  n" << client_node(c) << " [label=\"v" << clients_[c] << "\"];\n";
  for (std::size_t f = 0; f < facilities_.size(); ++f) {
    out << "  n" << facility_node(f) << " [label=\"f" << facilities_[f] << "\", shape=box];\n";
  }
  for (const Arc& arc : arcs_) {
    out << "  n" << arc.from << " -> n" << arc.to << " [label=\"" << arc.capacity << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

FlowState max_flow(const FlowNetwork& net, AugmentOrder order) {
  FlowState state;
  state.arc_flow.assign(net.arcs().size(), 0);
  state.scale = net.scale();
  augment_loop(net, state, order);
  return state;
}

void augment_to_max(const FlowNetwork& net, FlowState& state, AugmentOrder order) {
  state = aligned(net, state);
  augment_loop(net, state, order);
}

bool has_augmenting_path(const FlowNetwork& net, const FlowState& state) {
  const FlowState current = aligned(net, state);
  std::vector<std::size_t> parent;
  return find_path(net, current, AugmentOrder::kForward, parent);
}

Rational arc_flow(const FlowState& state, std::size_t arc) {
  return Rational(state.arc_flow.at(arc), state.scale);
}

}  // namespace flg
