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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "flg/errors.hpp"
#include "flg/generators.hpp"

namespace flg {
namespace {

using testing::two_facility;

std::vector<FacilityIndex> all_facilities(const Placement& s) {
  std::vector<FacilityIndex> f(s.size());
  for (FacilityIndex j = 0; j < s.size(); ++j) f[j] = j;
  return f;
}

FlowNetwork two_facility_network() {
  const auto sc = two_facility();
  return FlowNetwork::build(sc.instance.graph, sc.instance.graph.weights(), sc.placement, all_facilities(sc.placement));
}

TEST(MaxFlowTest, BuildsBipartiteNetwork) {
  const FlowNetwork net = two_facility_network();
  EXPECT_EQ(net.num_clients(), 3u);
  EXPECT_EQ(net.num_facilities(), 2u);
  // s -> 3 clients, v1 -> f_p, v2 -> f_p, v3 -> f_q, 2 sink arcs.
  ASSERT_EQ(net.arcs().size(), 3u + 3u + 2u);
  std::vector<std::pair<VertexId, FacilityIndex>> range;
  for (std::size_t c = 0; c < net.num_clients(); ++c) {
    for (std::size_t a : net.range_arcs(c)) {
      range.emplace_back(net.client_vertex(c), net.facility(net.arcs()[a].to - net.facility_node(0)));
      EXPECT_EQ(net.arcs()[a].capacity, 1);
    }
  }
  EXPECT_EQ(range, (std::vector<std::pair<VertexId, FacilityIndex>>{{0, 0}, {1, 0}, {2, 1}}));
  for (std::size_t f = 0; f < 2; ++f) EXPECT_EQ(net.arcs()[net.sink_arc(f)].capacity, 0);
}

TEST(MaxFlowTest, SingleClientPath) {
  const HostGraph g({5}, {});
  const Placement s({0});
  const std::vector<FacilityIndex> f{0};
  FlowNetwork net = FlowNetwork::build(g, g.weights(), s, f);
  EXPECT_EQ(net.arcs().size(), 3u);
  net.set_sink_capacities(Rational(5));
  EXPECT_EQ(max_flow(net).value, 5);
}

TEST(MaxFlowTest, ZeroWeightClientsAreOmitted) {
  const HostGraph g({0, 2, 0}, {{0, 1}, {2, 1}});
  const Placement s({1});
  const std::vector<FacilityIndex> f{0};
  const FlowNetwork net = FlowNetwork::build(g, g.weights(), s, f);
  EXPECT_EQ(net.num_clients(), 1u);
  EXPECT_EQ(net.num_nodes(), 4u);
  EXPECT_THROW(FlowNetwork::build(g, g.weights(), s, {}), std::invalid_argument);
}

TEST(MaxFlowTest, RationalCapacitiesAreScaled) {
  FlowNetwork net = two_facility_network();
  net.set_sink_capacities(Rational(5, 2));
  EXPECT_EQ(net.scale(), 2);
  EXPECT_EQ(net.arcs()[net.sink_arc(0)].capacity, 5);
  EXPECT_EQ(net.arcs()[0].capacity, 2);
  net.set_sink_capacities(Rational(0));
  EXPECT_EQ(max_flow(net).value, 0);
  net.set_sink_capacities(Rational(1));
  net.set_sink_capacity(1, Rational(1, 3));
  EXPECT_EQ(net.scale(), 3);
  EXPECT_EQ(net.arcs()[net.sink_arc(0)].capacity, 3);
  EXPECT_EQ(net.arcs()[net.sink_arc(1)].capacity, 1);
  EXPECT_THROW(net.set_sink_capacities(Rational(-1)), std::invalid_argument);
}

TEST(MaxFlowTest, InfiniteCapacityIsBoundedBySupply) {
  const HostGraph g({4, 3}, {{0, 1}});
  const Placement s({1});
  const std::vector<FacilityIndex> f{0};
  FlowNetwork net = FlowNetwork::build(g, g.weights(), s, f);
  net.set_sink_capacity_infinite(0);
  EXPECT_EQ(net.arcs()[net.sink_arc(0)].capacity, 8);
  EXPECT_EQ(max_flow(net).value, 7);
  EXPECT_EQ(net.sink_capacity(0), std::nullopt);
}

TEST(MaxFlowTest, ValuesMatchBruteForce) {
  const auto sc = two_facility();
  FlowNetwork net = two_facility_network();
  for (std::int64_t cap : {0, 1, 2, 3}) {
    net.set_sink_capacities(Rational(cap));
    const std::int64_t expected = testing::brute_force_max_flow(sc.instance.graph, sc.placement, {cap, cap});
    EXPECT_EQ(max_flow(net, AugmentOrder::kForward).value, expected) << cap;
    EXPECT_EQ(max_flow(net, AugmentOrder::kReverse).value, expected) << cap;
  }
  net.set_sink_capacities(Rational(1));
  EXPECT_EQ(max_flow(net).value, 2);
  net.set_sink_capacities(Rational(2));
  EXPECT_EQ(max_flow(net).value, 3);
}

TEST(MaxFlowTest, DisconnectedFacilityContributesNothing) {
  const HostGraph g({1, 0}, {});
  const Placement s({0, 1});
  FlowNetwork net = FlowNetwork::build(g, g.weights(), s, all_facilities(s));
  net.set_sink_capacities(Rational(3));
  const FlowState flow = max_flow(net);
  EXPECT_EQ(flow.value, 1);
  EXPECT_EQ(flow.arc_flow[net.sink_arc(1)], 0);
}

TEST(MaxFlowTest, AugmentingPathAfterRaisingCapacity) {
  FlowNetwork net = two_facility_network();
  net.set_sink_capacities(Rational(1));
  const FlowState at_one = max_flow(net);
  ASSERT_EQ(at_one.value, 2);
  EXPECT_FALSE(has_augmenting_path(net, at_one));

  net.set_sink_capacity_infinite(0);  // f_p: v1 or v2 still has slack
  EXPECT_TRUE(has_augmenting_path(net, at_one));
  net.set_sink_capacity(0, Rational(1));

  net.set_sink_capacity_infinite(1);  // f_q: v3 is exhausted
  EXPECT_FALSE(has_augmenting_path(net, at_one));
}

TEST(MaxFlowTest, StateFromLowerScaleIsReused) {
  FlowNetwork net = two_facility_network();
  net.set_sink_capacities(Rational(1));
  FlowState state = max_flow(net);
  net.set_sink_capacity(0, Rational(3, 2));  // scale 2
  augment_to_max(net, state);
  EXPECT_EQ(state.scale, 2);
  EXPECT_EQ(state.value, 5);  // 3/2 + 1 at scale 2
  EXPECT_EQ(arc_flow(state, net.sink_arc(0)), Rational(3, 2));
}

TEST(MaxFlowTest, InfeasibleStateIsRejected) {
  FlowNetwork net = two_facility_network();
  net.set_sink_capacities(Rational(2));
  const FlowState state = max_flow(net);
  net.set_sink_capacities(Rational(1));
  EXPECT_THROW(has_augmenting_path(net, state), InvariantViolation);
}

// Value is order independent, monotone in capacities, reuse matches
// recomputation, and each facility's inflow equals its sink arc flow.
TEST(MaxFlowTest, PropertiesOnRandomNetworks) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = gen_random(2 + seed % 10, 0.3, 5, 1 + seed % 5, seed);
    const auto& g = inst.graph;
    std::vector<VertexId> loc(inst.k);
    for (auto& v : loc) v = rng() % g.num_vertices();
    const Placement s(loc);
    FlowNetwork net = FlowNetwork::build(g, g.weights(), s, all_facilities(s));
    const Rational low(static_cast<std::int64_t>(rng() % 12), 1 + static_cast<std::int64_t>(rng() % 4));
    net.set_sink_capacities(low);
    const FlowState forward = max_flow(net, AugmentOrder::kForward);
    const FlowState reverse = max_flow(net, AugmentOrder::kReverse);
    EXPECT_EQ(forward.value, reverse.value);

    for (std::size_t f = 0; f < net.num_facilities(); ++f) {
      std::int64_t inflow = 0;
      for (std::size_t a = 0; a < net.arcs().size(); ++a) {
        if (net.arcs()[a].to == net.facility_node(f)) inflow += forward.arc_flow[a];
      }
      EXPECT_EQ(inflow, forward.arc_flow[net.sink_arc(f)]);
    }

    const std::size_t raised = rng() % net.num_facilities();
    net.set_sink_capacity(raised, low + Rational(1, 2));
    FlowState reused = forward;
    augment_to_max(net, reused);
    const FlowState fresh = max_flow(net);
    EXPECT_EQ(reused.value, fresh.value);
    EXPECT_GE(Rational(fresh.value, fresh.scale), Rational(forward.value, forward.scale));
  }
}

TEST(MaxFlowTest, DotDump) {
  FlowNetwork net = two_facility_network();
  net.set_sink_capacities(Rational(1));
  const std::string dot = net.to_dot();
  EXPECT_NE(dot.find("digraph flow"), std::string::npos);
  EXPECT_NE(dot.find("label=\"f1\""), std::string::npos);
}

}  // namespace
}  // namespace flg
