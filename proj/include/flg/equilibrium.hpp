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

#ifndef FLG_EQUILIBRIUM_HPP_
#define FLG_EQUILIBRIUM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "flg/core.hpp"
#include "flg/maxflow.hpp"

namespace flg {

// How compute_mns locates the minimum neighbourhood ratio among the
// candidate values x/y (0 <= x/y <= W, y <= |F|).
enum class UtilitySearch {
  kAuto,          // materialize when the candidate count is within the limit
  kMaterialized,  // binary search over the sorted candidate list
  kSternBrocot,   // integer bisection, then bounded-denominator mediant descent
};

struct EquilibriumOptions {
  AugmentOrder order = AugmentOrder::kForward;
  UtilitySearch search = UtilitySearch::kAuto;
  std::size_t materialize_limit = 5'000'000;
};

// A minimum neighbourhood set M of the facilities under consideration, its
// ratio w(A(M)) / |M|, and the maximum flow at sink capacity = ratio that
// certifies it.
struct MnsResult {
  std::vector<FacilityIndex> members;  // ascending
  Rational ratio;
  FlowNetwork network;  // sink capacities set to `ratio`
  FlowState witness_flow;
};

struct ExtractionRound {
  MnsResult mns;
  std::vector<VertexId> removed_clients;  // positive-weight clients of A(M), ascending
};

struct LoadComputation {
  LoadVector loads;
  std::vector<ExtractionRound> rounds;
};

// Number of distinct values x/y with 0 <= x/y <= total_weight, 1 <= y <= k.
std::size_t count_possible_utilities(std::int64_t total_weight, std::size_t k);

// Sorted distinct candidates x/y, 0 <= x/y <= total_weight, 1 <= y <= k.
// Throws BudgetExceeded above `limit` entries and std::invalid_argument for
// k = 0 or a negative weight.
std::vector<Rational> possible_utilities(std::int64_t total_weight, std::size_t k,
                                         std::size_t limit = 5'000'000);

// Minimum neighbourhood set among `facilities` under the (possibly zeroed)
// client weights. Members are exactly the facilities whose sink arc, raised to
// infinity, admits no augmenting path from the witness flow; they form the
// largest set attaining the ratio. Throws std::invalid_argument if
// `facilities` is empty.
MnsResult compute_mns(const HostGraph& g, std::span<const Weight> weights, std::span<const FacilityIndex> facilities,
                      const Placement& s, const EquilibriumOptions& options = {});

// Client-equilibrium loads by repeated extraction of minimum neighbourhood
// sets: each extracted facility gets the round's ratio, the clients it
// attracts are zeroed, and the remaining facilities are processed again.
LoadComputation compute_equilibrium_loads(const HostGraph& g, const Placement& s,
                                          const EquilibriumOptions& options = {});

// The weight distribution read off the witness flows: each client sends what
// the flow of the round that removed it routes to each facility.
WeightDistribution extract_client_equilibrium(const HostGraph& g, const Placement& s,
                                              const LoadComputation& computation);

// True iff every client's positive entries sit on facilities of minimum load
// within its range. Throws std::invalid_argument on an infeasible sigma.
bool is_client_equilibrium(const HostGraph& g, const Placement& s, const WeightDistribution& sigma);

}  // namespace flg

#endif  // FLG_EQUILIBRIUM_HPP_
