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

#ifndef FLG_SOCIAL_OPTIMUM_HPP_
#define FLG_SOCIAL_OPTIMUM_HPP_

#include <cstdint>
#include <vector>

#include "flg/core.hpp"

namespace flg {

struct OptimumResult {
  std::vector<VertexId> locations;  // distinct, ascending; min(k, n) of them
  Weight welfare = 0;

  // The locations as a k-facility placement; surplus facilities are placed
  // on the first location.
  Placement as_placement(std::size_t k) const;
};

// Number of k-subsets of n vertices, saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

// Exhaustive search over location sets of size min(k, n). Coverage only
// depends on the occupied set, so this finds the welfare optimum. Throws
// BudgetExceeded when C(n, min(k, n)) exceeds `budget`; use the greedy
// search instead.
OptimumResult optimal_placement_exact(const HostGraph& g, std::size_t k, std::uint64_t budget = 10'000'000);

// Max-coverage greedy: repeatedly adds the location covering the most
// uncovered weight, ties to the smallest vertex id.
OptimumResult optimal_placement_greedy(const HostGraph& g, std::size_t k);

}  // namespace flg

#endif  // FLG_SOCIAL_OPTIMUM_HPP_
