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

#ifndef FLG_EQ_ORACLE_HPP_
#define FLG_EQ_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "flg/core.hpp"

namespace flg {

struct OracleResult {
  std::vector<double> loads;
  // Sum over clients of sigma_ij * (load_j - min in-range load); zero exactly
  // at a client equilibrium and an upper bound on the objective gap.
  long double stationarity_gap = 0;
  std::size_t iterations = 0;
};

// Floating-point minimizer of the sum of squared facility loads over all
// feasible weight distributions, independent of the flow-based algorithm.
// Uses per-client pairwise conditional-gradient steps (mass moves from the
// most loaded patronized facility to the least loaded facility in range,
// with exact line search). Throws ConvergenceError if the stationarity gap is
// still above `tolerance` after `max_iters` sweeps.
OracleResult eq_oracle_loads(const HostGraph& g, const Placement& s, long double tolerance = 1e-13L,
                             std::size_t max_iters = 1'000'000);

}  // namespace flg

#endif  // FLG_EQ_ORACLE_HPP_
