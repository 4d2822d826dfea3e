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

#ifndef FLG_DYNAMICS_HPP_
#define FLG_DYNAMICS_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flg/core.hpp"
#include "flg/equilibrium.hpp"

namespace flg {

// Loads sorted ascending; compared lexicographically.
using PotentialVector = std::vector<Rational>;

PotentialVector potential_vector(const LoadVector& loads);
// Throws std::invalid_argument on a length mismatch.
std::strong_ordering lex_compare(const PotentialVector& a, const PotentialVector& b);

// Memoizes equilibrium loads by the multiset of occupied locations.
// Co-located facilities share one load, so the multiset determines the loads.
class LoadEvaluator {
 public:
  explicit LoadEvaluator(const HostGraph& g, EquilibriumOptions options = {}) : graph_(g), options_(options) {}

  LoadVector loads(const Placement& s);
  std::size_t distinct_evaluations() const { return cache_.size(); }

 private:
  const HostGraph& graph_;
  EquilibriumOptions options_;
  std::map<std::vector<VertexId>, LoadVector> cache_;  // sorted locations -> loads in that order
};

struct BestResponse {
  VertexId location = 0;
  Rational load;
};

// Location maximizing facility j's equilibrium load with the others fixed.
// Ties go to the current location, then to the smallest vertex id.
BestResponse best_response(const HostGraph& g, const Placement& s, FacilityIndex j);
BestResponse best_response(LoadEvaluator& evaluator, const HostGraph& g, const Placement& s, FacilityIndex j);

struct Deviation {
  FacilityIndex facility = 0;
  VertexId from = 0;
  VertexId to = 0;
  Rational old_load;
  Rational new_load;
};

struct SpeCheck {
  bool stable = true;
  std::optional<Deviation> deviation;  // the first strictly improving move found
};

SpeCheck is_spe(const HostGraph& g, const Placement& s);
SpeCheck is_spe(LoadEvaluator& evaluator, const HostGraph& g, const Placement& s);

struct Move {
  FacilityIndex mover = 0;
  VertexId from = 0;
  VertexId to = 0;
  LoadVector loads_before;
  LoadVector loads_after;
  PotentialVector potential_before;
  PotentialVector potential_after;
};

struct DynamicsTrace {
  Placement initial;
  std::vector<Move> moves;
  Placement terminal;
  LoadVector terminal_loads;
  std::size_t move_count() const { return moves.size(); }
};

inline constexpr std::size_t kDefaultMoveCap = 100'000;

// Round-robin best-response dynamics from `initial`: facilities 0..k-1 take
// turns and move to their best response whenever that strictly raises their
// load, until a full sweep has no move. Throws InvariantViolation when
// `move_cap` moves do not suffice (the game has the finite improvement
// property, so this signals a bug) or when a move fails to raise the
// potential.
DynamicsTrace find_spe(const HostGraph& g, const Placement& initial, std::size_t move_cap = kDefaultMoveCap);
DynamicsTrace find_spe(LoadEvaluator& evaluator, const HostGraph& g, const Placement& initial,
                       std::size_t move_cap = kDefaultMoveCap);

// Uniform random placement of k facilities, deterministic per seed.
Placement random_placement(std::size_t n, std::size_t k, std::uint64_t seed);

// Number of location multisets of size k over n vertices, saturating.
std::uint64_t multiset_count(std::size_t n, std::size_t k);

// Every SPE up to facility relabelling, as placements with ascending
// locations. Throws BudgetExceeded when there are more than `budget`
// multisets.
std::vector<Placement> enumerate_spe(const HostGraph& g, std::size_t k, std::uint64_t budget = 1'000'000);

struct SpeRecord {
  Placement placement;
  Weight welfare = 0;
  Rational ratio;  // optimum welfare / welfare (1 when both are 0)
};

struct PoaReport {
  Weight opt_welfare = 0;
  bool opt_exact = false;
  bool exhaustive = false;  // SPE set enumerated completely
  std::vector<SpeRecord> spes;  // distinct multisets, in discovery order
  Rational poa_estimate;  // max ratio
  Rational pos_estimate;  // min ratio
};

struct PoaOptions {
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  std::uint64_t enumeration_budget = 200'000;
  std::uint64_t opt_budget = 10'000'000;
  std::size_t move_cap = kDefaultMoveCap;
};

// Optimum welfare over discovered SPEs: dynamics from each seed, plus
// exhaustive enumeration when the multiset count is within budget.
PoaReport empirical_poa(const HostGraph& g, std::size_t k, const PoaOptions& options = {});

// CSV with columns move,mover,from,to,old_load,new_load,potential_before,potential_after.
std::string trace_to_csv(const DynamicsTrace& trace);
// Human-readable line log.
std::string trace_to_log(const DynamicsTrace& trace);

}  // namespace flg

#endif  // FLG_DYNAMICS_HPP_
