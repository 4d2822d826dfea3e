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

#include "flg/equilibrium.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "flg/errors.hpp"

namespace flg {
namespace {

// Reduced fraction with a small denominator; the search works on these and
// only the result becomes a Rational.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

bool less(const Fraction& a, const Fraction& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Fraction> materialize(std::int64_t total_weight, std::size_t k) {
  std::vector<Fraction> values;
  values.reserve(count_possible_utilities(total_weight, k));
  values.push_back({0, 1});
  for (std::int64_t y = 1; y <= static_cast<std::int64_t>(k); ++y) {
    for (std::int64_t x = 1; x <= total_weight * y; ++x) {
      if (std::gcd(x, y) == 1) values.push_back({x, y});
    }
  }
  std::sort(values.begin(), values.end(), less);
  return values;
}

// Evaluates the threshold predicate "every facility can be saturated at sink
// capacity c" on one network.
class ThresholdProbe {
 public:
  ThresholdProbe(FlowNetwork& net, AugmentOrder order) : net_(net), order_(order) {}

  bool feasible(const Fraction& c) {
    const Rational cap(c.num, c.den);
    net_.set_sink_capacities(cap);
    // One saturated sink arc carries cap * scale = numerator units.
    return max_flow(net_, order_).value == cap.numerator_i64() * static_cast<std::int64_t>(net_.num_facilities());
  }

 private:
  FlowNetwork& net_;
  AugmentOrder order_;
};

Fraction search_materialized(ThresholdProbe& probe, std::int64_t total_weight, std::size_t m) {
  const auto values = materialize(total_weight, m);
  std::size_t lo = 0;  // values[0] = 0 is always feasible
  std::size_t hi = values.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (probe.feasible(values[mid])) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return values[lo];
}

// Largest t in [1, t_max] with pred(t), given pred is monotone (true then
// false) and pred(1) holds.
template <typename Pred>
std::int64_t last_true(std::int64_t t_max, Pred pred) {
  std::int64_t good = 1;
  std::int64_t step = 1;
  while (good < t_max) {
    const std::int64_t next = std::min(t_max, good + step);
    if (!pred(next)) {
      std::int64_t lo = good;
      std::int64_t hi = next - 1;
      while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (pred(mid)) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      return lo;
    }
    good = next;
    step *= 2;
  }
  return good;
}

Fraction search_stern_brocot(ThresholdProbe& probe, std::int64_t total_weight, std::size_t m) {
  const auto max_den = static_cast<std::int64_t>(m);
  // Largest feasible integer.
  std::int64_t lo = 0;
  std::int64_t hi = total_weight;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (probe.feasible({mid, 1})) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (lo == total_weight) return {lo, 1};
  // Farey neighbours: left feasible, right infeasible.
  Fraction left{lo, 1};
  Fraction right{lo + 1, 1};
  while (left.den + right.den <= max_den) {
    const Fraction mediant{left.num + right.num, left.den + right.den};
    if (probe.feasible(mediant)) {
      // Walk towards `right`: left + t * right stays feasible up to some t.
      const std::int64_t t_max = (max_den - left.den) / right.den;
      const std::int64_t t = last_true(t_max, [&](std::int64_t t) {
        return t == 1 || probe.feasible({left.num + t * right.num, left.den + t * right.den});
      });
      left = {left.num + t * right.num, left.den + t * right.den};
    } else {
      // Walk towards `left`: t * left + right stays infeasible up to some t.
      const std::int64_t t_max = (max_den - right.den) / left.den;
      const std::int64_t t = last_true(t_max, [&](std::int64_t t) {
        return t == 1 || !probe.feasible({t * left.num + right.num, t * left.den + right.den});
      });
      right = {t * left.num + right.num, t * left.den + right.den};
    }
  }
  return left;
}

Weight attracted_weight(const HostGraph& g, std::span<const Weight> weights, const Placement& s,
                        std::span<const FacilityIndex> facilities) {
  Weight total = 0;
  for (VertexId v : attraction_range(g, s, facilities)) total += weights[v];
  return total;
}

}  // namespace

std::size_t count_possible_utilities(std::int64_t total_weight, std::size_t k) {
  if (k == 0) throw std::invalid_argument("possible utilities need k >= 1");
  if (total_weight < 0) throw std::invalid_argument("negative total weight");
  // In (0, W] there are exactly W * phi(y) reduced fractions with denominator y.
  __int128 count = 1;
  for (std::size_t y = 1; y <= k; ++y) {
    count += static_cast<__int128>(total_weight) * euler_phi(static_cast<std::int64_t>(y));
    if (count > static_cast<__int128>(std::numeric_limits<std::size_t>::max() / 2)) {
      return std::numeric_limits<std::size_t>::max() / 2;
    }
  }
  return static_cast<std::size_t>(count);
}

std::vector<Rational> possible_utilities(std::int64_t total_weight, std::size_t k, std::size_t limit) {
  const std::size_t count = count_possible_utilities(total_weight, k);
  if (count > limit) {
    throw BudgetExceeded(std::to_string(count) + " candidate utilities exceed the limit of " +
                         std::to_string(limit));
  }
  std::vector<Rational> values;
  values.reserve(count);
  for (const Fraction& f : materialize(total_weight, k)) values.emplace_back(f.num, f.den);
  return values;
}

MnsResult compute_mns(const HostGraph& g, std::span<const Weight> weights, std::span<const FacilityIndex> facilities,
                      const Placement& s, const EquilibriumOptions& options) {
  if (facilities.empty()) throw std::invalid_argument("compute_mns needs a nonempty facility set");
  const std::size_t m = facilities.size();
  const Weight total = attracted_weight(g, weights, s, facilities);

  MnsResult result{{}, Rational(0), FlowNetwork::build(g, weights, s, facilities), {}};
  ThresholdProbe probe(result.network, options.order);
  UtilitySearch search = options.search;
  if (search == UtilitySearch::kAuto) {
    search = count_possible_utilities(total, m) <= options.materialize_limit ? UtilitySearch::kMaterialized
                                                                              : UtilitySearch::kSternBrocot;
  }
  const Fraction rho =
      search == UtilitySearch::kMaterialized ? search_materialized(probe, total, m) : search_stern_brocot(probe, total, m);
  result.ratio = Rational(rho.num, rho.den);

  FlowNetwork& net = result.network;
  net.set_sink_capacities(result.ratio);
  result.witness_flow = max_flow(net, options.order);
  if (result.witness_flow.value != result.ratio.numerator_i64() * static_cast<std::int64_t>(m)) {
    throw InvariantViolation("threshold search returned an infeasible ratio");
  }
  for (std::size_t f = 0; f < m; ++f) {
    net.set_sink_capacity_infinite(f);
    if (!has_augmenting_path(net, result.witness_flow)) result.members.push_back(facilities[f]);
    net.set_sink_capacity(f, result.ratio);
  }
  std::sort(result.members.begin(), result.members.end());
  if (result.members.empty()) throw InvariantViolation("minimum neighbourhood set is empty");
  const Rational member_ratio(attracted_weight(g, weights, s, result.members),
                              static_cast<std::int64_t>(result.members.size()));
  if (member_ratio != result.ratio) throw InvariantViolation("extracted set does not attain the threshold ratio");
  return result;
}

LoadComputation compute_equilibrium_loads(const HostGraph& g, const Placement& s, const EquilibriumOptions& options) {
  validate_placement(g, s);
  LoadComputation computation;
  computation.loads.assign(s.size(), Rational(0));
  std::vector<Weight> weights(g.weights().begin(), g.weights().end());
  std::vector<FacilityIndex> remaining(s.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    MnsResult mns = compute_mns(g, weights, remaining, s, options);
    if (!computation.rounds.empty() && mns.ratio < computation.rounds.back().mns.ratio) {
      throw InvariantViolation("minimum neighbourhood ratios decreased between rounds");
    }
    for (FacilityIndex j : mns.members) computation.loads[j] = mns.ratio;
    std::vector<VertexId> removed;
    for (VertexId v : attraction_range(g, s, mns.members)) {
      if (weights[v] > 0) removed.push_back(v);
      weights[v] = 0;
    }
    std::erase_if(remaining, [&](FacilityIndex j) { return std::binary_search(mns.members.begin(), mns.members.end(), j); });
    computation.rounds.push_back({std::move(mns), std::move(removed)});
  }
  return computation;
}

WeightDistribution extract_client_equilibrium(const HostGraph& g, const Placement& s,
                                              const LoadComputation& computation) {
  WeightDistribution sigma(g.num_vertices(), s.size());
  for (const ExtractionRound& round : computation.rounds) {
    const FlowNetwork& net = round.mns.network;
    const std::size_t first_facility_node = net.facility_node(0);
    for (std::size_t c = 0; c < net.num_clients(); ++c) {
      const VertexId v = net.client_vertex(c);
      if (!std::binary_search(round.removed_clients.begin(), round.removed_clients.end(), v)) continue;
      for (std::size_t a : net.range_arcs(c)) {
        const Rational amount = arc_flow(round.mns.witness_flow, a);
        if (amount.sign() > 0) sigma.set(v, net.facility(net.arcs()[a].to - first_facility_node), amount);
      }
    }
  }
  return sigma;
}

bool is_client_equilibrium(const HostGraph& g, const Placement& s, const WeightDistribution& sigma) {
  const LoadVector loads = facility_loads(g, s, sigma);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto entries = sigma.entries(v);
    if (entries.empty()) continue;
    const auto in_range = facilities_in_range(g, s, v);
    Rational minimum = loads[in_range.front()];
    for (FacilityIndex j : in_range) minimum = std::min(minimum, loads[j]);
    for (const auto& [f, amount] : entries) {
      if (amount.sign() > 0 && loads[f] > minimum) return false;
    }
  }
  return true;
}

}  // namespace flg
