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

#ifndef FLG_TESTS_FIXTURES_HPP_
#define FLG_TESTS_FIXTURES_HPP_

// Shared instances and brute-force oracles. The oracles here enumerate
// subsets or integral flows directly and never call the flow-based code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flg/core.hpp"
#include "flg/instance_io.hpp"

namespace flg::testing {

struct Scenario {
  Instance instance;
  Placement placement;
};

// Ten unit clients. f1 on 0 attracts {0, 1}; f2 on 6 and f3 on 7 attract
// themselves and {1, 2, 3, 4}; f4 on 5 attracts {4, 5, 8, 9}.
inline Scenario four_facility() {
  std::vector<Edge> edges = {{1, 0}, {4, 5}, {8, 5}, {9, 5}, {1, 6}, {2, 6}, {3, 6}, {4, 6},
                             {1, 7}, {2, 7}, {3, 7}, {4, 7}};
  return {Instance{HostGraph(std::vector<Weight>(10, 1), std::move(edges)), 4}, Placement({0, 6, 7, 5})};
}

// v1 <-> v2, v3 -> v2; f_p on v1, f_q on v3.
inline Scenario two_facility() {
  return {Instance{HostGraph({1, 1, 1}, {{1, 0}, {0, 1}, {2, 1}}), 2}, Placement({0, 2})};
}

inline std::vector<VertexId> brute_attraction(const HostGraph& g, const Placement& s,
                                              const std::vector<FacilityIndex>& facilities) {
  std::vector<char> in(g.num_vertices(), 0);
  for (FacilityIndex j : facilities) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool attracted = v == s[j];
      for (const Edge& e : g.edges()) attracted = attracted || (e.from == v && e.to == s[j]);
      if (attracted) in[v] = 1;
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

struct BruteMns {
  Rational ratio;
  std::vector<FacilityIndex> members;  // union of all minimizing subsets
};

// Minimum ratio w(A(T)) / |T| over all nonempty T of `facilities`.
inline BruteMns brute_force_mns(const HostGraph& g, const std::vector<Weight>& weights, const Placement& s,
                                const std::vector<FacilityIndex>& facilities) {
  const std::size_t m = facilities.size();
  std::optional<Rational> best;
  std::vector<char> member(m, 0);
  std::vector<std::vector<FacilityIndex>> argmins;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<FacilityIndex> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) subset.push_back(facilities[i]);
    }
    Weight w = 0;
    for (VertexId v : brute_attraction(g, s, subset)) w += weights[v];
    const Rational ratio(w, static_cast<std::int64_t>(subset.size()));
    if (!best || ratio < *best) {
      best = ratio;
      argmins.clear();
    }
    if (ratio == *best) argmins.push_back(subset);
  }
  BruteMns out{*best, {}};
  for (const auto& subset : argmins) out.members.insert(out.members.end(), subset.begin(), subset.end());
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

// Equilibrium loads by repeated brute-force extraction; exponential in k.
inline LoadVector brute_force_loads(const HostGraph& g, const Placement& s) {
  LoadVector loads(s.size(), Rational(0));
  std::vector<Weight> weights(g.weights().begin(), g.weights().end());
  std::vector<FacilityIndex> remaining;
  for (FacilityIndex j = 0; j < s.size(); ++j) remaining.push_back(j);
  while (!remaining.empty()) {
    const BruteMns mns = brute_force_mns(g, weights, s, remaining);
    for (FacilityIndex j : mns.members) loads[j] = mns.ratio;
    for (VertexId v : brute_attraction(g, s, mns.members)) weights[v] = 0;
    std::erase_if(remaining, [&](FacilityIndex j) {
      return std::find(mns.members.begin(), mns.members.end(), j) != mns.members.end();
    });
  }
  return loads;
}

// Maximum integral flow value by enumerating every client -> facility
// assignment of integral amounts. `sink_caps[j]` bounds facility j's
// inflow; clients may ship at most their weight.
inline std::int64_t brute_force_max_flow(const HostGraph& g, const Placement& s,
                                         const std::vector<std::int64_t>& sink_caps) {
  struct ArcRef {
    VertexId client;
    FacilityIndex facility;
  };
  std::vector<ArcRef> arcs;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (FacilityIndex j = 0; j < s.size(); ++j) {
      if (g.weight(v) > 0 && (s[j] == v || g.has_edge(v, s[j]))) arcs.push_back({v, j});
    }
  }
  std::vector<std::int64_t> sent(g.num_vertices(), 0);
  std::vector<std::int64_t> received(s.size(), 0);
  std::int64_t best = 0;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t value) {
    if (i == arcs.size()) {
      best = std::max(best, value);
      return;
    }
    const auto [v, j] = arcs[i];
    for (std::int64_t amount = 0; sent[v] + amount <= g.weight(v) && received[j] + amount <= sink_caps[j]; ++amount) {
      sent[v] += amount;
      received[j] += amount;
      rec(i + 1, value + amount);
      sent[v] -= amount;
      received[j] -= amount;
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace flg::testing

#endif  // FLG_TESTS_FIXTURES_HPP_
