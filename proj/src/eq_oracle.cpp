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

#include "flg/eq_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flg/errors.hpp"

namespace flg {
namespace {

struct ClientBlock {
  long double weight = 0;
  std::vector<FacilityIndex> range;
  std::vector<long double> amount;  // parallel to range
};

long double gap_of(const std::vector<ClientBlock>& clients, const std::vector<long double>& loads) {
  long double gap = 0;
  for (const ClientBlock& c : clients) {
    long double lowest = loads[c.range.front()];
    for (FacilityIndex j : c.range) lowest = std::min(lowest, loads[j]);
    for (std::size_t i = 0; i < c.range.size(); ++i) gap += c.amount[i] * (loads[c.range[i]] - lowest);
  }
  return gap;
}

}  // namespace

OracleResult eq_oracle_loads(const HostGraph& g, const Placement& s, long double tolerance, std::size_t max_iters) {
  if (!(tolerance > 0)) throw std::invalid_argument("oracle tolerance must be positive");
  validate_placement(g, s);
  std::vector<long double> loads(s.size(), 0);
  std::vector<ClientBlock> clients;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.weight(v) == 0) continue;
    ClientBlock c;
    c.range = facilities_in_range(g, s, v);
    if (c.range.empty()) continue;
    c.weight = static_cast<long double>(g.weight(v));
    c.amount.assign(c.range.size(), 0);
    c.amount.front() = c.weight;
    loads[c.range.front()] += c.weight;
    clients.push_back(std::move(c));
  }

  OracleResult result;
  result.stationarity_gap = gap_of(clients, loads);
  while (result.stationarity_gap > tolerance) {
    if (result.iterations == max_iters) {
      throw ConvergenceError("EQ oracle did not converge: gap " + std::to_string(static_cast<double>(result.stationarity_gap)) +
                             " after " + std::to_string(max_iters) + " sweeps");
    }
    ++result.iterations;
    for (ClientBlock& c : clients) {
      // A few pairwise steps per block; each is an exact line search.
      for (std::size_t step = 0; step < c.range.size(); ++step) {
        std::size_t toward = 0;
        std::size_t away = c.range.size();
        for (std::size_t i = 0; i < c.range.size(); ++i) {
          if (loads[c.range[i]] < loads[c.range[toward]]) toward = i;
          if (c.amount[i] > 0 && (away == c.range.size() || loads[c.range[i]] > loads[c.range[away]])) away = i;
        }
        if (away == c.range.size() || away == toward) break;
        const long double diff = loads[c.range[away]] - loads[c.range[toward]];
        if (diff <= 0) break;
        // Minimizer of (l_a - d)^2 + (l_t + d)^2, clipped to the mass available.
        const long double delta = std::min(c.amount[away], diff / 2);
        c.amount[away] -= delta;
        c.amount[toward] += delta;
        loads[c.range[away]] -= delta;
        loads[c.range[toward]] += delta;
      }
    }
    result.stationarity_gap = gap_of(clients, loads);
  }
  result.loads.assign(loads.begin(), loads.end());
  return result;
}

}  // namespace flg
