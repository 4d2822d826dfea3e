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

#include "flg/core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "flg/errors.hpp"

namespace flg {

HostGraph::HostGraph(std::vector<Weight> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const std::size_t n = weights_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (weights_[v] < 0) {
      throw InputError(InputError::Kind::kNegativeWeight,
                       "vertex " + std::to_string(v) + " has negative weight");
    }
    // Keeps every scaled flow capacity comfortably inside 64 bits.
    if (weights_[v] > std::numeric_limits<Weight>::max() / 4 - total_weight_) {
      throw InputError(InputError::Kind::kMalformedLine, "total vertex weight too large");
    }
    total_weight_ += weights_[v];
  }
  out_.assign(n, {});
  in_.assign(n, {});
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n) {
      throw InputError(InputError::Kind::kVertexOutOfRange,
                       "edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
                           " has an endpoint out of range");
    }
    if (e.from == e.to) {
      throw InputError(InputError::Kind::kSelfLoop, "self-loop on vertex " + std::to_string(e.from));
    }
    out_[e.from].push_back(e.to);
    in_[e.to].push_back(e.from);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
    if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end()) {
      throw InputError(InputError::Kind::kDuplicateEdge,
                       "duplicate edge out of vertex " + std::to_string(v));
    }
  }
}

bool HostGraph::has_edge(VertexId from, VertexId to) const {
  const auto& out = out_.at(from);
  return std::binary_search(out.begin(), out.end(), to);
}

Placement Placement::with_location(FacilityIndex j, VertexId v) const {
  Placement copy = *this;
  copy.locations_.at(j) = v;
  return copy;
}

void WeightDistribution::set(VertexId client, FacilityIndex facility, Rational amount) {
  if (facility >= num_facilities_) throw std::out_of_range("facility index out of range");
  auto& row = entries_.at(client);
  auto it = std::lower_bound(row.begin(), row.end(), facility,
                             [](const Entry& e, FacilityIndex f) { return e.first < f; });
  if (it != row.end() && it->first == facility) {
    if (amount.sign() == 0) {
      row.erase(it);
    } else {
      it->second = std::move(amount);
    }
  } else if (amount.sign() != 0) {
    row.insert(it, Entry{facility, std::move(amount)});
  }
}

Rational WeightDistribution::get(VertexId client, FacilityIndex facility) const {
  for (const auto& [f, amount] : entries_.at(client)) {
    if (f == facility) return amount;
  }
  return Rational(0);
}

std::vector<VertexId> shopping_range(const HostGraph& g, VertexId v) {
  if (v >= g.num_vertices()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  std::vector<VertexId> range(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
  range.insert(std::lower_bound(range.begin(), range.end(), v), v);
  return range;
}

std::vector<VertexId> attraction_range(const HostGraph& g, const Placement& s,
                                       std::span<const FacilityIndex> facilities) {
  std::vector<VertexId> range;
  for (FacilityIndex j : facilities) {
    const VertexId loc = s.at(j);
    range.push_back(loc);
    range.insert(range.end(), g.in_neighbors(loc).begin(), g.in_neighbors(loc).end());
  }
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());
  return range;
}

std::vector<FacilityIndex> facilities_in_range(const HostGraph& g, const Placement& s, VertexId v) {
  std::vector<FacilityIndex> result;
  for (FacilityIndex j = 0; j < s.size(); ++j) {
    if (s[j] == v || g.has_edge(v, s[j])) result.push_back(j);
  }
  return result;
}

void validate_placement(const HostGraph& g, const Placement& s) {
  for (VertexId loc : s.locations()) {
    if (loc >= g.num_vertices()) {
      throw std::out_of_range("placement location " + std::to_string(loc) + " out of range");
    }
  }
}

namespace {

std::vector<char> covered_mask(const HostGraph& g, std::span<const VertexId> locations) {
  std::vector<char> covered(g.num_vertices(), 0);
  for (VertexId loc : locations) {
    covered.at(loc) = 1;
    for (VertexId u : g.in_neighbors(loc)) covered[u] = 1;
  }
  return covered;
}

}  // namespace

std::vector<VertexId> covered_clients(const HostGraph& g, const Placement& s) {
  const auto mask = covered_mask(g, s.locations());
  std::vector<VertexId> result;
  for (VertexId v = 0; v < mask.size(); ++v) {
    if (mask[v]) result.push_back(v);
  }
  return result;
}

Weight covered_weight(const HostGraph& g, std::span<const VertexId> locations) {
  const auto mask = covered_mask(g, locations);
  Weight total = 0;
  for (VertexId v = 0; v < mask.size(); ++v) {
    if (mask[v]) total += g.weight(v);
  }
  return total;
}

Weight social_welfare(const HostGraph& g, const Placement& s) { return covered_weight(g, s.locations()); }

bool is_feasible_distribution(const HostGraph& g, const Placement& s, const WeightDistribution& sigma) {
  if (sigma.num_clients() != g.num_vertices() || sigma.num_facilities() != s.size()) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto in_range = facilities_in_range(g, s, v);
    Rational sum(0);
    for (const auto& [f, amount] : sigma.entries(v)) {
      if (amount.sign() < 0) return false;
      if (!std::binary_search(in_range.begin(), in_range.end(), f)) return false;
      sum += amount;
    }
    const Rational expected = in_range.empty() ? Rational(0) : Rational(g.weight(v));
    if (sum != expected) return false;
  }
  return true;
}

LoadVector facility_loads(const HostGraph& g, const Placement& s, const WeightDistribution& sigma) {
  if (!is_feasible_distribution(g, s, sigma)) {
    throw std::invalid_argument("weight distribution is not feasible for the placement");
  }
  LoadVector loads(s.size(), Rational(0));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const auto& [f, amount] : sigma.entries(v)) loads[f] += amount;
  }
  return loads;
}

std::optional<Rational> client_cost(const HostGraph& g, const Placement& s, const WeightDistribution& sigma,
                                    VertexId v) {
  const auto entries = sigma.entries(v);
  if (entries.empty()) return std::nullopt;
  const LoadVector loads = facility_loads(g, s, sigma);
  std::optional<Rational> cost;
  for (const auto& [f, amount] : entries) {
    if (amount.sign() > 0 && (!cost || loads[f] > *cost)) cost = loads[f];
  }
  return cost;
}

}  // namespace flg
