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

#include "flg/social_optimum.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "flg/errors.hpp"

namespace flg {
namespace {

class CoverageCounter {
 public:
  explicit CoverageCounter(const HostGraph& g) : graph_(g), count_(g.num_vertices(), 0) {}

  void add(VertexId loc) {
    touch(loc, +1);
    for (VertexId u : graph_.in_neighbors(loc)) touch(u, +1);
  }
  void remove(VertexId loc) {
    touch(loc, -1);
    for (VertexId u : graph_.in_neighbors(loc)) touch(u, -1);
  }
  // Weight that `loc` would newly cover.
  Weight gain(VertexId loc) const {
    Weight gain = count_[loc] == 0 ? graph_.weight(loc) : 0;
    for (VertexId u : graph_.in_neighbors(loc)) {
      if (count_[u] == 0) gain += graph_.weight(u);
    }
    return gain;
  }
  Weight covered() const { return covered_; }

 private:
  void touch(VertexId v, int delta) {
    if (delta > 0 && count_[v]++ == 0) covered_ += graph_.weight(v);
    if (delta < 0 && --count_[v] == 0) covered_ -= graph_.weight(v);
  }

  const HostGraph& graph_;
  std::vector<int> count_;
  Weight covered_ = 0;
};

}  // namespace

Placement OptimumResult::as_placement(std::size_t k) const {
  std::vector<VertexId> out(locations.begin(), locations.end());
  while (out.size() < k) out.push_back(locations.empty() ? 0 : locations.front());
  out.resize(k);
  return Placement(std::move(out));
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

OptimumResult optimal_placement_exact(const HostGraph& g, std::size_t k, std::uint64_t budget) {
  const std::size_t n = g.num_vertices();
  const std::size_t r = std::min(k, n);
  const std::uint64_t combinations = binomial(n, r);
  if (combinations > budget) {
    throw BudgetExceeded(std::to_string(combinations) + " location sets exceed the enumeration budget of " +
                         std::to_string(budget) + "; use the greedy search");
  }
  CoverageCounter counter(g);
  std::vector<VertexId> current;
  OptimumResult best;
  best.welfare = -1;
  const Weight everything = g.total_weight();
  bool done = false;
  const auto dfs = [&](auto&& self, VertexId start) -> void {
    if (done) return;
    if (current.size() == r) {
      if (counter.covered() > best.welfare) {
        best.welfare = counter.covered();
        best.locations = current;
        done = best.welfare == everything;
      }
      return;
    }
    for (VertexId v = start; v + (r - current.size()) <= n && !done; ++v) {
      counter.add(v);
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
      counter.remove(v);
    }
  };
  dfs(dfs, 0);
  return best;
}

OptimumResult optimal_placement_greedy(const HostGraph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  CoverageCounter counter(g);
  std::vector<char> chosen(n, 0);
  OptimumResult result;
  for (std::size_t step = 0; step < std::min(k, n); ++step) {
    VertexId pick = n;
    Weight pick_gain = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      const Weight gain = counter.gain(v);
      if (gain > pick_gain) {
        pick = v;
        pick_gain = gain;
      }
    }
    chosen[pick] = 1;
    counter.add(pick);
    result.locations.push_back(pick);
  }
  std::sort(result.locations.begin(), result.locations.end());
  result.welfare = counter.covered();
  return result;
}

}  // namespace flg
