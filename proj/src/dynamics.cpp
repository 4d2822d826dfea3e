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

#include "flg/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flg/errors.hpp"
#include "flg/social_optimum.hpp"

namespace flg {
namespace {

std::string join(const std::vector<Rational>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].to_string();
  }
  return out;
}

std::vector<VertexId> sorted_locations(const Placement& s) {
  std::vector<VertexId> locations(s.locations().begin(), s.locations().end());
  std::sort(locations.begin(), locations.end());
  return locations;
}

}  // namespace

PotentialVector potential_vector(const LoadVector& loads) {
  PotentialVector phi = loads;
  std::sort(phi.begin(), phi.end());
  return phi;
}

std::strong_ordering lex_compare(const PotentialVector& a, const PotentialVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("potential vectors differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (const auto c = a[i] <=> b[i]; c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

LoadVector LoadEvaluator::loads(const Placement& s) {
  std::vector<FacilityIndex> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](FacilityIndex a, FacilityIndex b) { return s[a] < s[b]; });
  std::vector<VertexId> key(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) key[i] = s[order[i]];
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    LoadVector computed = compute_equilibrium_loads(graph_, Placement(key), options_).loads;
    it = cache_.emplace(std::move(key), std::move(computed)).first;
  }
  LoadVector out(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = it->second[i];
  return out;
}

BestResponse best_response(LoadEvaluator& evaluator, const HostGraph& g, const Placement& s, FacilityIndex j) {
  validate_placement(g, s);
  BestResponse best{s.at(j), evaluator.loads(s)[j]};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == s[j]) continue;
    Rational load = evaluator.loads(s.with_location(j, v))[j];
    if (load > best.load) best = {v, std::move(load)};
  }
  return best;
}

BestResponse best_response(const HostGraph& g, const Placement& s, FacilityIndex j) {
  LoadEvaluator evaluator(g);
  return best_response(evaluator, g, s, j);
}

SpeCheck is_spe(LoadEvaluator& evaluator, const HostGraph& g, const Placement& s) {
  validate_placement(g, s);
  const LoadVector loads = evaluator.loads(s);
  for (FacilityIndex j = 0; j < s.size(); ++j) {
    // Co-located facilities have identical options; check each location once.
    if (j > 0 && std::find(s.locations().begin(), s.locations().begin() + j, s[j]) != s.locations().begin() + j) {
      continue;
    }
    BestResponse br = best_response(evaluator, g, s, j);
    if (br.load > loads[j]) return {false, Deviation{j, s[j], br.location, loads[j], std::move(br.load)}};
  }
  return {true, std::nullopt};
}

SpeCheck is_spe(const HostGraph& g, const Placement& s) {
  LoadEvaluator evaluator(g);
  return is_spe(evaluator, g, s);
}

DynamicsTrace find_spe(LoadEvaluator& evaluator, const HostGraph& g, const Placement& initial, std::size_t move_cap) {
  if (move_cap == 0) throw std::invalid_argument("move cap must be positive");
  validate_placement(g, initial);
  DynamicsTrace trace;
  trace.initial = initial;
  Placement s = initial;
  LoadVector loads = evaluator.loads(s);
  bool moved = true;
  while (moved) {
    moved = false;
    for (FacilityIndex j = 0; j < s.size(); ++j) {
      BestResponse br = best_response(evaluator, g, s, j);
      if (!(br.load > loads[j])) continue;
      if (trace.moves.size() == move_cap) {
        throw InvariantViolation("improving-response dynamics exceeded the move cap of " + std::to_string(move_cap));
      }
      Move move;
      move.mover = j;
      move.from = s[j];
      move.to = br.location;
      move.loads_before = loads;
      s = s.with_location(j, br.location);
      loads = evaluator.loads(s);
      if (loads[j] != br.load) throw InvariantViolation("best-response load is not reproducible");
      move.loads_after = loads;
      move.potential_before = potential_vector(move.loads_before);
      move.potential_after = potential_vector(move.loads_after);
      if (lex_compare(move.potential_after, move.potential_before) != std::strong_ordering::greater) {
        throw InvariantViolation("improving move did not increase the lexicographic potential");
      }
      trace.moves.push_back(std::move(move));
      moved = true;
    }
  }
  trace.terminal = s;
  trace.terminal_loads = loads;
  return trace;
}

DynamicsTrace find_spe(const HostGraph& g, const Placement& initial, std::size_t move_cap) {
  LoadEvaluator evaluator(g);
  return find_spe(evaluator, g, initial, move_cap);
}

Placement random_placement(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 && k > 0) throw std::invalid_argument("cannot place facilities on an empty graph");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> locations(k);
  for (auto& loc : locations) loc = static_cast<VertexId>(rng() % n);
  return Placement(std::move(locations));
}

std::uint64_t multiset_count(std::size_t n, std::size_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n + k - 1, k);
}

std::vector<Placement> enumerate_spe(const HostGraph& g, std::size_t k, std::uint64_t budget) {
  const std::size_t n = g.num_vertices();
  const std::uint64_t count = multiset_count(n, k);
  if (count > budget) {
    throw BudgetExceeded(std::to_string(count) + " placements exceed the SPE enumeration budget of " +
                         std::to_string(budget));
  }
  std::vector<Placement> found;
  if (count == 0) return found;
  LoadEvaluator evaluator(g);
  std::vector<VertexId> current(k, 0);
  while (true) {
    const Placement s(current);
    if (is_spe(evaluator, g, s).stable) found.push_back(s);
    // Next nondecreasing sequence.
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - 1) --i;
    if (i == 0) break;
    const VertexId next = current[i - 1] + 1;
    for (std::size_t j = i - 1; j < k; ++j) current[j] = next;
  }
  return found;
}

PoaReport empirical_poa(const HostGraph& g, std::size_t k, const PoaOptions& options) {
  PoaReport report;
  try {
    report.opt_welfare = optimal_placement_exact(g, k, options.opt_budget).welfare;
    report.opt_exact = true;
  } catch (const BudgetExceeded&) {
    report.opt_welfare = optimal_placement_greedy(g, k).welfare;
  }

  std::set<std::vector<VertexId>> seen;
  const auto record = [&](const Placement& s) {
    auto key = sorted_locations(s);
    if (!seen.insert(key).second) return;
    SpeRecord rec{Placement(std::move(key)), social_welfare(g, s), Rational(1)};
    if (rec.welfare == 0) {
      if (report.opt_welfare != 0) throw InvariantViolation("zero-welfare SPE below a positive optimum");
    } else {
      rec.ratio = Rational(report.opt_welfare, rec.welfare);
    }
    report.spes.push_back(std::move(rec));
  };

  LoadEvaluator evaluator(g);
  if (g.num_vertices() > 0 || k == 0) {
    for (std::uint64_t seed : options.seeds) {
      record(find_spe(evaluator, g, random_placement(g.num_vertices(), k, seed), options.move_cap).terminal);
    }
  }
  if (multiset_count(g.num_vertices(), k) <= options.enumeration_budget) {
    for (const Placement& s : enumerate_spe(g, k, options.enumeration_budget)) record(s);
    report.exhaustive = true;
  }
  if (report.spes.empty()) throw InvariantViolation("no SPE discovered");
  report.poa_estimate = report.spes.front().ratio;
  report.pos_estimate = report.spes.front().ratio;
  for (const SpeRecord& rec : report.spes) {
    report.poa_estimate = std::max(report.poa_estimate, rec.ratio);
    report.pos_estimate = std::min(report.pos_estimate, rec.ratio);
  }
  return report;
}

std::string trace_to_csv(const DynamicsTrace& trace) {
  std::ostringstream out;
  out << "move,mover,from,to,old_load,new_load,potential_before,potential_after\n";
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    out << i + 1 << ',' << m.mover << ',' << m.from << ',' << m.to << ',' << m.loads_before[m.mover] << ','
        << m.loads_after[m.mover] << ',' << join(m.potential_before, ';') << ',' << join(m.potential_after, ';')
        << '\n';
  }
  return out.str();
}

std::string trace_to_log(const DynamicsTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    out << "move " << i + 1 << ": facility " << m.mover << " " << m.from << " -> " << m.to << ", load "
        << m.loads_before[m.mover] << " -> " << m.loads_after[m.mover] << ", potential (" << join(m.potential_before, ' ')
        << ") -> (" << join(m.potential_after, ' ') << ")\n";
  }
  out << "moves " << trace.moves.size() << "\n";
  return out.str();
}

}  // namespace flg
