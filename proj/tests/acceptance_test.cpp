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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every load vector computed here also feeds the denominator and
// total-weight checks (criteria 4 and 5).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "flg/cnf.hpp"
#include "flg/dynamics.hpp"
#include "flg/eq_oracle.hpp"
#include "flg/equilibrium.hpp"
#include "flg/generators.hpp"
#include "flg/social_optimum.hpp"

namespace flg {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Running tallies for the checks that apply to every computed load vector.
struct LoadAudit {
  std::size_t vectors = 0;
  std::size_t denominator_violations = 0;
  std::size_t sum_violations = 0;

  void record(const HostGraph& g, const Placement& s, const LoadVector& loads) {
    ++vectors;
    Rational total(0);
    for (const Rational& l : loads) {
      total += l;
      if (l.denominator() > static_cast<unsigned long>(std::max<std::size_t>(s.size(), 1))) ++denominator_violations;
    }
    if (total != Rational(social_welfare(g, s))) ++sum_violations;
  }
};

LoadAudit audit;

LoadVector audited_loads(const HostGraph& g, const Placement& s, const EquilibriumOptions& options = {}) {
  LoadVector loads = compute_equilibrium_loads(g, s, options).loads;
  audit.record(g, s, loads);
  return loads;
}

Placement uniform_placement(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<VertexId> loc(k);
  for (auto& v : loc) v = rng() % n;
  return Placement(loc);
}

Instance corpus_instance(std::uint64_t seed, std::size_t max_n, std::size_t max_k) {
  std::mt19937_64 rng(seed * 7919 + 1);
  const std::size_t n = 1 + rng() % max_n;
  const std::size_t k = 1 + rng() % max_k;
  const double density = 0.05 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
  const Weight max_weight = 1 + static_cast<Weight>(rng() % 9);
  return gen_random(n, density, max_weight, k, seed);
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Outcome fixture_loads() {
  const auto start = Clock::now();
  const auto four = testing::four_facility();
  const auto two = testing::two_facility();
  const LoadVector l4 = audited_loads(four.instance.graph, four.placement);
  const LoadVector l2 = audited_loads(two.instance.graph, two.placement);
  const double elapsed = seconds_since(start);
  const LoadVector e4{Rational(2), Rational(5, 2), Rational(5, 2), Rational(3)};
  const LoadVector e2{Rational(2), Rational(1)};
  bool oracle_ok = true;
  for (const auto& [sc, exact] : {std::pair{four, e4}, std::pair{two, e2}}) {
    const OracleResult r = eq_oracle_loads(sc.instance.graph, sc.placement);
    for (std::size_t j = 0; j < exact.size(); ++j) oracle_ok &= std::abs(r.loads[j] - exact[j].to_double()) <= 1e-6;
  }
  return {l4 == e4 && l2 == e2 && elapsed < 1.0 && oracle_ok,
          fmt("four-facility exact %s, two-facility exact %s, oracle agrees %s, %.4f s", l4 == e4 ? "yes" : "no",
              l2 == e2 ? "yes" : "no", oracle_ok ? "yes" : "no", elapsed)};
}

struct CertificateTally {
  std::size_t runs = 0;
  std::size_t certified = 0;
  std::size_t monotone_rounds = 0;
};

Outcome load_uniqueness(CertificateTally& certs) {
  constexpr std::size_t kInstances = 600;
  std::size_t mismatches = 0;
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const Instance inst = corpus_instance(seed, 15, 5);
    const HostGraph& g = inst.graph;
    const Placement s = uniform_placement(g.num_vertices(), inst.k, rng);
    const LoadComputation c = compute_equilibrium_loads(g, s);
    audit.record(g, s, c.loads);

    EquilibriumOptions reverse;
    reverse.order = AugmentOrder::kReverse;
    if (audited_loads(g, s, reverse) != c.loads) ++mismatches;

    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexId> loc(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) loc[j] = s[perm[j]];
    const Placement permuted(loc);
    const LoadVector pl = audited_loads(g, permuted);
    for (std::size_t j = 0; j < s.size(); ++j) mismatches += pl[j] != c.loads[perm[j]];

    // Certificate checks for criterion 6 reuse this corpus.
    ++certs.runs;
    const WeightDistribution sigma = extract_client_equilibrium(g, s, c);
    if (is_feasible_distribution(g, s, sigma) && is_client_equilibrium(g, s, sigma) &&
        facility_loads(g, s, sigma) == c.loads) {
      ++certs.certified;
    }
    bool monotone = true;
    for (std::size_t r = 1; r < c.rounds.size(); ++r) monotone &= c.rounds[r - 1].mns.ratio <= c.rounds[r].mns.ratio;
    certs.monotone_rounds += monotone;
  }
  return {mismatches == 0, fmt("%zu instances, %zu mismatches", kInstances, mismatches)};
}

Outcome oracle_equivalence() {
  constexpr std::size_t kInstances = 250;
  const auto start = Clock::now();
  std::mt19937_64 rng(23);
  double worst = 0;
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const Instance inst = corpus_instance(100'000 + seed, 12, 5);
    const Placement s = uniform_placement(inst.graph.num_vertices(), inst.k, rng);
    const LoadVector exact = audited_loads(inst.graph, s);
    try {
      const OracleResult r = eq_oracle_loads(inst.graph, s);
      for (std::size_t j = 0; j < exact.size(); ++j) worst = std::max(worst, std::abs(r.loads[j] - exact[j].to_double()));
    } catch (const std::exception&) {
      ++failures;
    }
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && worst <= 1e-6 && elapsed < 120.0,
          fmt("%zu instances, max deviation %.3g, %zu non-converged, %.2f s", kInstances, worst, failures, elapsed)};
}

Outcome basic_us() {
  const auto [inst, s] = gen_basic_us_counterexample();
  const LoadVector loads = audited_loads(inst.graph, s);
  const Weight both = social_welfare(inst.graph, s);
  const Weight without_first = social_welfare(inst.graph, Placement({s[1]}));
  const Weight without_second = social_welfare(inst.graph, Placement({s[0]}));
  const bool ok = loads == LoadVector{Rational(1), Rational(1)} && both == 2 && without_first == 2 &&
                  without_second == 2;
  return {ok, fmt("loads (%s, %s), welfare %lld, marginal welfare of removal %lld", loads[0].to_string().c_str(),
                  loads[1].to_string().c_str(), static_cast<long long>(both),
                  static_cast<long long>(both - std::max(without_first, without_second)))};
}

std::vector<Rational> observed_ratios;

Outcome dynamics() {
  constexpr std::size_t kInstances = 120;
  constexpr std::uint64_t kSeeds = 5;
  std::size_t runs = 0;
  std::size_t moves = 0;
  std::size_t failures = 0;
  std::size_t potential_violations = 0;
  std::size_t no_lower_load_violations = 0;
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const Instance inst = corpus_instance(200'000 + seed, 15, 4);
    const HostGraph& g = inst.graph;
    LoadEvaluator evaluator(g);
    const Weight opt = optimal_placement_exact(g, inst.k).welfare;
    for (std::uint64_t start = 0; start < kSeeds; ++start) {
      ++runs;
      DynamicsTrace trace;
      try {
        trace = find_spe(evaluator, g, random_placement(g.num_vertices(), inst.k, start));
      } catch (const std::exception&) {
        ++failures;
        continue;
      }
      if (!is_spe(evaluator, g, trace.terminal).stable) ++failures;
      audit.record(g, trace.terminal, trace.terminal_loads);
      Placement current = trace.initial;
      for (const Move& m : trace.moves) {
        ++moves;
        current = current.with_location(m.mover, m.to);
        audit.record(g, current, m.loads_after);
        if (lex_compare(m.potential_after, m.potential_before) != std::strong_ordering::greater ||
            !(m.loads_after[m.mover] > m.loads_before[m.mover])) {
          ++potential_violations;
        }
        for (FacilityIndex q = 0; q < m.loads_after.size(); ++q) {
          if (m.loads_after[q] < m.loads_before[q] && m.loads_after[q] < m.loads_after[m.mover]) {
            ++no_lower_load_violations;
          }
        }
      }
      const Weight w = social_welfare(g, trace.terminal);
      observed_ratios.push_back(w == 0 ? Rational(1) : Rational(opt, w));
    }
  }
  return {failures == 0 && potential_violations == 0 && no_lower_load_violations == 0,
          fmt("%zu runs, %zu moves, %zu non-terminating, %zu potential violations, %zu no-lower-load violations", runs,
              moves, failures, potential_violations, no_lower_load_violations)};
}

Outcome lower_bound_family() {
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t k : {2u, 3u}) {
    for (std::size_t x : {4u, 6u}) {
      const Instance inst = gen_lower_bound(k, x);
      const VertexId center = LowerBoundLayout{k, x}.big_center();
      const std::vector<Placement> spes = enumerate_spe(inst.graph, k);
      const bool unique = spes == std::vector<Placement>{Placement(std::vector<VertexId>(k, center))};
      PoaOptions options;
      options.enumeration_budget = 1'000'000;
      const PoaReport report = empirical_poa(inst.graph, k, options);
      const Rational expected(static_cast<std::int64_t>((2 * k - 1) * x + 1), static_cast<std::int64_t>(k * x + 1));
      const bool ratio_ok = report.poa_estimate == expected && report.pos_estimate == expected && report.exhaustive;
      for (const SpeRecord& r : report.spes) observed_ratios.push_back(r.ratio);
      ok &= unique && ratio_ok;
      detail << "(k=" << k << ",x=" << x << ") ratio " << report.poa_estimate << (unique ? " unique" : " NOT unique")
             << "; ";
    }
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = corpus_instance(300'000 + seed, 9, 3);
    for (const SpeRecord& r : empirical_poa(inst.graph, inst.k).spes) observed_ratios.push_back(r.ratio);
  }
  const Rational worst = *std::max_element(observed_ratios.begin(), observed_ratios.end());
  ok &= worst <= Rational(2);
  detail << observed_ratios.size() << " observed ratios, max " << worst;
  return {ok, detail.str()};
}

// Exhaustive set-cover search: the lowest uncovered vertex must be covered by
// one of the locations in its shopping range.
bool full_cover_exists(const HostGraph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<int> covered(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t left) {
    const auto first = std::find(covered.begin(), covered.end(), 0);
    if (first == covered.end()) return true;
    if (left == 0) return false;
    const VertexId v = static_cast<VertexId>(first - covered.begin());
    for (VertexId loc : shopping_range(g, v)) {
      const std::vector<VertexId> attracted = attraction_range(g, Placement({loc}), std::vector<FacilityIndex>{0});
      for (VertexId u : attracted) ++covered[u];
      const bool found = rec(left - 1);
      for (VertexId u : attracted) --covered[u];
      if (found) return true;
    }
    return false;
  };
  return rec(k);
}

bool brute_satisfiable(const CnfFormula& f, std::vector<bool>* witness) {
  const std::size_t nv = f.num_variables();
  for (std::uint32_t bits = 0; bits < (1u << nv); ++bits) {
    std::vector<bool> a(nv);
    for (std::size_t i = 0; i < nv; ++i) a[i] = (bits >> i) & 1;
    if (f.satisfied_by(a)) {
      *witness = a;
      return true;
    }
  }
  return false;
}

Outcome three_sat_reduction() {
  constexpr std::size_t kFormulas = 80;
  std::size_t agree = 0;
  std::size_t sat = 0;
  std::size_t round_trips = 0;
  for (std::uint64_t seed = 0; seed < kFormulas; ++seed) {
    const std::size_t vars = 3 + seed % 6;
    const std::size_t clauses = std::max<std::size_t>(1, static_cast<std::size_t>(vars * (3.0 + 0.1 * (seed % 40))));
    const CnfFormula f = random_3cnf(vars, clauses, seed);
    const Instance inst = gen_3sat(f);
    std::vector<bool> witness;
    const bool satisfiable = brute_satisfiable(f, &witness);
    agree += full_cover_exists(inst.graph, inst.k) == satisfiable;
    if (satisfiable) {
      ++sat;
      const auto decoded = decode_assignment(inst.graph, f, encode_assignment(witness));
      round_trips += decoded.has_value() && *decoded == witness && f.satisfied_by(*decoded);
    }
  }
  return {agree == kFormulas && round_trips == sat,
          fmt("%zu formulas (%zu satisfiable), %zu agree, %zu/%zu decode round-trips", kFormulas, sat, agree,
              round_trips, sat)};
}

Outcome runtime_growth() {
  constexpr std::size_t k = 8;
  constexpr int kRepeats = 7;
  const std::vector<std::size_t> sizes{20, 40, 80, 160};
  std::vector<double> xs;
  std::vector<double> ys;
  std::ostringstream detail;
  for (std::size_t n : sizes) {
    std::vector<double> times;
    for (int rep = 0; rep < kRepeats; ++rep) {
      const Instance inst = gen_random(n, 6.0 / static_cast<double>(n), 20, k, 400'000 + n * 100 + rep);
      const Placement s = random_placement(n, k, rep);
      const auto start = Clock::now();
      const LoadVector loads = compute_equilibrium_loads(inst.graph, s).loads;
      times.push_back(seconds_since(start));
      audit.record(inst.graph, s, loads);
    }
    std::sort(times.begin(), times.end());
    const double median = times[kRepeats / 2];
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(median));
    detail << "n=" << n << " " << fmt("%.2e", median) << "s; ";
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double num = 0;
  double den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  detail << fmt("log-log slope %.2f", slope);
  return {slope < 4.0, detail.str()};
}

}  // namespace
}  // namespace flg

int main() {
  using flg::Outcome;
  int failed = 0;
  auto report = [&](int id, const char* title, const Outcome& o) {
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  };
  auto guarded = [](auto fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      return Outcome{false, std::string("exception: ") + e.what()};
    }
  };

  flg::CertificateTally certs;
  report(1, "fixture loads", guarded(flg::fixture_loads));
  report(2, "load uniqueness", guarded([&] { return flg::load_uniqueness(certs); }));
  report(3, "oracle equivalence", guarded(flg::oracle_equivalence));
  const Outcome us = guarded(flg::basic_us);
  const Outcome certificate{certs.runs > 0 && certs.certified == certs.runs && certs.monotone_rounds == certs.runs,
                            flg::fmt("%zu/%zu certified, %zu/%zu nondecreasing round ratios", certs.certified,
                                     certs.runs, certs.monotone_rounds, certs.runs)};
  const Outcome dyn = guarded(flg::dynamics);
  const Outcome lower = guarded(flg::lower_bound_family);
  const Outcome sat = guarded(flg::three_sat_reduction);
  const Outcome runtime = guarded(flg::runtime_growth);

  // Criteria 4 and 5 cover every load vector computed above.
  const auto& a = flg::audit;
  report(4, "denominator bound",
         {a.vectors > 0 && a.denominator_violations == 0,
          flg::fmt("%zu load vectors, %zu violations", a.vectors, a.denominator_violations)});
  report(5, "valid-US equality",
         {us.pass && a.sum_violations == 0,
          flg::fmt("%zu load vectors, %zu sum violations; %s", a.vectors, a.sum_violations, us.detail.c_str())});
  report(6, "client-equilibrium certificate", certificate);
  report(7, "SPE dynamics", dyn);
  report(8, "lower-bound family", lower);
  report(9, "3SAT reduction", sat);
  report(10, "polynomial runtime growth", runtime);
  return failed == 0 ? 0 : 1;
}
