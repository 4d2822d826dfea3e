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

// flg: command-line front end for the two-sided facility location game.
//
// Instances are read from --input or stdin in the line format
//
//   p flg <n> <m> <k>
//   v <id> <weight>        (n lines)
//   e <from> <to>          (m lines; `from` shops at `to`)
//   s <loc_0> ... <loc_k-1>   (optional placement)
//   d <client> <facility> <num/den>   (optional weight distribution)
//
// with '#' comments. Commands that produce a placement re-emit the instance
// followed by the placement, so their output can be piped into the next
// command. Summary lines start with '#'.
//
// Exit codes: 0 success, 1 a check answered "no", 2 malformed input or
// usage, 3 budget exceeded, 4 internal invariant violated.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flg/cnf.hpp"
#include "flg/dynamics.hpp"
#include "flg/equilibrium.hpp"
#include "flg/errors.hpp"
#include "flg/generators.hpp"
#include "flg/instance_io.hpp"
#include "flg/social_optimum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct Inputs {
  std::string input;
  std::string placement;
  std::string distribution;
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, Inputs& in, bool placement, bool distribution) {
  cmd->add_option("-i,--input", in.input, "Instance file (default: stdin)");
  if (placement) cmd->add_option("-p,--placement", in.placement, "Placement file with an 's' line");
  if (distribution) cmd->add_option("--distribution", in.distribution, "Distribution file with 'd' lines");
}

void add_format_option(CLI::App* cmd, Inputs& in, const std::vector<std::string>& formats) {
  cmd->add_option("--format", in.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
}

struct Loaded {
  flg::Instance instance;
  std::optional<flg::Placement> placement;
  std::optional<flg::WeightDistribution> distribution;
};

Loaded load(const Inputs& in) {
  flg::InstanceFile file = flg::parse_instance_file(read_source(in.input));
  Loaded out{std::move(file.instance), std::move(file.placement), std::move(file.distribution)};
  if (!in.placement.empty()) out.placement = flg::parse_placement(read_source(in.placement), out.instance);
  if (!in.distribution.empty()) out.distribution = flg::parse_distribution(read_source(in.distribution), out.instance);
  return out;
}

const flg::Placement& require_placement(const Loaded& l) {
  if (!l.placement) throw UsageError("no placement: add an 's' line or pass --placement");
  return *l.placement;
}

std::string join_locations(const flg::Placement& s) {
  std::string out;
  for (std::size_t j = 0; j < s.size(); ++j) out += (j ? " " : "") + std::to_string(s[j]);
  return out;
}

// Exact optimum within budget, greedy otherwise.
flg::OptimumResult best_known_optimum(const flg::HostGraph& g, std::size_t k, std::uint64_t budget, bool* exact) {
  try {
    *exact = true;
    return flg::optimal_placement_exact(g, k, budget);
  } catch (const flg::BudgetExceeded&) {
    *exact = false;
    return flg::optimal_placement_greedy(g, k);
  }
}

void print_instance_with_placement(std::ostream& out, const flg::Instance& inst, const flg::Placement& s) {
  out << flg::serialize_instance(inst) << flg::serialize_placement(s);
}

int cmd_loads(const Inputs& in) {
  const Loaded l = load(in);
  const flg::Placement& s = require_placement(l);
  const flg::LoadVector loads = flg::compute_equilibrium_loads(l.instance.graph, s).loads;
  if (in.format == "csv") {
    std::cout << "facility,location,load\n";
    for (std::size_t j = 0; j < s.size(); ++j) std::cout << j << ',' << s[j] << ',' << loads[j] << '\n';
  } else if (in.format == "dot") {
    std::cout << flg::to_dot(l.instance.graph, &s, &loads);
  } else {
    std::cout << flg::serialize_loads(loads);
  }
  return kExitOk;
}

int cmd_client_eq(const Inputs& in) {
  const Loaded l = load(in);
  const flg::Placement& s = require_placement(l);
  const flg::LoadComputation c = flg::compute_equilibrium_loads(l.instance.graph, s);
  std::cout << flg::serialize_distribution(flg::extract_client_equilibrium(l.instance.graph, s, c))
            << flg::serialize_loads(c.loads);
  return kExitOk;
}

int cmd_check_client_eq(const Inputs& in) {
  const Loaded l = load(in);
  const flg::Placement& s = require_placement(l);
  if (!l.distribution) throw UsageError("no distribution: add 'd' lines or pass --distribution");
  if (!flg::is_feasible_distribution(l.instance.graph, s, *l.distribution)) {
    throw flg::InputError(flg::InputError::Kind::kBadRational, "distribution is not feasible for this placement");
  }
  const bool ok = flg::is_client_equilibrium(l.instance.graph, s, *l.distribution);
  std::cout << flg::serialize_loads(flg::facility_loads(l.instance.graph, s, *l.distribution));
  std::cout << "client-equilibrium " << (ok ? "true" : "false") << '\n';
  return ok ? kExitOk : kExitNo;
}

int cmd_best_response(const Inputs& in, std::size_t facility) {
  const Loaded l = load(in);
  const flg::Placement& s = require_placement(l);
  if (facility >= s.size()) throw UsageError("--facility out of range");
  const flg::BestResponse br = flg::best_response(l.instance.graph, s, facility);
  std::cout << "best-response facility " << facility << " from " << s[facility] << " to " << br.location << " load "
            << br.load << '\n';
  return kExitOk;
}

struct SpeOptions {
  std::uint64_t seed = 0;
  std::size_t move_cap = flg::kDefaultMoveCap;
  std::uint64_t opt_budget = 10'000'000;
  std::string log;
};

int cmd_find_spe(const Inputs& in, const SpeOptions& opt) {
  const Loaded l = load(in);
  const flg::HostGraph& g = l.instance.graph;
  const flg::Placement initial =
      l.placement ? *l.placement : flg::random_placement(g.num_vertices(), l.instance.k, opt.seed);
  const flg::DynamicsTrace trace = flg::find_spe(g, initial, opt.move_cap);
  if (!opt.log.empty()) {
    std::ofstream log(opt.log);
    if (!log) throw UsageError("cannot write " + opt.log);
    log << flg::trace_to_log(trace);
  }
  if (in.format == "csv") {
    std::cout << flg::trace_to_csv(trace);
    return kExitOk;
  }
  bool exact = false;
  const flg::OptimumResult best = best_known_optimum(g, l.instance.k, opt.opt_budget, &exact);
  const flg::Weight welfare = flg::social_welfare(g, trace.terminal);
  print_instance_with_placement(std::cout, l.instance, trace.terminal);
  std::cout << "# initial " << join_locations(trace.initial) << '\n';
  std::cout << "# moves " << trace.move_count() << '\n';
  std::cout << "# welfare " << welfare << '\n';
  std::cout << "# opt " << best.welfare << (exact ? " exact" : " greedy") << '\n';
  const flg::Rational ratio = welfare == 0 ? flg::Rational(1) : flg::Rational(best.welfare, welfare);
  std::cout << "# ratio " << ratio << '\n';
  return kExitOk;
}

int cmd_check_spe(const Inputs& in) {
  const Loaded l = load(in);
  const flg::Placement& s = require_placement(l);
  const flg::SpeCheck check = flg::is_spe(l.instance.graph, s);
  std::cout << "spe " << (check.stable ? "true" : "false") << '\n';
  if (check.deviation) {
    const flg::Deviation& d = *check.deviation;
    std::cout << "deviation facility " << d.facility << " from " << d.from << " to " << d.to << " load " << d.old_load
              << " -> " << d.new_load << '\n';
  }
  return check.stable ? kExitOk : kExitNo;
}

int cmd_opt(const Inputs& in, bool greedy, std::uint64_t budget) {
  const Loaded l = load(in);
  const flg::OptimumResult r = greedy ? flg::optimal_placement_greedy(l.instance.graph, l.instance.k)
                                      : flg::optimal_placement_exact(l.instance.graph, l.instance.k, budget);
  print_instance_with_placement(std::cout, l.instance, r.as_placement(l.instance.k));
  std::cout << "# welfare " << r.welfare << '\n';
  std::cout << "# method " << (greedy ? "greedy" : "exact") << '\n';
  return kExitOk;
}

int cmd_poa(const Inputs& in, const flg::PoaOptions& options) {
  const Loaded l = load(in);
  const flg::PoaReport r = flg::empirical_poa(l.instance.graph, l.instance.k, options);
  if (in.format == "csv") {
    std::cout << "placement,welfare,ratio\n";
    for (const flg::SpeRecord& rec : r.spes) {
      std::cout << join_locations(rec.placement) << ',' << rec.welfare << ',' << rec.ratio << '\n';
    }
    return kExitOk;
  }
  std::cout << "opt " << r.opt_welfare << (r.opt_exact ? " exact" : " greedy") << '\n';
  std::cout << "spe-search " << (r.exhaustive ? "exhaustive" : "dynamics") << '\n';
  for (const flg::SpeRecord& rec : r.spes) {
    std::cout << "spe " << join_locations(rec.placement) << " welfare " << rec.welfare << " ratio " << rec.ratio
              << '\n';
  }
  std::cout << "poa " << r.poa_estimate << '\n';
  std::cout << "pos " << r.pos_estimate << '\n';
  return kExitOk;
}

int cmd_export_dot(const Inputs& in) {
  const Loaded l = load(in);
  if (!l.placement) {
    std::cout << flg::to_dot(l.instance.graph);
    return kExitOk;
  }
  const flg::LoadVector loads = flg::compute_equilibrium_loads(l.instance.graph, *l.placement).loads;
  std::cout << flg::to_dot(l.instance.graph, &*l.placement, &loads);
  return kExitOk;
}

struct GenOptions {
  std::size_t k = 2;
  std::size_t x = 4;
  std::string cnf;
  std::size_t n = 10;
  double density = 0.2;
  flg::Weight max_weight = 1;
  std::uint64_t seed = 0;
  std::size_t vars = 3;
  std::size_t clauses = 0;
};

int run(int argc, char** argv) {
  CLI::App app{"Two-sided facility location game with load-balancing clients"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 check answered no, 2 bad input or usage, 3 budget exceeded, 4 internal invariant.\n"
      "CSV columns: loads facility,location,load; find-spe "
      "move,mover,from,to,old_load,new_load,potential_before,potential_after; poa placement,welfare,ratio.");

  Inputs in;
  SpeOptions spe;
  GenOptions gen;
  flg::PoaOptions poa;
  std::size_t facility = 0;
  bool greedy = false;
  bool exact = false;
  std::uint64_t opt_budget = 10'000'000;

  auto* loads = app.add_subcommand("loads", "Client-equilibrium facility loads");
  add_input_options(loads, in, true, false);
  add_format_option(loads, in, {"text", "csv", "dot"});

  auto* client_eq = app.add_subcommand("client-eq", "A client equilibrium (d lines) and its loads");
  add_input_options(client_eq, in, true, false);

  auto* check_client_eq = app.add_subcommand("check-client-eq", "Check that a distribution is a client equilibrium");
  add_input_options(check_client_eq, in, true, true);

  auto* best = app.add_subcommand("best-response", "Best response of one facility");
  add_input_options(best, in, true, false);
  best->add_option("--facility", facility, "Facility index")->required();

  auto* find = app.add_subcommand("find-spe", "Best-response dynamics to a subgame perfect equilibrium");
  add_input_options(find, in, true, false);
  add_format_option(find, in, {"text", "csv"});
  find->add_option("--seed", spe.seed, "Seed for the random start when there is no placement")->capture_default_str();
  find->add_option("--move-cap", spe.move_cap, "Maximum moves")->check(CLI::PositiveNumber)->capture_default_str();
  find->add_option("--opt-budget", spe.opt_budget, "Exact optimum budget (location sets)")->capture_default_str();
  find->add_option("--log", spe.log, "Write a move log to this file");

  auto* check_spe = app.add_subcommand("check-spe", "Check a placement for improving deviations");
  add_input_options(check_spe, in, true, false);

  auto* opt = app.add_subcommand("opt", "Welfare-optimal placement");
  add_input_options(opt, in, false, false);
  auto* exact_flag = opt->add_flag("--exact", exact, "Exhaustive search (default)");
  opt->add_flag("--greedy", greedy, "Max-coverage greedy")->excludes(exact_flag);
  opt->add_option("--budget", opt_budget, "Exact search budget (location sets)")->capture_default_str();

  auto* poa_cmd = app.add_subcommand("poa", "Empirical price of anarchy and stability");
  add_input_options(poa_cmd, in, false, false);
  add_format_option(poa_cmd, in, {"text", "csv"});
  poa_cmd->add_option("--seeds", poa.seeds, "Seeds for random starts")->delimiter(',');
  poa_cmd->add_option("--enum-budget", poa.enumeration_budget, "Exhaustive enumeration budget (multisets)")
      ->capture_default_str();
  poa_cmd->add_option("--move-cap", poa.move_cap, "Maximum moves")->check(CLI::PositiveNumber)->capture_default_str();

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering with facilities and loads");
  add_input_options(dot, in, true, false);

  auto* gen_cmd = app.add_subcommand("gen", "Instance generators");
  gen_cmd->require_subcommand(1);
  auto* gen_lb = gen_cmd->add_subcommand("lower-bound", "Star family with a unique inefficient equilibrium");
  gen_lb->add_option("--k", gen.k, "Facilities (>= 2)")->capture_default_str();
  gen_lb->add_option("--x", gen.x, "Star parameter (>= 4)")->capture_default_str();
  auto* gen_sat = gen_cmd->add_subcommand("3sat", "Reduction graph of a 3-CNF formula");
  gen_sat->add_option("--cnf", gen.cnf, "DIMACS file (default: stdin)");
  auto* gen_rcnf = gen_cmd->add_subcommand("random-3cnf", "Random 3-CNF formula in DIMACS format");
  gen_rcnf->add_option("--vars", gen.vars, "Variables")->capture_default_str();
  gen_rcnf->add_option("--clauses", gen.clauses, "Clauses")->required();
  gen_rcnf->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  auto* gen_rand = gen_cmd->add_subcommand("random", "Seeded random instance");
  gen_rand->add_option("--n", gen.n, "Vertices")->capture_default_str();
  gen_rand->add_option("--density", gen.density, "Edge probability")->capture_default_str();
  gen_rand->add_option("--max-weight", gen.max_weight, "Maximum vertex weight")->capture_default_str();
  gen_rand->add_option("--k", gen.k, "Facilities")->capture_default_str();
  gen_rand->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  auto* gen_us = gen_cmd->add_subcommand("basic-us", "Two mutually linked vertices with a facility on each");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*loads) return cmd_loads(in);
  if (*client_eq) return cmd_client_eq(in);
  if (*check_client_eq) return cmd_check_client_eq(in);
  if (*best) return cmd_best_response(in, facility);
  if (*find) return cmd_find_spe(in, spe);
  if (*check_spe) return cmd_check_spe(in);
  if (*opt) return cmd_opt(in, greedy, opt_budget);
  if (*poa_cmd) return cmd_poa(in, poa);
  if (*dot) return cmd_export_dot(in);
  if (*gen_lb) {
    std::cout << flg::serialize_instance(flg::gen_lower_bound(gen.k, gen.x));
  } else if (*gen_sat) {
    std::cout << flg::serialize_instance(flg::gen_3sat(flg::parse_dimacs(read_source(gen.cnf))));
  } else if (*gen_rcnf) {
    std::cout << flg::serialize_dimacs(flg::random_3cnf(gen.vars, gen.clauses, gen.seed));
  } else if (*gen_rand) {
    std::cout << flg::serialize_instance(flg::gen_random(gen.n, gen.density, gen.max_weight, gen.k, gen.seed));
  } else if (*gen_us) {
    const flg::InstanceWithPlacement us = flg::gen_basic_us_counterexample();
    print_instance_with_placement(std::cout, us.instance, us.placement);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const flg::InputError& e) {
    std::cerr << "flg: input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UsageError& e) {
    std::cerr << "flg: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "flg: invalid argument: " << e.what() << '\n';
    return kExitInput;
  } catch (const flg::BudgetExceeded& e) {
    std::cerr << "flg: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const flg::InvariantViolation& e) {
    std::cerr << "flg: internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "flg: internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}
