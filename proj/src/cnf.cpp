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

#include "flg/cnf.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include "flg/errors.hpp"

namespace flg {
namespace {

using Kind = InputError::Kind;

}  // namespace

CnfFormula::CnfFormula(std::size_t num_variables, std::vector<std::array<Literal, 3>> clauses)
    : num_variables_(num_variables), clauses_(std::move(clauses)) {
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    const auto& clause = clauses_[c];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto var = static_cast<std::size_t>(std::abs(clause[i]));
      if (clause[i] == 0 || var > num_variables_) {
        throw InputError(Kind::kMalformedClause, "clause " + std::to_string(c + 1) + " has an invalid literal");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (std::abs(clause[j]) == std::abs(clause[i])) {
          throw InputError(Kind::kMalformedClause, "clause " + std::to_string(c + 1) + " repeats variable " +
                                                       std::to_string(var));
        }
      }
    }
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  if (assignment.size() != num_variables_) return false;
  for (const auto& clause : clauses_) {
    bool sat = false;
    for (Literal lit : clause) sat = sat || (assignment[std::abs(lit) - 1] == (lit > 0));
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  std::size_t vars = 0;
  std::size_t expected = 0;
  std::vector<std::array<Literal, 3>> clauses;
  std::vector<Literal> pending;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      if (have_header || !(tokens >> format >> vars >> expected) || format != "cnf") {
        throw InputError(Kind::kMalformedHeader, "expected a single 'p cnf <vars> <clauses>' header");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw InputError(Kind::kMalformedHeader, "clause before 'p cnf' header");
    std::istringstream all(line);
    Literal lit = 0;
    while (all >> lit) {
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) {
        throw InputError(Kind::kMalformedClause, "clause " + std::to_string(clauses.size() + 1) + " has " +
                                                     std::to_string(pending.size()) + " literals, expected 3");
      }
      clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
    if (!all.eof()) throw InputError(Kind::kMalformedLine, "non-integer token in clause line");
  }
  if (!have_header) throw InputError(Kind::kMalformedHeader, "missing 'p cnf' header");
  if (!pending.empty()) throw InputError(Kind::kMalformedClause, "unterminated final clause");
  if (clauses.size() != expected) {
    throw InputError(Kind::kCountMismatch, "header announces " + std::to_string(expected) + " clauses, found " +
                                               std::to_string(clauses.size()));
  }
  return CnfFormula(vars, std::move(clauses));
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_variables() << ' ' << formula.clauses().size() << '\n';
  for (const auto& clause : formula.clauses()) out << clause[0] << ' ' << clause[1] << ' ' << clause[2] << " 0\n";
  return out.str();
}

CnfFormula random_3cnf(std::size_t num_variables, std::size_t num_clauses, std::uint64_t seed) {
  if (num_variables < 3) throw std::invalid_argument("random 3-CNF needs at least 3 variables");
  std::mt19937_64 rng(seed);
  std::vector<std::array<Literal, 3>> clauses;
  for (std::size_t c = 0; c < num_clauses; ++c) {
    std::array<Literal, 3> clause{};
    for (std::size_t i = 0; i < 3; ++i) {
      Literal var;
      bool fresh;
      do {
        var = static_cast<Literal>(rng() % num_variables) + 1;
        fresh = true;
        for (std::size_t j = 0; j < i; ++j) fresh = fresh && std::abs(clause[j]) != var;
      } while (!fresh);
      clause[i] = (rng() & 1) != 0 ? var : -var;
    }
    clauses.push_back(clause);
  }
  return CnfFormula(num_variables, std::move(clauses));
}

}  // namespace flg
