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

#ifndef FLG_CNF_HPP_
#define FLG_CNF_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flg {

// Literal in DIMACS convention: +v is variable v (1-based), -v its negation.
using Literal = int;

// 3-CNF formula. Every clause has exactly three literals over distinct
// variables.
class CnfFormula {
 public:
  CnfFormula() = default;
  // Throws InputError(kMalformedClause) on a bad clause.
  CnfFormula(std::size_t num_variables, std::vector<std::array<Literal, 3>> clauses);

  std::size_t num_variables() const { return num_variables_; }
  const std::vector<std::array<Literal, 3>>& clauses() const { return clauses_; }

  // assignment[i] is the value of variable i + 1.
  bool satisfied_by(const std::vector<bool>& assignment) const;

 private:
  std::size_t num_variables_ = 0;
  std::vector<std::array<Literal, 3>> clauses_;
};

// DIMACS CNF: "c" comment lines, a "p cnf <vars> <clauses>" header, then
// clauses as 0-terminated literal lists (which may span lines).
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& formula);

// Uniform random 3-CNF with distinct variables per clause; deterministic per
// seed. Needs num_variables >= 3.
CnfFormula random_3cnf(std::size_t num_variables, std::size_t num_clauses, std::uint64_t seed);

}  // namespace flg

#endif  // FLG_CNF_HPP_
