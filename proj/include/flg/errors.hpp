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

#ifndef FLG_ERRORS_HPP_
#define FLG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace flg {

// Malformed or structurally invalid input (instance, placement, CNF...).
class InputError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedHeader,
    kMalformedLine,
    kCountMismatch,
    kVertexOutOfRange,
    kFacilityOutOfRange,
    kDuplicateVertex,
    kNegativeWeight,
    kSelfLoop,
    kDuplicateEdge,
    kBadRational,
    kMalformedClause,
  };

  InputError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// An enumeration or search exceeded its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant that the theory guarantees did not hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An iterative numeric method did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flg

#endif  // FLG_ERRORS_HPP_
