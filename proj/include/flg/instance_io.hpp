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

#ifndef FLG_INSTANCE_IO_HPP_
#define FLG_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "flg/core.hpp"

namespace flg {

struct Instance {
  HostGraph graph;
  std::size_t k = 0;
};

// Line-oriented text format, '#' starts a comment:
//   p flg <n> <m> <k>
//   v <id> <weight>        (n lines, every id in [0, n) exactly once)
//   e <from> <to>          (m lines; <to> is in the shopping range of <from>)
// An instance file may additionally carry one placement line
//   s <id_1> ... <id_k>
// and distribution lines
//   d <client> <facility> <num>/<den>
// after the instance proper, which lets CLI stages be piped together.
//
// All parse errors are reported as InputError with a distinct Kind.
struct InstanceFile {
  Instance instance;
  std::optional<Placement> placement;
  std::optional<WeightDistribution> distribution;
};

InstanceFile parse_instance_file(std::string_view text);
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// A text holding a single "s ..." line (comments allowed).
Placement parse_placement(std::string_view text, const Instance& instance);
std::string serialize_placement(const Placement& s);

WeightDistribution parse_distribution(std::string_view text, const Instance& instance);
std::string serialize_distribution(const WeightDistribution& sigma);

// "l <facility> <num>/<den>" per facility.
std::string serialize_loads(const LoadVector& loads);
LoadVector parse_loads(std::string_view text);

// Graphviz rendering of the host graph; facilities and their loads are
// drawn when given.
std::string to_dot(const HostGraph& g, const Placement* s = nullptr, const LoadVector* loads = nullptr);

}  // namespace flg

#endif  // FLG_INSTANCE_IO_HPP_
