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

#include "flg/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "flg/errors.hpp"

namespace flg {
namespace {

using Kind = InputError::Kind;

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(Kind kind, const Line& line, const std::string& message) {
  throw InputError(kind, "line " + std::to_string(line.number) + ": " + message);
}

template <typename T>
T to_number(const Line& line, std::string_view token, Kind kind = Kind::kMalformedLine) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(kind, line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

VertexId to_vertex(const Line& line, std::string_view token, std::size_t n) {
  if (!token.empty() && token[0] == '-') fail(Kind::kVertexOutOfRange, line, "negative vertex id");
  const auto v = to_number<std::size_t>(line, token);
  if (v >= n) fail(Kind::kVertexOutOfRange, line, "vertex id " + std::to_string(v) + " out of range");
  return v;
}

Placement placement_from(const Line& line, const Instance& instance) {
  if (line.tokens.size() - 1 != instance.k) {
    fail(Kind::kCountMismatch, line,
         "placement has " + std::to_string(line.tokens.size() - 1) + " locations, expected " +
             std::to_string(instance.k));
  }
  std::vector<VertexId> locations;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    locations.push_back(to_vertex(line, line.tokens[i], instance.graph.num_vertices()));
  }
  return Placement(std::move(locations));
}

void add_distribution_line(const Line& line, const Instance& instance, WeightDistribution& sigma) {
  if (line.tokens.size() != 4) fail(Kind::kMalformedLine, line, "expected 'd <client> <facility> <num>/<den>'");
  const VertexId client = to_vertex(line, line.tokens[1], instance.graph.num_vertices());
  const auto facility = to_number<std::size_t>(line, line.tokens[2]);
  if (facility >= instance.k) fail(Kind::kFacilityOutOfRange, line, "facility index out of range");
  Rational amount;
  try {
    amount = Rational::parse(line.tokens[3]);
  } catch (const std::invalid_argument& e) {
    fail(Kind::kBadRational, line, e.what());
  }
  if (amount.sign() < 0) fail(Kind::kBadRational, line, "negative amount");
  sigma.set(client, facility, sigma.get(client, facility) + amount);
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw InputError(Kind::kMalformedHeader, "empty instance");
  const Line& header = lines.front();
  if (header.tokens.size() != 5 || header.tokens[0] != "p" || header.tokens[1] != "flg") {
    fail(Kind::kMalformedHeader, header, "expected 'p flg <n> <m> <k>'");
  }
  const auto n = to_number<std::size_t>(header, header.tokens[2], Kind::kMalformedHeader);
  const auto m = to_number<std::size_t>(header, header.tokens[3], Kind::kMalformedHeader);
  const auto k = to_number<std::size_t>(header, header.tokens[4], Kind::kMalformedHeader);

  std::vector<Weight> weights(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<Edge> edges;
  std::size_t vertex_count = 0;
  std::size_t i = 1;
  for (; i < lines.size() && lines[i].tokens[0] == "v"; ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3) fail(Kind::kMalformedLine, line, "expected 'v <id> <weight>'");
    const VertexId v = to_vertex(line, line.tokens[1], n);
    const auto w = to_number<Weight>(line, line.tokens[2]);
    if (w < 0) fail(Kind::kNegativeWeight, line, "negative weight");
    if (seen[v]) fail(Kind::kDuplicateVertex, line, "vertex " + std::to_string(v) + " declared twice");
    seen[v] = 1;
    weights[v] = w;
    ++vertex_count;
  }
  if (vertex_count != n) {
    throw InputError(Kind::kCountMismatch,
                     "expected " + std::to_string(n) + " vertex lines, got " + std::to_string(vertex_count));
  }
  std::vector<std::vector<VertexId>> out(n);
  for (; i < lines.size() && lines[i].tokens[0] == "e"; ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3) fail(Kind::kMalformedLine, line, "expected 'e <from> <to>'");
    const VertexId from = to_vertex(line, line.tokens[1], n);
    const VertexId to = to_vertex(line, line.tokens[2], n);
    if (from == to) fail(Kind::kSelfLoop, line, "self-loop on vertex " + std::to_string(from));
    for (VertexId z : out[from]) {
      if (z == to) fail(Kind::kDuplicateEdge, line, "duplicate edge");
    }
    out[from].push_back(to);
    edges.push_back({from, to});
  }
  if (edges.size() != m) {
    throw InputError(Kind::kCountMismatch,
                     "expected " + std::to_string(m) + " edge lines, got " + std::to_string(edges.size()));
  }

  InstanceFile file{Instance{HostGraph(std::move(weights), std::move(edges)), k}, std::nullopt, std::nullopt};
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "s") {
      if (file.placement) fail(Kind::kMalformedLine, line, "more than one placement line");
      file.placement = placement_from(line, file.instance);
    } else if (line.tokens[0] == "d") {
      if (!file.distribution) file.distribution.emplace(n, k);
      add_distribution_line(line, file.instance, *file.distribution);
    } else {
      fail(Kind::kMalformedLine, line, "unexpected record '" + std::string(line.tokens[0]) + "'");
    }
  }
  return file;
}

Instance parse_instance(std::string_view text) { return parse_instance_file(text).instance; }

std::string serialize_instance(const Instance& instance) {
  const HostGraph& g = instance.graph;
  std::ostringstream out;
  out << "p flg " << g.num_vertices() << ' ' << g.num_edges() << ' ' << instance.k << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "v " << v << ' ' << g.weight(v) << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.from << ' ' << e.to << '\n';
  return out.str();
}

Placement parse_placement(std::string_view text, const Instance& instance) {
  const auto lines = tokenize(text);
  if (lines.size() != 1 || lines[0].tokens[0] != "s") {
    throw InputError(Kind::kMalformedLine, "expected exactly one 's <id_1> ... <id_k>' line");
  }
  return placement_from(lines[0], instance);
}

std::string serialize_placement(const Placement& s) {
  std::string out = "s";
  for (VertexId v : s.locations()) out += " " + std::to_string(v);
  return out + "\n";
}

WeightDistribution parse_distribution(std::string_view text, const Instance& instance) {
  WeightDistribution sigma(instance.graph.num_vertices(), instance.k);
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] != "d") fail(Kind::kMalformedLine, line, "expected a 'd' record");
    add_distribution_line(line, instance, sigma);
  }
  return sigma;
}

std::string serialize_distribution(const WeightDistribution& sigma) {
  std::ostringstream out;
  for (VertexId v = 0; v < sigma.num_clients(); ++v) {
    for (const auto& [f, amount] : sigma.entries(v)) out << "d " << v << ' ' << f << ' ' << amount << '\n';
  }
  return out.str();
}

std::string serialize_loads(const LoadVector& loads) {
  std::ostringstream out;
  for (std::size_t j = 0; j < loads.size(); ++j) out << "l " << j << ' ' << loads[j] << '\n';
  return out.str();
}

LoadVector parse_loads(std::string_view text) {
  LoadVector loads;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.size() != 3 || line.tokens[0] != "l") fail(Kind::kMalformedLine, line, "expected 'l <j> <value>'");
    if (to_number<std::size_t>(line, line.tokens[1]) != loads.size()) {
      fail(Kind::kFacilityOutOfRange, line, "load records out of order");
    }
    try {
      loads.push_back(Rational::parse(line.tokens[2]));
    } catch (const std::invalid_argument& e) {
      fail(Kind::kBadRational, line, e.what());
    }
  }
  return loads;
}

std::string to_dot(const HostGraph& g, const Placement* s, const LoadVector* loads) {
  std::ostringstream out;
  out << "digraph host {\n  node [shape=circle];\n";
  std::vector<std::vector<FacilityIndex>> at(g.num_vertices());
  if (s != nullptr) {
    for (FacilityIndex j = 0; j < s->size(); ++j) at.at(s->at(j)).push_back(j);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << v << "\\nw=" << g.weight(v) << "\"";
    if (!at[v].empty()) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  v" << e.from << " -> v" << e.to << ";\n";
  if (s != nullptr) {
    out << "  node [shape=box, style=filled, fillcolor=gold];\n";
    for (FacilityIndex j = 0; j < s->size(); ++j) {
      out << "  f" << j << " [label=\"f" << j;
      if (loads != nullptr && j < loads->size()) out << "\\nload=" << (*loads)[j];
      out << "\"];\n  f" << j << " -> v" << s->at(j) << " [style=dashed, arrowhead=none];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace flg
