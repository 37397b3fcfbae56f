// Copyright 2026 The disagree-kit Authors
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

#include "disagree/edge_list.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "disagree/errors.h"

namespace disagree {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::uint64_t parse_id(std::string_view field, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "invalid node id '" + std::string(field) + "'");
  }
  return value;
}

double parse_weight(std::string_view field, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "invalid weight '" + std::string(field) + "'");
  }
  return value;
}

void append_double(std::string& out, double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, EdgeListFormat format) {
  struct RawEdge {
    std::uint64_t u, v;
    double w;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    const std::size_t expected = format == EdgeListFormat::kUnweighted ? 2
                                 : format == EdgeListFormat::kWeighted ? 3
                                                                        : 0;
    if ((expected != 0 && fields.size() != expected) ||
        (expected == 0 && fields.size() != 2 && fields.size() != 3)) {
      throw ParseError(line_no, "expected " +
                                    (expected ? std::to_string(expected) : std::string("2 or 3")) +
                                    " columns, found " + std::to_string(fields.size()));
    }
    RawEdge e{parse_id(fields[0], line_no), parse_id(fields[1], line_no), 1.0, line_no};
    if (fields.size() == 3) {
      e.w = parse_weight(fields[2], line_no);
      if (!(e.w > 0.0)) {
        throw DomainError("line " + std::to_string(line_no) + ": weight must be positive, got " +
                          std::string(fields[2]));
      }
    }
    if (e.u == e.v) {
      throw DomainError("line " + std::to_string(line_no) + ": self-loop at node " +
                        std::to_string(e.u));
    }
    raw.push_back(e);
  }

  LoadedGraph out;
  for (const RawEdge& e : raw) {
    out.original_ids.push_back(e.u);
    out.original_ids.push_back(e.v);
  }
  std::sort(out.original_ids.begin(), out.original_ids.end());
  out.original_ids.erase(std::unique(out.original_ids.begin(), out.original_ids.end()),
                         out.original_ids.end());
  std::unordered_map<std::uint64_t, NodeId> dense;
  dense.reserve(out.original_ids.size());
  for (std::size_t k = 0; k < out.original_ids.size(); ++k) {
    dense.emplace(out.original_ids[k], static_cast<NodeId>(k));
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.push_back({dense[e.u], dense[e.v], e.w});
  out.graph = WeightedGraph::from_edges(out.original_ids.size(), edges);
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path, EdgeListFormat format) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open edge list '" + path + "'");
  return load_edge_list(in, format);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g,
                     std::span<const std::uint64_t> original_ids) {
  const bool weighted = !g.is_unweighted();
  std::string text;
  for (const Edge& e : g.edges()) {
    const std::uint64_t u = original_ids.empty() ? e.u : original_ids[e.u];
    const std::uint64_t v = original_ids.empty() ? e.v : original_ids[e.v];
    text += std::to_string(u);
    text += '\t';
    text += std::to_string(v);
    if (weighted) {
      text += '\t';
      append_double(text, e.w);
    }
    text += '\n';
  }
  out << text;
}

std::uint64_t graph_fingerprint(const WeightedGraph& g) {
  std::ostringstream canonical;
  canonical << g.node_count() << '\n';
  write_edge_list(canonical, g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace disagree
