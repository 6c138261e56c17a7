// Copyright 2026 The racgrowth Authors
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

#include "racgrowth/graph_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "racgrowth/error.hpp"

namespace racgrowth {

namespace {

std::string label_of(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(where + ": vertex labels must be strings or integers");
}

// Line/column of a byte offset, both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

GroupSpec parse_edge_list(std::string_view text, std::optional<GroupKind> kind_override) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<GroupKind> kind;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError("expected two fields", line_no);
    if (!have_header) {
      try {
        kind = group_kind_from_string(tokens[0]);
      } catch (const Error&) {
        throw ParseError("unknown group kind '" + tokens[0] + "'", line_no, 1);
      }
      try {
        std::size_t used = 0;
        long long value = std::stoll(tokens[1], &used);
        if (used != tokens[1].size() || value < 0) throw std::invalid_argument("n");
        n = static_cast<std::size_t>(value);
      } catch (const std::exception&) {
        throw ParseError("malformed vertex count '" + tokens[1] + "'", line_no);
      }
      if (n > kMaxVertices) throw ParseError("at most 64 vertices are supported", line_no);
      have_header = true;
      continue;
    }
    std::size_t endpoints[2];
    for (int k = 0; k < 2; ++k) {
      std::size_t used = 0;
      long long value = -1;
      try {
        value = std::stoll(tokens[k], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[k].size()) throw ParseError("malformed vertex '" + tokens[k] + "'", line_no);
      if (value < 1 || static_cast<std::size_t>(value) > n) {
        throw ParseError("unknown endpoint '" + tokens[k] + "'", line_no);
      }
      endpoints[k] = static_cast<std::size_t>(value - 1);
    }
    if (endpoints[0] == endpoints[1]) throw ParseError("self-loop at vertex " + tokens[0], line_no);
    edges.emplace_back(endpoints[0], endpoints[1]);
  }
  if (!have_header) throw ParseError("missing 'kind n' header line", 1);
  std::vector<std::string> labels;
  for (std::size_t v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  return GroupSpec{DefiningGraph::from_edges(std::move(labels), edges), kind_override.value_or(*kind)};
}

}  // namespace

GroupKind group_kind_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "racg") return GroupKind::kRacg;
  if (lower == "raag") return GroupKind::kRaag;
  throw Error(ErrorCode::kInvalidArgument, "unknown group kind '" + std::string(text) + "'");
}

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
}

GroupSpec parse_graph_json(const nlohmann::json& j, std::optional<GroupKind> kind_override) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  GroupKind kind;
  if (kind_override) {
    kind = *kind_override;
  } else {
    if (!j.contains("kind")) throw ParseError("missing \"kind\"");
    if (!j["kind"].is_string()) throw ParseError("\"kind\" must be a string");
    try {
      kind = group_kind_from_string(j["kind"].get<std::string>());
    } catch (const Error&) {
      throw ParseError("unknown group kind '" + j["kind"].get<std::string>() + "' at /kind");
    }
  }

  const nlohmann::json empty = nlohmann::json::array();
  const nlohmann::json& edge_json = j.contains("edges") ? j["edges"] : empty;
  if (!edge_json.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<std::string, std::string>> raw_edges;
  for (std::size_t i = 0; i < edge_json.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const auto& e = edge_json[i];
    if (!e.is_array() || e.size() != 2) throw ParseError(where + ": an edge is a pair [u, v]");
    raw_edges.emplace_back(label_of(e[0], where), label_of(e[1], where));
  }

  std::vector<std::string> vertices;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
      std::string label = label_of(j["vertices"][i], "/vertices/" + std::to_string(i));
      if (!seen.insert(label).second) throw ParseError("duplicate vertex '" + label + "' at /vertices/" + std::to_string(i));
      vertices.push_back(label);
    }
  } else {
    std::set<std::string> seen;
    for (const auto& [u, v] : raw_edges) {
      seen.insert(u);
      seen.insert(v);
    }
    vertices.assign(seen.begin(), seen.end());
  }

  if (j.contains("order")) {
    if (!j["order"].is_array()) throw ParseError("\"order\" must be an array");
    std::vector<std::string> order;
    for (std::size_t i = 0; i < j["order"].size(); ++i) order.push_back(label_of(j["order"][i], "/order/" + std::to_string(i)));
    std::vector<std::string> a = order, b = vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw ParseError("\"order\" repeats a vertex");
    if (a != b) throw ParseError("\"order\" must list every vertex exactly once");
    vertices = std::move(order);
  }

  if (vertices.size() > kMaxVertices) throw ParseError("at most 64 vertices are supported");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const auto& [u, v] = raw_edges[i];
    const std::string where = "/edges/" + std::to_string(i);
    if (!index.count(u)) throw ParseError(where + ": unknown endpoint '" + u + "'");
    if (!index.count(v)) throw ParseError(where + ": unknown endpoint '" + v + "'");
    if (u == v) throw ParseError(where + ": self-loop at '" + u + "'");
    edges.emplace_back(index[u], index[v]);
  }
  return GroupSpec{DefiningGraph::from_edges(std::move(vertices), edges), kind};
}

GroupSpec parse_graph(std::string_view text, std::optional<GroupKind> kind_override) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_graph_json(parse_json_text(text), kind_override);
  }
  return parse_edge_list(text, kind_override);
}

nlohmann::json graph_to_json(const GroupSpec& spec) {
  nlohmann::json j;
  j["kind"] = to_string(spec.kind);
  j["vertices"] = spec.graph.labels();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : spec.graph.edges()) edges.push_back({spec.graph.label(u), spec.graph.label(v)});
  j["edges"] = edges;
  return j;
}

TransferMatrix parse_digraph_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array()) {
    throw ParseError("digraph fixture needs a \"nodes\" array");
  }
  std::vector<std::string> nodes;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
    std::string label = label_of(j["nodes"][i], "/nodes/" + std::to_string(i));
    if (!index.emplace(label, nodes.size()).second) throw ParseError("duplicate node '" + label + "'");
    nodes.push_back(label);
  }
  if (nodes.empty()) throw ParseError("digraph fixture has no nodes");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
      const auto& e = j["edges"][i];
      const std::string where = "/edges/" + std::to_string(i);
      if (!e.is_array() || e.size() != 2) throw ParseError(where + ": an edge is a pair [from, to]");
      std::string from = label_of(e[0], where);
      std::string to = label_of(e[1], where);
      if (!index.count(from)) throw ParseError(where + ": unknown node '" + from + "'");
      if (!index.count(to)) throw ParseError(where + ": unknown node '" + to + "'");
      edges.emplace_back(index[from], index[to]);
    }
  }
  std::vector<std::uint64_t> start(nodes.size(), 1);
  if (j.contains("start_weights")) {
    if (!j["start_weights"].is_object()) throw ParseError("\"start_weights\" must be an object");
    std::fill(start.begin(), start.end(), 0);
    for (const auto& [node, weight] : j["start_weights"].items()) {
      if (!index.count(node)) throw ParseError("/start_weights: unknown node '" + node + "'");
      if (!weight.is_number_integer() || weight.get<long long>() < 0) {
        throw ParseError("/start_weights/" + node + ": weight must be a non-negative integer");
      }
      start[index[node]] = weight.get<std::uint64_t>();
    }
  }
  const std::size_t dimension = nodes.size();
  return TransferMatrix(dimension, edges, std::move(start), std::move(nodes));
}

}  // namespace racgrowth
