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

#include "racgrowth/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "racgrowth/error.hpp"

namespace racgrowth {

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

DefiningGraph DefiningGraph::from_edges(std::vector<std::string> labels,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (labels.size() > kMaxVertices) {
    throw ParseError("graph has " + std::to_string(labels.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw ParseError("empty vertex label");
    if (!seen.insert(l).second) throw ParseError("duplicate vertex '" + l + "'");
  }
  DefiningGraph g;
  g.adjacency_.assign(labels.size(), VertexSet{});
  for (const auto& [u, v] : edges) {
    if (u >= labels.size() || v >= labels.size()) {
      throw ParseError("edge endpoint out of range");
    }
    if (u == v) throw ParseError("self-loop at vertex '" + labels[u] + "'");
    g.adjacency_[u] = g.adjacency_[u].with(v);
    g.adjacency_[v] = g.adjacency_[v].with(u);
  }
  g.labels_ = std::move(labels);
  return g;
}

std::optional<std::size_t> DefiningGraph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t DefiningGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto s : adjacency_) twice += s.size();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> DefiningGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : adjacency_[u].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool DefiningGraph::is_clique(VertexSet s) const {
  for (std::size_t v : s.members()) {
    if (!(s.without(v)).subset_of(adjacency_[v])) return false;
  }
  return true;
}

DefiningGraph DefiningGraph::complement() const {
  DefiningGraph g;
  g.labels_ = labels_;
  g.adjacency_.resize(size());
  for (std::size_t v = 0; v < size(); ++v) {
    g.adjacency_[v] = (all() - adjacency_[v]).without(v);
  }
  return g;
}

DefiningGraph DefiningGraph::induced(VertexSet keep) const {
  std::vector<std::size_t> kept = keep.members();
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (auto v : kept) labels.push_back(labels_[v]);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (adjacent(kept[i], kept[j])) edges.emplace_back(i, j);
    }
  }
  return from_edges(std::move(labels), edges);
}

const char* to_string(GroupKind kind) { return kind == GroupKind::kRacg ? "racg" : "raag"; }

VertexSet star(const DefiningGraph& g, std::string_view label) {
  auto v = g.index_of(label);
  if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + std::string(label) + "'");
  return g.star(*v);
}

std::vector<VertexSet> complement_components(const DefiningGraph& g) {
  std::vector<VertexSet> out;
  VertexSet unvisited = g.all();
  while (!unvisited.empty()) {
    VertexSet component = VertexSet::single(unvisited.min());
    VertexSet frontier = component;
    while (!frontier.empty()) {
      std::size_t v = frontier.min();
      frontier = frontier.without(v);
      VertexSet fresh = (g.all() - g.star(v)).without(v) - component;
      component = component | fresh;
      frontier = frontier | fresh;
    }
    out.push_back(component);
    unvisited = unvisited - component;
  }
  return out;
}

std::vector<VertexSet> enumerate_cliques(const DefiningGraph& g, std::uint64_t cap) {
  std::vector<VertexSet> out;
  // Explicit stack of (clique, candidates); candidates are common neighbours
  // larger than every member.
  struct Frame {
    VertexSet clique;
    VertexSet candidates;
  };
  std::vector<Frame> stack;
  auto emit = [&](VertexSet clique) {
    if (out.size() >= cap) throw CliqueExplosion(cap, cap + 1);
    out.push_back(clique);
  };
  for (std::size_t v = 0; v < g.size(); ++v) {
    VertexSet above = g.all() - VertexSet::first(v + 1);
    emit(VertexSet::single(v));
    stack.push_back({VertexSet::single(v), g.star(v) & above});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.candidates.empty()) {
        stack.pop_back();
        continue;
      }
      std::size_t w = top.candidates.min();
      top.candidates = top.candidates.without(w);
      VertexSet grown = top.clique.with(w);
      VertexSet next = top.candidates & g.star(w);
      emit(grown);
      stack.push_back({grown, next});
    }
  }
  return out;
}

std::vector<std::size_t> complement_tree_order(const DefiningGraph& g) {
  std::vector<std::size_t> order;
  order.reserve(g.size());
  VertexSet seen;
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (seen.contains(root)) continue;
    seen = seen.with(root);
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      const std::size_t x = order[head];
      const VertexSet fresh = g.all() - g.star(x) - seen;
      for (std::size_t y : fresh.members()) order.push_back(y);
      seen = seen | fresh;
    }
  }
  return order;
}

DefiningGraph reordered(const DefiningGraph& g, std::span<const std::size_t> order) {
  const std::size_t n = g.size();
  if (order.size() != n) throw Error(ErrorCode::kInvalidArgument, "vertex order is not a permutation");
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) {
      throw Error(ErrorCode::kInvalidArgument, "vertex order is not a permutation");
    }
    position[order[i]] = i;
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = g.label(order[i]);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return DefiningGraph::from_edges(std::move(labels), edges);
}

DefiningGraph double_graph(const DefiningGraph& g) {
  const std::size_t n = g.size();
  if (2 * n > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "doubled graph would have " + std::to_string(2 * n) + " vertices; at most " +
                    std::to_string(kMaxVertices) + " are supported");
  }
  std::vector<std::string> labels(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    labels[doubled_plus(n, v)] = g.label(v) + "+";
    labels[doubled_minus(n, v)] = g.label(v) + "-";
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(doubled_plus(n, u), doubled_plus(n, v));
    edges.emplace_back(doubled_minus(n, u), doubled_minus(n, v));
    edges.emplace_back(doubled_plus(n, u), doubled_minus(n, v));
    edges.emplace_back(doubled_minus(n, u), doubled_plus(n, v));
  }
  return DefiningGraph::from_edges(std::move(labels), edges);
}

}  // namespace racgrowth
