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

#ifndef RACGROWTH_GRAPH_HPP_
#define RACGROWTH_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racgrowth {

inline constexpr std::size_t kMaxVertices = 64;

// Subset of vertex indices of a graph with at most 64 vertices. Vertex
// indices are positions in the graph's total order, so "smaller index" and
// "smaller vertex" mean the same thing everywhere in the library.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1U; }
  // Least member; undefined on the empty set.
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet with(std::size_t v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(std::size_t v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) = default;

  std::vector<std::size_t> members() const;

 private:
  std::uint64_t bits_ = 0;
};

// Simple graph with a total order on its vertices. Immutable once built.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  // Validates labels (unique, non-empty), edges (in range, no self-loops).
  // Duplicate edges are merged. Throws ParseError with the offending item.
  static DefiningGraph from_edges(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].contains(v); }
  // Neighbours of v; v itself is never included.
  VertexSet star(std::size_t v) const { return adjacency_[v]; }
  VertexSet all() const { return VertexSet::first(size()); }

  std::size_t edge_count() const;
  // Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool is_clique(VertexSet s) const;
  bool is_complete() const { return is_clique(all()); }
  bool is_edgeless() const { return edge_count() == 0; }

  DefiningGraph complement() const;
  // Subgraph spanned by `keep`, relabelled 0..|keep|-1 in the inherited order.
  DefiningGraph induced(VertexSet keep) const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adjacency_;
};

enum class GroupKind { kRacg, kRaag };

const char* to_string(GroupKind kind);

struct GroupSpec {
  DefiningGraph graph;
  GroupKind kind = GroupKind::kRacg;
};

// Neighbours of the vertex named `label`. Throws Error(kUnknownVertex).
VertexSet star(const DefiningGraph& g, std::string_view label);

// Connected components of the complement graph, each as a vertex set,
// ordered by least vertex.
std::vector<VertexSet> complement_components(const DefiningGraph& g);

// Breadth-first order of a spanning forest of the complement: components in
// turn from their least vertex, neighbours taken in increasing order. Under
// this order the shortlex automaton of a connected complement is primitive.
std::vector<std::size_t> complement_tree_order(const DefiningGraph& g);

// The same graph with vertex order[i] moved to position i. `order` must be a
// permutation of the vertex indices.
DefiningGraph reordered(const DefiningGraph& g, std::span<const std::size_t> order);

inline constexpr std::uint64_t kDefaultCliqueCap = std::uint64_t{1} << 20;

// All non-empty cliques, each once, in ordered-DFS order: a clique is listed
// before its extensions by larger vertices. Throws CliqueExplosion when the
// count would pass `cap`.
std::vector<VertexSet> enumerate_cliques(const DefiningGraph& g, std::uint64_t cap = kDefaultCliqueCap);

// The doubled graph: vertices v+ and v- per vertex v, never adjacent to each
// other, and all four cross edges for each edge of g. Its order puts every
// minus vertex before every plus vertex, keeps g's order on plus vertices and
// reverses it on minus vertices.
DefiningGraph double_graph(const DefiningGraph& g);

// Positions of v+ and v- inside double_graph(g) for a graph with n vertices.
inline std::size_t doubled_plus(std::size_t n, std::size_t v) { return n + v; }
inline std::size_t doubled_minus(std::size_t n, std::size_t v) { return n - 1 - v; }

}  // namespace racgrowth

#endif  // RACGROWTH_GRAPH_HPP_
