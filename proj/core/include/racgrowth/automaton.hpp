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

#ifndef RACGROWTH_AUTOMATON_HPP_
#define RACGROWTH_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "racgrowth/graph.hpp"
#include "racgrowth/transfer_matrix.hpp"

namespace racgrowth {

enum class AutomatonKind { kGeodesic, kShortlex };

const char* to_string(AutomatonKind kind);
AutomatonKind automaton_kind_from_string(std::string_view text);

// Word acceptor for a right-angled Coxeter group. States are cliques of the
// defining graph plus the start state (the empty set, always index 0).
// Reading v from state s leads to {v} ∪ (st(v) ∩ s); a missing transition is
// the fail state. Every other state accepts.
class Automaton {
 public:
  static constexpr std::int32_t kFail = -1;

  AutomatonKind kind() const { return kind_; }
  const DefiningGraph& graph() const { return graph_; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t alphabet_size() const { return graph_.size(); }
  std::size_t start() const { return 0; }
  VertexSet state(std::size_t i) const { return states_[i]; }
  std::optional<std::size_t> state_index(VertexSet s) const;
  std::optional<std::size_t> transition(std::size_t state, std::size_t generator) const;
  std::size_t transition_count() const;

  // Runs the automaton over `word` (generator indices). nullopt on fail.
  std::optional<std::size_t> run(const std::vector<std::size_t>& word) const;

 private:
  friend Automaton build_automaton(const DefiningGraph&, AutomatonKind, std::uint64_t);
  friend Automaton automaton_from_json(const nlohmann::json&);

  AutomatonKind kind_ = AutomatonKind::kGeodesic;
  DefiningGraph graph_;
  std::vector<VertexSet> states_;
  // Row-major [state][generator]; kFail when absent.
  std::vector<std::int32_t> table_;
};

// Forward closure from the start state. The resulting state set is checked
// against enumerate_cliques; a mismatch raises kInvariantViolation.
Automaton build_automaton(const DefiningGraph& g, AutomatonKind kind,
                          std::uint64_t state_cap = kDefaultCliqueCap);
Automaton build_geodesic(const GroupSpec& spec, std::uint64_t state_cap = kDefaultCliqueCap);
Automaton build_shortlex(const GroupSpec& spec, std::uint64_t state_cap = kDefaultCliqueCap);

// Transfer matrix of the automaton with its start state removed. Index i of
// the matrix is automaton state i + 1; u[s] counts generators v with
// δ(start, v) = s.
TransferMatrix prune(const Automaton& a);

std::vector<BigInt> count_words(const Automaton& a, std::size_t n_max);

// Graphviz rendering; the fail state and its arrows are omitted.
std::string export_dot(const Automaton& a);

std::string state_label(const Automaton& a, std::size_t state);

// {"kind", "vertices", "states":[[labels...]], "transitions":[[from, gen, to]], "start"}
nlohmann::json automaton_to_json(const Automaton& a);
// Inverse of automaton_to_json. Rejects dumps whose transitions break the
// determinism or target rule. Throws ParseError.
Automaton automaton_from_json(const nlohmann::json& j);

}  // namespace racgrowth

#endif  // RACGROWTH_AUTOMATON_HPP_
