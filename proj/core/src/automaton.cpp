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

#include "racgrowth/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "racgrowth/error.hpp"

namespace racgrowth {

namespace {

// δ for the geodesic automaton, with the shortlex restriction layered on top.
std::optional<VertexSet> step(const DefiningGraph& g, AutomatonKind kind, VertexSet s, std::size_t v) {
  if (s.contains(v)) return std::nullopt;
  VertexSet kept = g.star(v) & s;
  if (kind == AutomatonKind::kShortlex && !kept.empty() && v > kept.min()) return std::nullopt;
  return kept.with(v);
}

}  // namespace

const char* to_string(AutomatonKind kind) {
  return kind == AutomatonKind::kGeodesic ? "geodesic" : "shortlex";
}

AutomatonKind automaton_kind_from_string(std::string_view text) {
  if (text == "geodesic") return AutomatonKind::kGeodesic;
  if (text == "shortlex") return AutomatonKind::kShortlex;
  throw Error(ErrorCode::kInvalidArgument, "unknown automaton kind '" + std::string(text) + "'");
}

std::optional<std::size_t> Automaton::state_index(VertexSet s) const {
  auto it = std::find(states_.begin(), states_.end(), s);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> Automaton::transition(std::size_t state, std::size_t generator) const {
  std::int32_t t = table_[state * alphabet_size() + generator];
  if (t == kFail) return std::nullopt;
  return static_cast<std::size_t>(t);
}

std::size_t Automaton::transition_count() const {
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](std::int32_t t) { return t != kFail; }));
}

std::optional<std::size_t> Automaton::run(const std::vector<std::size_t>& word) const {
  std::size_t s = start();
  for (std::size_t v : word) {
    auto next = transition(s, v);
    if (!next) return std::nullopt;
    s = *next;
  }
  return s;
}

Automaton build_automaton(const DefiningGraph& g, AutomatonKind kind, std::uint64_t state_cap) {
  Automaton a;
  a.kind_ = kind;
  a.graph_ = g;
  const std::size_t n = g.size();
  std::unordered_map<std::uint64_t, std::int32_t> index;
  a.states_.push_back(VertexSet{});
  index.emplace(0, 0);
  // Breadth-first closure; states are numbered in discovery order.
  for (std::size_t cursor = 0; cursor < a.states_.size(); ++cursor) {
    VertexSet s = a.states_[cursor];
    for (std::size_t v = 0; v < n; ++v) {
      auto target = step(g, kind, s, v);
      std::int32_t t = Automaton::kFail;
      if (target) {
        auto [it, fresh] = index.emplace(target->bits(), static_cast<std::int32_t>(a.states_.size()));
        if (fresh) {
          // state_cap bounds non-start states, which are cliques.
          if (a.states_.size() > state_cap) throw CliqueExplosion(state_cap, state_cap + 1);
          a.states_.push_back(*target);
        }
        t = it->second;
      }
      a.table_.push_back(t);
    }
  }

  std::vector<VertexSet> reached(a.states_.begin() + 1, a.states_.end());
  std::vector<VertexSet> cliques = enumerate_cliques(g, state_cap);
  std::sort(reached.begin(), reached.end());
  std::sort(cliques.begin(), cliques.end());
  if (reached != cliques) {
    throw Error(ErrorCode::kInvariantViolation,
                "automaton states (" + std::to_string(reached.size()) + ") disagree with clique enumeration (" +
                    std::to_string(cliques.size()) + ")");
  }
  return a;
}

Automaton build_geodesic(const GroupSpec& spec, std::uint64_t state_cap) {
  if (spec.kind != GroupKind::kRacg) {
    throw Error(ErrorCode::kInvalidArgument, "word acceptors are built for RACGs; double a RAAG first");
  }
  return build_automaton(spec.graph, AutomatonKind::kGeodesic, state_cap);
}

Automaton build_shortlex(const GroupSpec& spec, std::uint64_t state_cap) {
  if (spec.kind != GroupKind::kRacg) {
    throw Error(ErrorCode::kInvalidArgument, "word acceptors are built for RACGs; double a RAAG first");
  }
  return build_automaton(spec.graph, AutomatonKind::kShortlex, state_cap);
}

TransferMatrix prune(const Automaton& a) {
  const std::size_t dim = a.state_count() - 1;
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "automaton over an empty alphabet has no pruned states");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::uint64_t> start(dim, 0);
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t s = 1; s < a.state_count(); ++s) names.push_back(state_label(a, s));
  for (std::size_t v = 0; v < a.alphabet_size(); ++v) {
    if (auto t = a.transition(a.start(), v)) ++start[*t - 1];
  }
  for (std::size_t s = 1; s < a.state_count(); ++s) {
    for (std::size_t v = 0; v < a.alphabet_size(); ++v) {
      if (auto t = a.transition(s, v)) {
        if (*t == a.start()) throw Error(ErrorCode::kInvariantViolation, "transition re-enters the start state");
        edges.emplace_back(s - 1, *t - 1);
      }
    }
  }
  return TransferMatrix(dim, edges, std::move(start), std::move(names));
}

std::vector<BigInt> count_words(const Automaton& a, std::size_t n_max) {
  if (a.state_count() == 1) {
    std::vector<BigInt> out(n_max + 1, BigInt(0));
    out[0] = 1;
    return out;
  }
  return count_words(prune(a), n_max);
}

std::string state_label(const Automaton& a, std::size_t state) {
  VertexSet s = a.state(state);
  if (s.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (std::size_t v : s.members()) {
    if (!first) out += ",";
    out += a.graph().label(v);
    first = false;
  }
  return out + "}";
}

std::string export_dot(const Automaton& a) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph " << to_string(a.kind()) << " {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t s = 0; s < a.state_count(); ++s) {
    out << "  s" << s << " [label=" << quote(state_label(a, s))
        << (s == a.start() ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  for (std::size_t s = 0; s < a.state_count(); ++s) {
    for (std::size_t v = 0; v < a.alphabet_size(); ++v) {
      if (auto t = a.transition(s, v)) {
        out << "  s" << s << " -> s" << *t << " [label=" << quote(a.graph().label(v)) << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json automaton_to_json(const Automaton& a) {
  nlohmann::json j;
  j["kind"] = to_string(a.kind());
  j["vertices"] = a.graph().labels();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : a.graph().edges()) edges.push_back({a.graph().label(u), a.graph().label(v)});
  j["edges"] = edges;
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t s = 0; s < a.state_count(); ++s) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t v : a.state(s).members()) members.push_back(a.graph().label(v));
    states.push_back(members);
  }
  j["states"] = states;
  nlohmann::json transitions = nlohmann::json::array();
  for (std::size_t s = 0; s < a.state_count(); ++s) {
    for (std::size_t v = 0; v < a.alphabet_size(); ++v) {
      if (auto t = a.transition(s, v)) transitions.push_back({s, a.graph().label(v), *t});
    }
  }
  j["transitions"] = transitions;
  j["start"] = a.start();
  return j;
}

Automaton automaton_from_json(const nlohmann::json& j) {
  try {
    Automaton a;
    a.kind_ = automaton_kind_from_string(j.at("kind").get<std::string>());
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::size_t, std::size_t>> edge_list;
    auto lookup = [&](const std::string& label) {
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) throw ParseError("unknown vertex '" + label + "' in automaton dump");
      return static_cast<std::size_t>(it - labels.begin());
    };
    for (const auto& e : j.at("edges")) edge_list.emplace_back(lookup(e.at(0)), lookup(e.at(1)));
    a.graph_ = DefiningGraph::from_edges(labels, edge_list);
    for (const auto& s : j.at("states")) {
      VertexSet set;
      for (const auto& label : s) set = set.with(lookup(label.get<std::string>()));
      if (!a.graph_.is_clique(set)) throw ParseError("automaton state is not a clique");
      a.states_.push_back(set);
    }
    if (a.states_.empty() || !a.states_.front().empty() || j.at("start").get<std::size_t>() != 0) {
      throw ParseError("automaton dump must list the empty start state first");
    }
    const std::size_t n = labels.size();
    a.table_.assign(a.states_.size() * n, Automaton::kFail);
    for (const auto& t : j.at("transitions")) {
      std::size_t from = t.at(0).get<std::size_t>();
      std::size_t gen = lookup(t.at(1).get<std::string>());
      std::size_t to = t.at(2).get<std::size_t>();
      if (from >= a.states_.size() || to >= a.states_.size()) throw ParseError("transition state out of range");
      auto& slot = a.table_[from * n + gen];
      if (slot != Automaton::kFail) throw ParseError("nondeterministic transition in automaton dump");
      if (a.states_[to] != (a.graph_.star(gen) & a.states_[from]).with(gen) || a.states_[from].contains(gen)) {
        throw ParseError("transition target violates {v} ∪ (st(v) ∩ s)");
      }
      slot = static_cast<std::int32_t>(to);
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("automaton dump: ") + e.what());
  }
}

}  // namespace racgrowth
