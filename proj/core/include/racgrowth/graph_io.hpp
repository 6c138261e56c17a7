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

#ifndef RACGROWTH_GRAPH_IO_HPP_
#define RACGROWTH_GRAPH_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "racgrowth/graph.hpp"
#include "racgrowth/transfer_matrix.hpp"

namespace racgrowth {

// Two accepted formats:
//
//   JSON:  {"vertices": [...], "edges": [[u, v], ...], "kind": "racg"|"raag",
//           "order": [...]}
//          "order" (optional) fixes the vertex order; otherwise the order of
//          "vertices" is used. Without "vertices", the vertex set is read off
//          the edges and ordered label-lexicographically.
//
//   Edge list:  first line "kind n"; every following line "u v" with
//               u, v in 1..n. Blank lines and '#' comments are ignored.
//
// `kind_override` replaces the kind written in the input (and makes it
// optional). Errors carry the offending line or JSON path.
GroupSpec parse_graph(std::string_view text, std::optional<GroupKind> kind_override = std::nullopt);
GroupSpec parse_graph_json(const nlohmann::json& j, std::optional<GroupKind> kind_override = std::nullopt);

GroupKind group_kind_from_string(std::string_view text);

nlohmann::json graph_to_json(const GroupSpec& spec);

// Raw digraph fixture {"nodes": [...], "edges": [[from, to], ...],
// "start_weights": {node: int}}. Missing start weights default to 1 on
// every node.
TransferMatrix parse_digraph_json(const nlohmann::json& j);

// Parses JSON and rethrows syntax errors as ParseError with a line/column.
nlohmann::json parse_json_text(std::string_view text);

}  // namespace racgrowth

#endif  // RACGROWTH_GRAPH_IO_HPP_
