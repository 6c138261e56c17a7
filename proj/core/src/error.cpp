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

#include "racgrowth/error.hpp"

namespace racgrowth {

namespace {

std::string located(const std::string& message, std::size_t line,
                    std::size_t column) {
  if (line == 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kCliqueExplosion: return "CliqueExplosion";
    case ErrorCode::kFrontierCap: return "FrontierCap";
    case ErrorCode::kNoCycle: return "NoCycle";
    case ErrorCode::kDimensionCap: return "DimensionCap";
    case ErrorCode::kNotPrimitive: return "NotPrimitive";
    case ErrorCode::kHypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(ErrorCode::kParse, located(message, line, column)),
      line_(line),
      column_(column) {}

CliqueExplosion::CliqueExplosion(std::uint64_t cap, std::uint64_t lower_bound)
    : Error(ErrorCode::kCliqueExplosion,
            "clique/state count exceeds cap " + std::to_string(cap) +
                " (at least " + std::to_string(lower_bound) + ")"),
      cap_(cap),
      lower_bound_(lower_bound) {}

FrontierCap::FrontierCap(std::uint64_t cap, std::size_t length)
    : Error(ErrorCode::kFrontierCap,
            "oracle frontier exceeds cap " + std::to_string(cap) +
                " at word length " + std::to_string(length)),
      cap_(cap) {}

}  // namespace racgrowth
