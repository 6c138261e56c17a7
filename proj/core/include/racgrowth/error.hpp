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

#ifndef RACGROWTH_ERROR_HPP_
#define RACGROWTH_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace racgrowth {

// Every failure raised by the library carries one of these codes. The CLI
// maps them onto process exit statuses.
enum class ErrorCode {
  kParse,
  kUnknownVertex,
  kCliqueExplosion,
  kFrontierCap,
  kNoCycle,
  kDimensionCap,
  kNotPrimitive,
  kHypothesisNotMet,
  kInvalidArgument,
  kInvariantViolation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed textual input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised when a state or clique count would pass its cap. `lower_bound` is a
// certified lower bound on the true count (always > cap).
class CliqueExplosion : public Error {
 public:
  CliqueExplosion(std::uint64_t cap, std::uint64_t lower_bound);

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t cap_;
  std::uint64_t lower_bound_;
};

class FrontierCap : public Error {
 public:
  FrontierCap(std::uint64_t cap, std::size_t length);

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace racgrowth

#endif  // RACGROWTH_ERROR_HPP_
