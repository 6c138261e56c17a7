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

#ifndef RACGROWTH_CLI_HPP_
#define RACGROWTH_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "racgrowth/automaton.hpp"
#include "racgrowth/graph.hpp"
#include "racgrowth/numeric.hpp"
#include "racgrowth/oracles.hpp"
#include "racgrowth/spectral.hpp"

namespace racgrowth::cli {

enum class Command { kAnalyze, kCount, kAutomaton, kOracle, kCompare, kCertify };
enum class OutputFormat { kText, kJson, kDot };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitCap = 3,
  kExitCompareFail = 4,
  kExitInternal = 5,
};

struct CommandConfig {
  Command command = Command::kAnalyze;
  std::string input_path;  // "-" reads standard input
  std::optional<GroupKind> kind_override;
  std::size_t terms = 10;
  Rational tolerance = default_tolerance();
  OutputFormat format = OutputFormat::kText;
  AutomatonKind automaton_kind = AutomatonKind::kShortlex;
  std::uint64_t state_cap = kDefaultCliqueCap;
  std::uint64_t frontier_cap = oracle::kDefaultFrontierCap;
};

// Executes one command. Errors are reported on `err` and mapped to an exit
// code.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line (and GROWTH_STATE_CAP / GROWTH_FRONTIER_CAP from
// the environment), then runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace racgrowth::cli

#endif  // RACGROWTH_CLI_HPP_
