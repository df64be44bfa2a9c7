// Copyright 2026 The TopKAT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPKAT_TOOLS_CLI_COMMANDS_H_
#define TOPKAT_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topkat/alphabet.h"

namespace topkat::cli {

// Exit codes shared by every command.
inline constexpr int kExitHolds = 0;     // equal, valid, no countermodel
inline constexpr int kExitRefuted = 1;   // not equal, unproven, countermodel
inline constexpr int kExitError = 2;     // usage, parse or configuration error

inline constexpr char kJsonSchema[] = "topkat-cli/1";

enum class OutputFormat { kText, kJson };

struct RunConfig {
  // Declared alphabet. Unset lists are inferred from the command's terms:
  // identifiers under ~ or in a pre/postcondition are tests, the rest are
  // actions.
  std::optional<std::vector<std::string>> actions;
  std::optional<std::vector<std::string>> tests;
  std::uint64_t seed = 0;
  std::uint64_t models = 1000;
  double density = 0.4;
  int min_states = 1;
  int max_states = 2;
  int jobs = 1;
  OutputFormat format = OutputFormat::kText;
};

struct CommandResult {
  int exit_code = kExitHolds;
  std::string out;  // stdout
  std::string err;  // stderr
};

// Reads "actions: p q" and "tests: a b" lines (commas or spaces separate
// names; '#' starts a comment) into `config`.
void LoadAlphabetFile(const std::string& path, RunConfig* config);

// Splits "p,q" or "p q" into names; the empty string gives no names.
std::vector<std::string> SplitNames(const std::string& text);

// The alphabet for a command over the given texts (terms, claims or
// triples).
Alphabet ResolveAlphabet(const RunConfig& config,
                         const std::vector<std::string>& texts);

CommandResult CmdEquiv(const std::string& lhs, const std::string& rhs,
                       const RunConfig& config);
CommandResult CmdLeq(const std::string& lhs, const std::string& rhs,
                     const RunConfig& config);

enum class Strategy { kEquational, kModel };

struct TripleOptions {
  std::optional<std::string> form;  // default per triple style
  Strategy strategy = Strategy::kEquational;
  std::string model_file;  // kModel only
};

CommandResult CmdTriple(const std::string& triple, const TripleOptions& options,
                        const RunConfig& config);

// Checks every rule of the figure (all figures when unset).
CommandResult CmdRules(std::optional<int> figure, const RunConfig& config);

CommandResult CmdExamples(const RunConfig& config);

inline constexpr int kMaxOracleBound = 10;

CommandResult CmdOracle(const std::string& lhs, const std::string& rhs,
                        int bound, const RunConfig& config);

struct SearchOptions {
  bool random = false;
  bool explicit_top = false;  // random mode only
};

// The claim is "t1 = t2", "t1 <= t2" or "t1 >= t2".
CommandResult CmdModelSearch(const std::string& claim,
                             const SearchOptions& options,
                             const RunConfig& config);

}  // namespace topkat::cli

#endif  // TOPKAT_TOOLS_CLI_COMMANDS_H_
