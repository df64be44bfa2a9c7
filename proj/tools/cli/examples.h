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

#ifndef TOPKAT_TOOLS_CLI_EXAMPLES_H_
#define TOPKAT_TOOLS_CLI_EXAMPLES_H_

#include <string>
#include <vector>

namespace topkat::cli {

struct ExampleOutcome {
  std::string name;
  bool reproduced = false;
  std::string detail;
};

// The pinned regression set: the incompleteness pair, the general-top
// codomain counterexample, the KAT separation pair, the worked triple
// examples (absolute value, strongest postcondition, the generalized loop,
// error in a loop, assignment) and the fail annihilation asymmetry.
std::vector<ExampleOutcome> RunPinnedExamples();

}  // namespace topkat::cli

#endif  // TOPKAT_TOOLS_CLI_EXAMPLES_H_
