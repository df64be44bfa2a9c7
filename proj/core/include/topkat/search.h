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

#ifndef TOPKAT_SEARCH_H_
#define TOPKAT_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>

#include "topkat/alphabet.h"
#include "topkat/claim.h"
#include "topkat/failtopkat.h"
#include "topkat/relational_model.h"

namespace topkat {

// Both sides of a claim evaluated in one model. Fail-free sides have an
// empty error component.
struct ClaimValues {
  RelPair lhs;
  RelPair rhs;
};

ClaimValues EvaluateClaim(const RelationalModel& m, const Claim& claim);

// Equality or inclusion, componentwise on (normal, error) pairs.
bool HoldsIn(const RelationalModel& m, const Claim& claim);

struct SearchConfig {
  enum class Mode { kExhaustive, kRandom };
  Mode mode = Mode::kExhaustive;
  int min_states = 1;
  int max_states = 2;
  // Random mode: models tried per carrier size.
  std::uint64_t models = 1000;
  double density = 0.4;
  std::uint64_t seed = 0;
  // Exhaustive mode only enumerates Full-top models.
  TopSpec::Kind top = TopSpec::Kind::kFull;
  int jobs = 1;
};

struct Countermodel {
  RelationalModel model;
  ClaimValues values;
  int states = 0;
  std::uint64_t index = 0;  // position within its carrier size
};

struct SearchResult {
  std::optional<Countermodel> countermodel;
  std::uint64_t models_checked = 0;
};

// Looks for a model refuting the claim. Models are over the primitives that
// occur in the claim. The reported countermodel is the first in search order
// (by carrier size, then index) regardless of `jobs`.
SearchResult FindCountermodel(const Claim& claim, const SearchConfig& config);

}  // namespace topkat

#endif  // TOPKAT_SEARCH_H_
