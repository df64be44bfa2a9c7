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

#ifndef TOPKAT_RULES_H_
#define TOPKAT_RULES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topkat/alphabet.h"
#include "topkat/logic.h"
#include "topkat/relational_model.h"
#include "topkat/term.h"

namespace topkat {

// lhs <= rhs between tests.
struct TestOrder {
  Term lhs;
  Term rhs;
};

// How random models are steered towards satisfying the premises.
enum class Sampling {
  // Premises and side conditions are visited in order; a postcondition or
  // side-condition operand that is a bare, not yet constrained test is
  // redrawn so that the premise holds.
  kDirected,
  // As kDirected, then the last test of the chain b0..bk is replaced by the
  // largest set X inside post(b_{k-1}) with X contained in post(X), so the
  // self-loop premise [bk] p [bk] holds.
  kChain,
};

// A proof rule. Schema variables are the symbols of `variables`; checking a
// rule quantifies over all their interpretations. In the rules with error
// outcomes every action variable p stands for the program p + pe;fail, so
// schema programs can fail.
struct Rule {
  std::string id;  // "fig3/composition", "fig5/choice-left[er]"
  int figure = 0;
  std::string name;  // "Choice-Left"
  std::vector<Triple> premises;
  std::vector<TestOrder> side_conditions;
  std::vector<Triple> conclusions;
  Alphabet variables;
  Sampling sampling = Sampling::kDirected;

  bool premise_free() const {
    return premises.empty() && side_conditions.empty();
  }
  std::string ToString() const;
};

// Every rule of the propositional Hoare logic (figure 1), incorrectness
// logic with normal termination (figure 3) and incorrectness logic with
// errors (figure 5). Rules stated for an arbitrary outcome appear once per
// outcome. The iteration-dependent rule uses the chain b0..b4 with b4
// repeating forever, so its supremum is b0 + ... + b4.
const std::vector<Rule>& RuleCatalog();

// Throws kInvalidArgument for figures other than 1, 3 and 5.
std::vector<const Rule*> RulesOfFigure(int figure);
// Throws kInvalidArgument for unknown ids.
const Rule& FindRule(std::string_view id);

struct RuleCheckConfig {
  // Every model of this size is visited; 0 skips the exhaustive phase.
  int exhaustive_states = 2;
  std::vector<int> random_states = {3, 4};
  std::uint64_t random_models = 1000;  // per size in random_states
  double density = 0.4;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct SweepStats {
  std::string phase;  // "exhaustive n=2", "random n=3"
  std::uint64_t instances = 0;
  std::uint64_t premise_hits = 0;
  std::uint64_t violations = 0;
};

struct Violation {
  std::string phase;
  std::uint64_t index = 0;
  RelationalModel model;  // interprets exactly the schema variables
  int conclusion = 0;     // the first conclusion that fails
};

struct RuleReport {
  std::string rule_id;
  // Premise-free rules only: each conclusion's default encoding.
  std::vector<TripleVerdict> equational;
  std::vector<SweepStats> sweeps;
  std::optional<Violation> first_violation;

  bool equational_valid() const;
  std::uint64_t violations() const;
  bool passed() const { return equational_valid() && violations() == 0; }
};

// Premise-free rules get both the equational check and the model sweep;
// premised rules get the sweep.
RuleReport CheckRule(const Rule& rule, const RuleCheckConfig& config);

// Equational check alone. Throws kInvalidArgument for premised rules.
std::vector<TripleVerdict> CheckRuleEquational(const Rule& rule);

}  // namespace topkat

#endif  // TOPKAT_RULES_H_
