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

#ifndef TOPKAT_ENGINE_H_
#define TOPKAT_ENGINE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "topkat/alphabet.h"
#include "topkat/atoms.h"
#include "topkat/term.h"

namespace topkat {

struct ReducedTerm {
  Term term;
  bool original_had_top = false;
};

// Replaces every `top` with (p1 + ... + pk + top)*, where p1..pk are
// `joint_actions` and the trailing `top` is now an ordinary action (tau).
// Terms without `top` are returned unchanged. Throws on fail.
ReducedTerm ReduceTop(const Term& t, const std::set<std::string>& joint_actions);

// Whether the length-0 string `atom` is in the language of a reduced term.
bool Obs(const Term& t, Atom atom, const Alphabet& alphabet);

// Partial derivative of a reduced term by the letter (atom, action): terms
// d such that  atom action w  is in t iff w is in some d. Sequences are kept
// right-nested and 1 is dropped from them, so the result is canonical; it is
// sorted and duplicate-free.
std::vector<Term> Derive(const Term& t, Atom atom, std::string_view action,
                         const Alphabet& alphabet);

enum class Side { kLeft, kRight };

struct DecisionStats {
  std::size_t automaton_states = 0;
  // Pairs that were merged by the bisimulation. Each merge joins two
  // distinct classes, so this never exceeds automaton_states - 1.
  std::size_t merged_pairs = 0;
  std::size_t letters = 0;
};

struct Verdict {
  bool equal = true;
  // When not equal: a string in exactly one language, and which.
  std::optional<GuardedString> witness;
  Side accepted_by = Side::kLeft;
  DecisionStats stats;
};

// Decides t1 = t2 in the equational theory of TopKAT (equivalently, under
// the standard interpretation after reduction). Both terms are validated
// against `alphabet`; fail is rejected.
Verdict DecideEqual(const Term& t1, const Term& t2, const Alphabet& alphabet);

// t1 <= t2, i.e. t1 + t2 = t2. The witness lies in t1 but not in t2.
Verdict DecideLeq(const Term& t1, const Term& t2, const Alphabet& alphabet);

// "equal" or "not equal; witness <w> accepted by the left term".
std::string DescribeVerdict(const Verdict& v, const Alphabet& alphabet);

}  // namespace topkat

#endif  // TOPKAT_ENGINE_H_
