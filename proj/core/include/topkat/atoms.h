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

#ifndef TOPKAT_ATOMS_H_
#define TOPKAT_ATOMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topkat/alphabet.h"
#include "topkat/term.h"

namespace topkat {

// A complete truth assignment to the tests of an alphabet: bit i is the
// polarity of tests()[i]. With no tests the only atom is 0, the empty
// product, which prints as "1".
using Atom = std::uint32_t;

// All 2^|tests| atoms in increasing bit order.
std::vector<Atom> EnumerateAtoms(const Alphabet& alphabet);

// Boolean evaluation of a test-only term. Throws on anything else.
bool EvalTest(const Term& t, Atom atom, const Alphabet& alphabet);

// "b,~c" style; "1" when there are no tests.
std::string FormatAtom(Atom atom, const Alphabet& alphabet);

// a0 p1 a1 ... pn an. Actions are symbols of the alphabet or `top` for the
// reduction's extra primitive.
struct GuardedString {
  struct Step {
    std::string action;
    Atom atom = 0;
    friend bool operator==(const Step&, const Step&) = default;
    friend auto operator<=>(const Step&, const Step&) = default;
  };

  Atom head = 0;
  std::vector<Step> tail;

  std::size_t length() const { return tail.size(); }
  Atom last() const { return tail.empty() ? head : tail.back().atom; }

  friend bool operator==(const GuardedString&, const GuardedString&) = default;
  friend auto operator<=>(const GuardedString&, const GuardedString&) = default;
};

// Fuses x and y on their shared boundary atom; nullopt when they differ.
std::optional<GuardedString> Coalesce(const GuardedString& x,
                                      const GuardedString& y);

// `<atom> [act <atom>]*`, e.g. "b,~c p b,c".
std::string FormatGuardedString(const GuardedString& w,
                                 const Alphabet& alphabet);

// Inverse of FormatGuardedString. Atoms must list every test exactly once
// (any order); "1" denotes the empty atom.
GuardedString ParseGuardedString(std::string_view text,
                                 const Alphabet& alphabet);

}  // namespace topkat

#endif  // TOPKAT_ATOMS_H_
