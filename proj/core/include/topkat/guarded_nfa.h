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

#ifndef TOPKAT_GUARDED_NFA_H_
#define TOPKAT_GUARDED_NFA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topkat/alphabet.h"
#include "topkat/atoms.h"
#include "topkat/term.h"

namespace topkat {

// Thompson-style automaton for the guarded-string language of a term. Silent
// edges carry the set of atoms under which they may be taken; action edges
// are labelled. A string a0 p1 a1 ... pn an is accepted when some run takes
// silent edges admitted by a0, then a p1 edge, then silent edges admitted by
// a1, and so on, ending in the final state.
//
// This is a second, independent reading of the standard interpretation: it
// shares no code with the derivative engine and, unlike LanguageUpTo, its
// cost does not grow with the number of strings.
class GuardedNfa {
 public:
  // Actions are `alphabet.actions()` plus tau. `top` is read with the full
  // semantics (every guarded string) when `top_is_full`, otherwise as tau.
  GuardedNfa(const Term& t, const Alphabet& alphabet, bool top_is_full = true);

  int num_states() const { return static_cast<int>(silent_.size()); }
  const std::vector<std::string>& actions() const { return actions_; }

  bool Accepts(const GuardedString& w) const;

  // A shortest string of at most `max_length` actions accepted by exactly
  // one automaton; nullopt when the
  // languages agree up to that length. Both automata must share alphabet and
  // action list.
  static std::optional<GuardedString> FirstDifference(const GuardedNfa& a,
                                                      const GuardedNfa& b,
                                                      int max_length);

 private:
  using Bits = std::vector<std::uint64_t>;

  struct SilentEdge {
    int to;
    std::vector<bool> atoms;  // admitted atoms
  };
  struct ActionEdge {
    int action;
    int to;
  };

  int NewState();
  void AddSilent(int from, int to, std::vector<bool> atoms);
  void AddSilentAll(int from, int to);
  // Builds a fragment for t between fresh entry/exit states.
  void Build(const Term& t, int entry, int exit);
  int ActionIndex(const std::string& name) const;
  void PrecomputeClosures();

  Bits Empty() const { return Bits(words_, 0); }
  Bits Closure(const Bits& states, Atom atom) const;
  Bits Step(const Bits& states, int action) const;
  bool HasFinal(const Bits& states) const {
    return (states[final_ / 64] >> (final_ % 64)) & 1;
  }

  Alphabet alphabet_;
  std::vector<std::string> actions_;
  bool top_is_full_;
  Atom num_atoms_;
  std::vector<std::vector<SilentEdge>> silent_;
  std::vector<std::vector<ActionEdge>> moves_;
  int start_ = 0;
  int final_ = 0;
  int words_ = 0;
  // closure_[atom][state]: states reachable by admitted silent edges.
  std::vector<std::vector<Bits>> closure_;
};

}  // namespace topkat

#endif  // TOPKAT_GUARDED_NFA_H_
