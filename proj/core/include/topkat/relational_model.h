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

#ifndef TOPKAT_RELATIONAL_MODEL_H_
#define TOPKAT_RELATIONAL_MODEL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "topkat/alphabet.h"
#include "topkat/relation.h"
#include "topkat/term.h"

namespace topkat {

// How a model interprets `top`.
struct TopSpec {
  enum class Kind { kFull, kExplicit };
  Kind kind = Kind::kFull;
  Rel relation;  // kExplicit only

  static TopSpec Full() { return {}; }
  static TopSpec Explicit(Rel r) { return {Kind::kExplicit, std::move(r)}; }
};

// A finite relational (Top)KAT: one relation per action, one set of states
// per test, and a top element. With an explicit top the model is a general
// relational TopKAT; the top relation must then be reflexive, transitive and
// contain every action.
class RelationalModel {
 public:
  RelationalModel() = default;

  // Missing actions are empty, missing tests hold nowhere.
  static RelationalModel Create(int n, const Alphabet& alphabet,
                                const std::map<std::string, Rel>& actions,
                                const std::map<std::string, StateMask>& tests,
                                TopSpec top = TopSpec::Full());

  int size() const { return n_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const TopSpec& top_spec() const { return top_spec_; }
  bool has_full_top() const { return top_spec_.kind == TopSpec::Kind::kFull; }
  const Rel& top() const { return top_; }

  // By alphabet position.
  const Rel& action(int i) const { return actions_[i]; }
  StateMask test(int i) const { return tests_[i]; }
  // By name; throws kUndeclaredSymbol.
  const Rel& action(std::string_view name) const;
  StateMask test(std::string_view name) const;

  // Copy with one action or test replaced (the top is re-validated).
  RelationalModel WithAction(std::string_view name, Rel r) const;
  RelationalModel WithTest(std::string_view name, StateMask s) const;

  std::string ToString() const;

  friend bool operator==(const RelationalModel& a, const RelationalModel& b) {
    return a.n_ == b.n_ && *a.alphabet_ == *b.alphabet_ &&
           a.actions_ == b.actions_ && a.tests_ == b.tests_ && a.top_ == b.top_ &&
           a.top_spec_.kind == b.top_spec_.kind;
  }

 private:
  friend class ModelEnumerator;
  friend RelationalModel RandomModel(int, const Alphabet&, TopSpec::Kind,
                                     double, std::uint64_t);

  RelationalModel(int n, std::shared_ptr<const Alphabet> alphabet,
                  std::vector<Rel> actions, std::vector<StateMask> tests,
                  TopSpec top);
  void Validate() const;

  int n_ = 0;
  std::shared_ptr<const Alphabet> alphabet_ = std::make_shared<Alphabet>();
  std::vector<Rel> actions_;
  std::vector<StateMask> tests_;
  TopSpec top_spec_;
  Rel top_;
};

// A term prepared for repeated evaluation in models over one alphabet.
class CompiledTerm {
 public:
  // Throws on fail or on symbols outside `alphabet`.
  CompiledTerm(const Term& t, const Alphabet& alphabet);

  // `m` must be over the same alphabet (same symbol positions).
  Rel Eval(const RelationalModel& m) const;
  // For test-only terms: the states where the test holds.
  StateMask EvalTestSet(const RelationalModel& m) const;

 private:
  struct Instr {
    Term::Op op;
    int index;  // action or test position
  };
  std::vector<Instr> code_;  // postfix
};

// + is union, ; composition, * reflexive-transitive closure, ~b the
// complement of b within the identity, top the model's top.
Rel EvalTerm(const RelationalModel& m, const Term& t);

StateMask Codomain(const Rel& r);

enum class TripleMode { kHoare, kIncorrectness };

// Hoare: codomain(pre;prog) is contained in post.
// Incorrectness: codomain(pre;prog) contains post.
bool CheckTripleSemantic(const RelationalModel& m, const Term& pre,
                         const Term& prog, const Term& post, TripleMode mode);

// Mixes a base seed with an index so that the i-th model of a sweep does not
// depend on how the sweep is split across workers.
std::uint64_t SeedFor(std::uint64_t seed, std::uint64_t index);

// Each action pair is present with probability `density`, each state is in
// each test with probability 1/2. An explicit top is the reflexive-transitive
// closure of the union of all actions. Deterministic in `seed`.
RelationalModel RandomModel(int n, const Alphabet& alphabet,
                            TopSpec::Kind top, double density,
                            std::uint64_t seed);

// Every Full-top model of a given size over an alphabet, addressable by
// index. Within each action, relations are ordered by size then by value, so
// small models come first.
class ModelEnumerator {
 public:
  // Accepts 1 <= n <= 4 and at most kMaxEnumeratedModels models in total.
  ModelEnumerator(int n, const Alphabet& alphabet);

  std::uint64_t count() const { return count_; }
  RelationalModel Get(std::uint64_t index) const;

 private:
  int n_;
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Rel> relations_;  // all relations on n states, in search order
  std::uint64_t count_;
};

inline constexpr std::uint64_t kMaxEnumeratedModels = std::uint64_t{1} << 26;

}  // namespace topkat

#endif  // TOPKAT_RELATIONAL_MODEL_H_
