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

#include "topkat/relational_model.h"

#include <algorithm>
#include <bit>
#include <random>
#include <utility>

#include "topkat/error.h"

namespace topkat {

RelationalModel::RelationalModel(int n, std::shared_ptr<const Alphabet> alphabet,
                                 std::vector<Rel> actions,
                                 std::vector<StateMask> tests, TopSpec top)
    : n_(n),
      alphabet_(std::move(alphabet)),
      actions_(std::move(actions)),
      tests_(std::move(tests)),
      top_spec_(std::move(top)) {
  top_ = top_spec_.kind == TopSpec::Kind::kFull ? Rel::Full(n_)
                                                 : top_spec_.relation;
}

RelationalModel RelationalModel::Create(
    int n, const Alphabet& alphabet, const std::map<std::string, Rel>& actions,
    const std::map<std::string, StateMask>& tests, TopSpec top) {
  if (n < 1 || n > kMaxStates) {
    throw Error(ErrorKind::kInvalidArgument,
                "model size must be in 1.." + std::to_string(kMaxStates));
  }
  std::vector<Rel> acts(alphabet.actions().size(), Rel::Empty(n));
  std::vector<StateMask> ts(alphabet.tests().size(), 0);
  for (const auto& [name, rel] : actions) {
    std::optional<int> i = alphabet.ActionIndex(name);
    if (!i) {
      throw Error(ErrorKind::kUndeclaredSymbol,
                  "model interprets undeclared action '" + name + "'");
    }
    if (rel.size() != n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "relation for '" + name + "' has the wrong size");
    }
    acts[*i] = rel;
  }
  for (const auto& [name, mask] : tests) {
    std::optional<int> i = alphabet.TestIndex(name);
    if (!i) {
      throw Error(ErrorKind::kUndeclaredSymbol,
                  "model interprets undeclared test '" + name + "'");
    }
    if (mask & ~AllStates(n)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "test '" + name + "' mentions states outside the carrier");
    }
    ts[*i] = mask;
  }
  RelationalModel m(n, std::make_shared<const Alphabet>(alphabet),
                    std::move(acts), std::move(ts), std::move(top));
  m.Validate();
  return m;
}

void RelationalModel::Validate() const {
  if (top_spec_.kind == TopSpec::Kind::kFull) return;
  const Rel& t = top_spec_.relation;
  if (t.size() != n_) {
    throw Error(ErrorKind::kInvalidArgument, "top relation has the wrong size");
  }
  if (!t.IsReflexive()) {
    throw Error(ErrorKind::kInvalidArgument, "top relation is not reflexive");
  }
  if (!t.IsTransitive()) {
    throw Error(ErrorKind::kInvalidArgument, "top relation is not transitive");
  }
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (!actions_[i].SubsetOf(t)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "top relation does not contain action '" +
                      alphabet_->actions()[i] + "'");
    }
  }
}

const Rel& RelationalModel::action(std::string_view name) const {
  std::optional<int> i = alphabet_->ActionIndex(name);
  if (!i) {
    throw Error(ErrorKind::kUndeclaredSymbol,
                "'" + std::string(name) + "' is not an action of the model");
  }
  return actions_[*i];
}

StateMask RelationalModel::test(std::string_view name) const {
  std::optional<int> i = alphabet_->TestIndex(name);
  if (!i) {
    throw Error(ErrorKind::kUndeclaredSymbol,
                "'" + std::string(name) + "' is not a test of the model");
  }
  return tests_[*i];
}

RelationalModel RelationalModel::WithAction(std::string_view name,
                                            Rel r) const {
  RelationalModel m = *this;
  std::optional<int> i = alphabet_->ActionIndex(name);
  if (!i) {
    throw Error(ErrorKind::kUndeclaredSymbol,
                "'" + std::string(name) + "' is not an action of the model");
  }
  if (r.size() != n_) {
    throw Error(ErrorKind::kInvalidArgument, "relation has the wrong size");
  }
  m.actions_[*i] = std::move(r);
  m.Validate();
  return m;
}

RelationalModel RelationalModel::WithTest(std::string_view name,
                                          StateMask s) const {
  RelationalModel m = *this;
  std::optional<int> i = alphabet_->TestIndex(name);
  if (!i) {
    throw Error(ErrorKind::kUndeclaredSymbol,
                "'" + std::string(name) + "' is not a test of the model");
  }
  m.tests_[*i] = s & AllStates(n_);
  return m;
}

std::string RelationalModel::ToString() const {
  std::string out = "states: " + std::to_string(n_) + "\n";
  out += "top: " + (has_full_top() ? std::string("full") : top_.ToString()) +
         "\n";
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    out += alphabet_->actions()[i] + " = " + actions_[i].ToString() + "\n";
  }
  for (std::size_t i = 0; i < tests_.size(); ++i) {
    out += alphabet_->tests()[i] + " = " + FormatStates(tests_[i]) + "\n";
  }
  return out;
}

namespace {

void CompileInto(const Term& t, const Alphabet& alphabet,
                 std::vector<std::pair<Term::Op, int>>& code) {
  switch (t.op()) {
    case Term::Op::kAction: {
      std::optional<int> i = alphabet.ActionIndex(t.symbol());
      if (!i) {
        throw Error(ErrorKind::kUndeclaredSymbol,
                    "'" + t.symbol() + "' is not an action of the model");
      }
      code.emplace_back(t.op(), *i);
      return;
    }
    case Term::Op::kTest: {
      std::optional<int> i = alphabet.TestIndex(t.symbol());
      if (!i) {
        throw Error(ErrorKind::kUndeclaredSymbol,
                    "'" + t.symbol() + "' is not a test of the model");
      }
      code.emplace_back(t.op(), *i);
      return;
    }
    case Term::Op::kFail:
      throw Error(ErrorKind::kUnsupported,
                  "fail has no relational value; use EvalFail");
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      CompileInto(t.lhs(), alphabet, code);
      CompileInto(t.rhs(), alphabet, code);
      code.emplace_back(t.op(), -1);
      return;
    case Term::Op::kStar:
    case Term::Op::kNot:
      CompileInto(t.operand(), alphabet, code);
      code.emplace_back(t.op(), -1);
      return;
    default:
      code.emplace_back(t.op(), -1);
      return;
  }
}

}  // namespace

CompiledTerm::CompiledTerm(const Term& t, const Alphabet& alphabet) {
  std::vector<std::pair<Term::Op, int>> code;
  CompileInto(t, alphabet, code);
  code_.reserve(code.size());
  for (auto [op, i] : code) code_.push_back({op, i});
}

Rel CompiledTerm::Eval(const RelationalModel& m) const {
  int n = m.size();
  absl::InlinedVector<Rel, 8> stack;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Term::Op::kZero:
        stack.push_back(Rel::Empty(n));
        break;
      case Term::Op::kOne:
        stack.push_back(Rel::Identity(n));
        break;
      case Term::Op::kTop:
        stack.push_back(m.top());
        break;
      case Term::Op::kAction:
        stack.push_back(m.action(in.index));
        break;
      case Term::Op::kTest:
        stack.push_back(Rel::Diagonal(n, m.test(in.index)));
        break;
      case Term::Op::kPlus: {
        Rel r = std::move(stack.back());
        stack.pop_back();
        stack.back() = stack.back().Union(r);
        break;
      }
      case Term::Op::kSeq: {
        Rel r = std::move(stack.back());
        stack.pop_back();
        stack.back() = stack.back().Compose(r);
        break;
      }
      case Term::Op::kStar:
        stack.back() = stack.back().Star();
        break;
      case Term::Op::kNot:
        stack.back() = Rel::Diagonal(n, ~stack.back().Codomain() & AllStates(n));
        break;
      case Term::Op::kFail:
        break;
    }
  }
  return std::move(stack.back());
}

StateMask CompiledTerm::EvalTestSet(const RelationalModel& m) const {
  return Eval(m).Codomain();
}

Rel EvalTerm(const RelationalModel& m, const Term& t) {
  return CompiledTerm(t, m.alphabet()).Eval(m);
}

StateMask Codomain(const Rel& r) { return r.Codomain(); }

bool CheckTripleSemantic(const RelationalModel& m, const Term& pre,
                         const Term& prog, const Term& post, TripleMode mode) {
  if (!pre.IsTestOnly() || !post.IsTestOnly()) {
    throw Error(ErrorKind::kInvalidArgument,
                "triple pre- and postconditions must be tests");
  }
  StateMask reached = EvalTerm(m, Term::Seq(pre, prog)).Codomain();
  StateMask target = EvalTerm(m, post).Codomain();
  if (mode == TripleMode::kHoare) return (reached & ~target) == 0;
  return (target & ~reached) == 0;
}

std::uint64_t SeedFor(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RelationalModel RandomModel(int n, const Alphabet& alphabet,
                            TopSpec::Kind top, double density,
                            std::uint64_t seed) {
  if (n < 1 || n > kMaxStates) {
    throw Error(ErrorKind::kInvalidArgument,
                "model size must be in 1.." + std::to_string(kMaxStates));
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "density must be in [0, 1]");
  }
  // Raw engine output only: std distributions are not portable across
  // standard libraries, and models must be reproducible from the seed.
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
  };
  std::vector<Rel> actions;
  Rel all_actions = Rel::Identity(n);
  for (std::size_t a = 0; a < alphabet.actions().size(); ++a) {
    Rel r(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (coin(density)) r.Set(i, j);
      }
    }
    all_actions = all_actions.Union(r);
    actions.push_back(std::move(r));
  }
  std::vector<StateMask> tests;
  for (std::size_t b = 0; b < alphabet.tests().size(); ++b) {
    StateMask s = 0;
    for (int i = 0; i < n; ++i) {
      if (rng() >> 63) s |= StateMask{1} << i;
    }
    tests.push_back(s);
  }
  TopSpec spec = top == TopSpec::Kind::kFull
                     ? TopSpec::Full()
                     : TopSpec::Explicit(all_actions.Star());
  return RelationalModel(n, std::make_shared<const Alphabet>(alphabet),
                         std::move(actions), std::move(tests),
                         std::move(spec));
}

ModelEnumerator::ModelEnumerator(int n, const Alphabet& alphabet)
    : n_(n), alphabet_(std::make_shared<const Alphabet>(alphabet)) {
  if (n < 1 || n > 4) {
    throw Error(ErrorKind::kCapExceeded,
                "exhaustive enumeration needs 1 <= n <= 4");
  }
  std::uint64_t num_rel = std::uint64_t{1} << (n * n);
  for (std::uint64_t v = 0; v < num_rel; ++v) {
    Rel r(n);
    for (int i = 0; i < n; ++i) {
      r.SetRow(i, (v >> (i * n)) & AllStates(n));
    }
    relations_.push_back(std::move(r));
  }
  std::stable_sort(relations_.begin(), relations_.end(),
                   [](const Rel& a, const Rel& b) {
                     return a.Count() < b.Count();
                   });
  // Checked per factor so the product cannot overflow.
  count_ = 1;
  bool too_many = false;
  auto scale = [&](std::uint64_t f) {
    if (count_ > kMaxEnumeratedModels / f) too_many = true;
    count_ *= too_many ? 1 : f;
  };
  for (std::size_t a = 0; a < alphabet.actions().size(); ++a) scale(num_rel);
  for (std::size_t b = 0; b < alphabet.tests().size(); ++b) {
    scale(std::uint64_t{1} << n);
  }
  if (too_many) {
    throw Error(ErrorKind::kCapExceeded,
                "exhaustive enumeration would visit more than " +
                    std::to_string(kMaxEnumeratedModels) + " models");
  }
}

RelationalModel ModelEnumerator::Get(std::uint64_t index) const {
  if (index >= count_) {
    throw Error(ErrorKind::kInvalidArgument, "model index out of range");
  }
  std::vector<Rel> actions;
  for (std::size_t a = 0; a < alphabet_->actions().size(); ++a) {
    actions.push_back(relations_[index % relations_.size()]);
    index /= relations_.size();
  }
  std::vector<StateMask> tests;
  std::uint64_t subsets = std::uint64_t{1} << n_;
  for (std::size_t b = 0; b < alphabet_->tests().size(); ++b) {
    tests.push_back(index % subsets);
    index /= subsets;
  }
  return RelationalModel(n_, alphabet_, std::move(actions), std::move(tests),
                         TopSpec::Full());
}

}  // namespace topkat
