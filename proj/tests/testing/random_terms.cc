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

#include "testing/random_terms.h"

#include <map>
#include <tuple>
#include <utility>

namespace topkat::testing {
namespace {

// Uniform index below n from raw engine output.
std::size_t Below(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

bool MentionsTest(const Term& t) {
  switch (t.op()) {
    case Term::Op::kTest:
    case Term::Op::kNot:
      return true;
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      return MentionsTest(t.lhs()) || MentionsTest(t.rhs());
    default:
      return false;
  }
}

Term Leaf(std::mt19937_64& rng, const Alphabet& alphabet, bool tests_only,
          const TermShape& shape) {
  std::vector<Term> options = {Term::Zero(), Term::One()};
  for (const auto& b : alphabet.tests()) {
    options.push_back(Term::Test(b));
    options.push_back(Term::Test(b));
  }
  if (!tests_only) {
    for (const auto& a : alphabet.actions()) {
      options.push_back(Term::Action(a));
      options.push_back(Term::Action(a));
      options.push_back(Term::Action(a));
    }
    if (shape.allow_top) {
      options.push_back(Term::Top());
      options.push_back(Term::Top());
    }
    if (shape.allow_fail) {
      options.push_back(Term::Fail());
      options.push_back(Term::Fail());
    }
  }
  return options[Below(rng, options.size())];
}

Term Grow(std::mt19937_64& rng, const Alphabet& alphabet, int size,
          bool tests_only, const TermShape& shape) {
  if (size <= 1) return Leaf(rng, alphabet, tests_only, shape);
  int choice = static_cast<int>(Below(rng, 10));
  if (size == 2) choice = tests_only ? 0 : static_cast<int>(Below(rng, 3));
  if (choice < 2) {
    Term inner = Grow(rng, alphabet, size - 1, tests_only, shape);
    if (tests_only || inner.IsTestOnly()) {
      if (inner.IsTestOnly()) return Term::Not(inner);
      return inner;
    }
    return Term::Star(inner);
  }
  if (choice < 3 && !tests_only) {
    Term inner = Grow(rng, alphabet, size - 1, false, shape);
    if (inner.IsTestOnly() && MentionsTest(inner)) return Term::Not(inner);
    return Term::Star(inner);
  }
  int left = 1 + static_cast<int>(Below(rng, size - 2));
  int right = size - 1 - left;
  Term l = Grow(rng, alphabet, left, tests_only, shape);
  Term r = Grow(rng, alphabet, right, tests_only, shape);
  return (choice % 2 == 0) ? Term::Plus(l, r) : Term::Seq(l, r);
}

void Enumerate(const Alphabet& alphabet, int size, bool allow_top,
               bool allow_fail, std::map<int, std::vector<Term>>& memo) {
  if (memo.count(size)) return;
  std::vector<Term> out;
  if (size == 1) {
    out = {Term::Zero(), Term::One()};
    if (allow_top) out.push_back(Term::Top());
    if (allow_fail) out.push_back(Term::Fail());
    for (const auto& a : alphabet.actions()) out.push_back(Term::Action(a));
    for (const auto& b : alphabet.tests()) out.push_back(Term::Test(b));
  } else {
    Enumerate(alphabet, size - 1, allow_top, allow_fail, memo);
    for (const Term& t : memo[size - 1]) {
      if (t.IsTestOnly()) {
        out.push_back(Term::Not(t));
        if (!MentionsTest(t)) out.push_back(Term::Star(t));
      } else {
        out.push_back(Term::Star(t));
      }
    }
    for (int l = 1; l + 1 < size; ++l) {
      int r = size - 1 - l;
      Enumerate(alphabet, l, allow_top, allow_fail, memo);
      Enumerate(alphabet, r, allow_top, allow_fail, memo);
      for (const Term& a : memo[l]) {
        for (const Term& b : memo[r]) {
          out.push_back(Term::Plus(a, b));
          out.push_back(Term::Seq(a, b));
        }
      }
    }
  }
  memo[size] = std::move(out);
}

}  // namespace

Term RandomTerm(std::mt19937_64& rng, const Alphabet& alphabet,
                const TermShape& shape) {
  int size = 1 + static_cast<int>(Below(rng, shape.max_size));
  return Grow(rng, alphabet, size, false, shape);
}

Term RandomTest(std::mt19937_64& rng, const Alphabet& alphabet, int max_size) {
  int size = 1 + static_cast<int>(Below(rng, max_size));
  return Grow(rng, alphabet, size, true, TermShape{});
}

std::vector<Term> EnumerateTerms(const Alphabet& alphabet, int size,
                                 bool allow_top, bool allow_fail) {
  std::map<int, std::vector<Term>> memo;
  Enumerate(alphabet, size, allow_top, allow_fail, memo);
  return memo[size];
}

}  // namespace topkat::testing
