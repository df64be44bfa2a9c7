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

#include "topkat/failtopkat.h"

#include <utility>

#include "absl/container/inlined_vector.h"
#include "topkat/error.h"

namespace topkat {

std::string_view ErrorCodeName(ErrorCode code) {
  return code == ErrorCode::kOk ? "ok" : "er";
}

namespace {

bool IsZero(const Term& t) { return t.op() == Term::Op::kZero; }
bool IsOne(const Term& t) { return t.op() == Term::Op::kOne; }

Term Add(Term a, Term b) {
  if (IsZero(a)) return b;
  if (IsZero(b)) return a;
  return Term::Plus(std::move(a), std::move(b));
}

Term Mul(Term a, Term b) {
  if (IsZero(a) || IsZero(b)) return Term::Zero();
  if (IsOne(a)) return b;
  if (IsOne(b)) return a;
  return Term::Seq(std::move(a), std::move(b));
}

// b* = 1 for every test b, and the star of a test is not a valid term.
Term Kleene(Term a) {
  if (a.IsTestOnly()) return Term::One();
  return Term::Star(std::move(a));
}

}  // namespace

SplitPair Split(const Term& t) {
  if (!t.ContainsFail()) return {t, Term::Zero()};
  switch (t.op()) {
    case Term::Op::kFail:
      return {Term::Zero(), Term::One()};
    case Term::Op::kPlus: {
      SplitPair l = Split(t.lhs());
      SplitPair r = Split(t.rhs());
      return {Add(l.ok, r.ok), Add(l.er, r.er)};
    }
    case Term::Op::kSeq: {
      SplitPair l = Split(t.lhs());
      SplitPair r = Split(t.rhs());
      return {Mul(l.ok, r.ok), Add(l.er, Mul(l.ok, r.er))};
    }
    case Term::Op::kStar: {
      SplitPair s = Split(t.operand());
      Term star = Kleene(s.ok);
      return {star, Mul(star, s.er)};
    }
    default:
      // Negation is only applied to tests, which are fail-free.
      throw Error(ErrorKind::kInvalidArgument,
                  "cannot split " + PrintTerm(t));
  }
}

namespace {

void CompileFail(const Term& t, const Alphabet& alphabet,
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
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      CompileFail(t.lhs(), alphabet, code);
      CompileFail(t.rhs(), alphabet, code);
      code.emplace_back(t.op(), -1);
      return;
    case Term::Op::kStar:
    case Term::Op::kNot:
      CompileFail(t.operand(), alphabet, code);
      code.emplace_back(t.op(), -1);
      return;
    default:
      code.emplace_back(t.op(), -1);
      return;
  }
}

}  // namespace

CompiledFailTerm::CompiledFailTerm(const Term& t, const Alphabet& alphabet) {
  std::vector<std::pair<Term::Op, int>> code;
  CompileFail(t, alphabet, code);
  for (auto [op, i] : code) code_.push_back({op, i});
}

RelPair CompiledFailTerm::Eval(const RelationalModel& m) const {
  int n = m.size();
  absl::InlinedVector<RelPair, 8> stack;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Term::Op::kZero:
        stack.push_back({Rel::Empty(n), Rel::Empty(n)});
        break;
      case Term::Op::kOne:
        stack.push_back({Rel::Identity(n), Rel::Empty(n)});
        break;
      case Term::Op::kTop:
        stack.push_back({m.top(), Rel::Empty(n)});
        break;
      case Term::Op::kFail:
        stack.push_back({Rel::Empty(n), Rel::Identity(n)});
        break;
      case Term::Op::kAction:
        stack.push_back({m.action(in.index), Rel::Empty(n)});
        break;
      case Term::Op::kTest:
        stack.push_back({Rel::Diagonal(n, m.test(in.index)), Rel::Empty(n)});
        break;
      case Term::Op::kPlus: {
        RelPair r = std::move(stack.back());
        stack.pop_back();
        RelPair& l = stack.back();
        l.ok = l.ok.Union(r.ok);
        l.er = l.er.Union(r.er);
        break;
      }
      case Term::Op::kSeq: {
        RelPair r = std::move(stack.back());
        stack.pop_back();
        RelPair& l = stack.back();
        l.er = l.er.Union(l.ok.Compose(r.er));
        l.ok = l.ok.Compose(r.ok);
        break;
      }
      case Term::Op::kStar: {
        RelPair& s = stack.back();
        s.ok = s.ok.Star();
        s.er = s.ok.Compose(s.er);
        break;
      }
      case Term::Op::kNot: {
        RelPair& s = stack.back();
        s.ok = Rel::Diagonal(n, ~s.ok.Codomain() & AllStates(n));
        s.er = Rel::Empty(n);
        break;
      }
    }
  }
  return std::move(stack.back());
}

RelPair EvalFail(const RelationalModel& m, const Term& t) {
  return CompiledFailTerm(t, m.alphabet()).Eval(m);
}

namespace {

FailVerdict Combine(Verdict ok, Verdict er) {
  FailVerdict v;
  v.ok = std::move(ok);
  v.er = std::move(er);
  if (!v.ok.equal) {
    v.holds = false;
    v.failing = ErrorCode::kOk;
  } else if (!v.er.equal) {
    v.holds = false;
    v.failing = ErrorCode::kEr;
  }
  return v;
}

}  // namespace

FailVerdict DecideFailEqual(const Term& t1, const Term& t2,
                            const Alphabet& alphabet) {
  ValidateTerm(t1, alphabet);
  ValidateTerm(t2, alphabet);
  SplitPair a = Split(t1);
  SplitPair b = Split(t2);
  return Combine(DecideEqual(a.ok, b.ok, alphabet),
                 DecideEqual(a.er, b.er, alphabet));
}

FailVerdict DecideFailLeq(const Term& t1, const Term& t2,
                          const Alphabet& alphabet) {
  ValidateTerm(t1, alphabet);
  ValidateTerm(t2, alphabet);
  SplitPair a = Split(t1);
  SplitPair b = Split(t2);
  return Combine(DecideLeq(a.ok, b.ok, alphabet),
                 DecideLeq(a.er, b.er, alphabet));
}

std::string FormatFailWitness(const FailVerdict& v, const Alphabet& alphabet) {
  if (v.holds) return "";
  const Verdict& side = *v.failing == ErrorCode::kOk ? v.ok : v.er;
  return std::string(ErrorCodeName(*v.failing)) + ": " +
         FormatGuardedString(*side.witness, alphabet);
}

}  // namespace topkat
