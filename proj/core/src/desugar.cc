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

#include "topkat/desugar.h"

#include <utility>

#include "topkat/error.h"

namespace topkat {

Program::Program(Kind kind, Term test, std::string name,
                 std::vector<Program> children)
    : kind_(kind),
      test_(std::move(test)),
      name_(std::move(name)),
      children_(std::make_shared<const std::vector<Program>>(
          std::move(children))) {}

Program Program::Skip() { return Program(Kind::kSkip, Term::One(), "", {}); }

Program Program::Assume(Term test) {
  return Program(Kind::kAssume, std::move(test), "", {});
}

Program Program::Error() { return Program(Kind::kError, Term::One(), "", {}); }

Program Program::Action(std::string name) {
  return Program(Kind::kAction, Term::One(), std::move(name), {});
}

Program Program::Seq(std::vector<Program> parts) {
  return Program(Kind::kSeq, Term::One(), "", std::move(parts));
}

Program Program::Choice(Program lhs, Program rhs) {
  return Program(Kind::kChoice, Term::One(), "",
                 {std::move(lhs), std::move(rhs)});
}

Program Program::If(Term test, Program then_branch, Program else_branch) {
  return Program(Kind::kIf, std::move(test), "",
                 {std::move(then_branch), std::move(else_branch)});
}

Program Program::While(Term test, Program body) {
  return Program(Kind::kWhile, std::move(test), "", {std::move(body)});
}

namespace {

const Term& Guard(const Program& p) {
  if (!p.test().IsTestOnly()) {
    throw topkat::Error(ErrorKind::kNegationOverAction,
                        "guard " + PrintTerm(p.test()) + " is not a test");
  }
  return p.test();
}

}  // namespace

Term Desugar(const Program& program, TermKind mode) {
  switch (program.kind()) {
    case Program::Kind::kSkip:
      return Term::One();
    case Program::Kind::kAssume:
      return Guard(program);
    case Program::Kind::kError:
      if (mode < TermKind::kFailTopKat) {
        throw topkat::Error(ErrorKind::kDisallowedConstant,
                            "error statement outside FailTopKAT mode");
      }
      return Term::Fail();
    case Program::Kind::kAction:
      return Term::Action(program.name());
    case Program::Kind::kSeq: {
      const auto& parts = program.children();
      if (parts.empty()) return Term::One();
      Term t = Desugar(parts[0], mode);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        t = Term::Seq(std::move(t), Desugar(parts[i], mode));
      }
      return t;
    }
    case Program::Kind::kChoice:
      return Term::Plus(Desugar(program.children()[0], mode),
                        Desugar(program.children()[1], mode));
    case Program::Kind::kIf: {
      const Term& b = Guard(program);
      return Term::Plus(Term::Seq(b, Desugar(program.children()[0], mode)),
                        Term::Seq(Term::Not(b),
                                  Desugar(program.children()[1], mode)));
    }
    case Program::Kind::kWhile: {
      const Term& b = Guard(program);
      return Term::Seq(
          Term::Star(Term::Seq(b, Desugar(program.children()[0], mode))),
          Term::Not(b));
    }
  }
  return Term::Zero();
}

}  // namespace topkat
