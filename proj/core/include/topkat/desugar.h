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

#ifndef TOPKAT_DESUGAR_H_
#define TOPKAT_DESUGAR_H_

#include <memory>
#include <string>
#include <vector>

#include "topkat/term.h"

namespace topkat {

// While-program sugar. Assignments and other state changes are opaque
// primitive actions.
class Program {
 public:
  enum class Kind { kSkip, kAssume, kError, kAction, kSeq, kChoice, kIf, kWhile };

  static Program Skip();
  static Program Assume(Term test);
  static Program Error();
  static Program Action(std::string name);
  static Program Seq(std::vector<Program> parts);
  static Program Choice(Program lhs, Program rhs);
  static Program If(Term test, Program then_branch, Program else_branch);
  static Program While(Term test, Program body);

  Kind kind() const { return kind_; }
  const Term& test() const { return test_; }
  const std::string& name() const { return name_; }
  const std::vector<Program>& children() const { return *children_; }

 private:
  Program(Kind kind, Term test, std::string name, std::vector<Program> children);

  Kind kind_;
  Term test_;
  std::string name_;
  std::shared_ptr<const std::vector<Program>> children_;
};

// skip = 1, assume b = b, error = fail,
// if b then p else q = b;p + ~b;q, while b do p = (b;p)*;~b.
// Throws when `error` occurs and `mode` is not FailTopKAT, or when a guard is
// not a test.
Term Desugar(const Program& program, TermKind mode = TermKind::kFailTopKat);

}  // namespace topkat

#endif  // TOPKAT_DESUGAR_H_
