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

#ifndef TOPKAT_LOGIC_H_
#define TOPKAT_LOGIC_H_

#include <string>
#include <string_view>

#include "topkat/alphabet.h"
#include "topkat/claim.h"
#include "topkat/engine.h"
#include "topkat/failtopkat.h"
#include "topkat/parser.h"
#include "topkat/relational_model.h"
#include "topkat/term.h"

namespace topkat {

enum class TripleStyle { kHoare, kIncorrectness };

// {pre} prog {post}, or [pre] prog [code: post].
struct Triple {
  Term pre;
  Term prog;
  ErrorCode code = ErrorCode::kOk;
  Term post;
  TripleStyle style = TripleStyle::kIncorrectness;

  std::string ToString() const;
  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple HoareTriple(Term pre, Term prog, Term post);
Triple IncorrectnessTriple(Term pre, Term prog, Term post,
                           ErrorCode code = ErrorCode::kOk);

// Throws kInvalidArgument unless pre and post are test-only, and
// kUnsupported for Hoare triples over programs with fail.
void ValidateTriple(const Triple& t);

// Accepts `{pre} prog {post}`, `[pre] prog [post]`, `[pre] prog [ok: post]`
// and `[pre] prog [er: post]`. Terms are resolved against `alphabet`.
Triple ParseTriple(std::string_view text, const Alphabet& alphabet);

// Identifiers of a triple's text. Those occurring in the pre- or
// postcondition are reported as negated, since they must be tests.
IdentifierUse ScanTripleIdentifiers(std::string_view text);

// Equational encodings.
//   F1:     top;pre;prog >= top;post
//   F2:     top;pre;prog >= post
//   F3:     top;pre;prog;post = top;post
//   Kozen:  pre;prog;~post = 0
//   TopLeq: pre;prog <= top;post
//   TopTop: top;pre;prog <= top;post
// When prog contains fail, top;pre;prog is replaced by the component of its
// split selected by the triple's code, so the result is fail-free.
enum class Form { kF1, kF2, kF3, kKozen, kTopLeq, kTopTop };

std::string_view FormName(Form f);
// "F1", "f1", "kozen", "top-leq", ... Throws kInvalidArgument.
Form ParseForm(std::string_view text);
TripleStyle FormStyle(Form f);
Form DefaultForm(TripleStyle style);

Claim EncodeTriple(const Triple& t, Form form);

// Decides a fail-free claim with the engine.
Verdict DecideClaim(const Claim& c, const Alphabet& alphabet);

// Valid means the encoding holds in every relational TopKAT. Unproven is
// not a refutation: the witness only separates the two sides' languages,
// and the triple may still hold in a particular model.
struct TripleVerdict {
  bool valid = false;
  Claim encoding;
  Verdict verdict;
};

TripleVerdict CheckTripleEquational(const Triple& t, Form form,
                                    const Alphabet& alphabet);

// The triple's meaning in one model:
//   Hoare:         codomain(pre;prog) is contained in post
//   Incorrectness: codomain of the `code` outcome of pre;prog contains post
bool HoldsSemantically(const RelationalModel& m, const Triple& t);

// HoldsSemantically prepared for repeated evaluation over one alphabet.
class CompiledTriple {
 public:
  CompiledTriple(const Triple& t, const Alphabet& alphabet);
  bool Holds(const RelationalModel& m) const;
  // States reached from pre through prog with the triple's code.
  StateMask Reached(const RelationalModel& m) const;
  StateMask Post(const RelationalModel& m) const { return post_.EvalTestSet(m); }

 private:
  TripleStyle style_;
  ErrorCode code_;
  CompiledFailTerm run_;  // pre;prog
  CompiledTerm post_;
};

}  // namespace topkat

#endif  // TOPKAT_LOGIC_H_
