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

#ifndef TOPKAT_FAILTOPKAT_H_
#define TOPKAT_FAILTOPKAT_H_

#include <optional>
#include <string>
#include <vector>

#include "topkat/alphabet.h"
#include "topkat/engine.h"
#include "topkat/relation.h"
#include "topkat/relational_model.h"
#include "topkat/term.h"

namespace topkat {

enum class ErrorCode { kOk, kEr };

std::string_view ErrorCodeName(ErrorCode code);

// A FailTopKAT element as a pair of TopKAT terms: the normal outcome and the
// error outcome.
struct SplitPair {
  Term ok;
  Term er;
  const Term& component(ErrorCode c) const {
    return c == ErrorCode::kOk ? ok : er;
  }
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

// The normal/error pair construction, symbolically:
//   prim, 0, 1, top -> (t, 0)       fail -> (0, 1)
//   (p,p') + (q,q') = (p+q, p'+q')  (p,p');(q,q') = (p;q, p' + p;q')
//   (p,p')* = (p*, p*;p')           ~(b,0) = (~b, 0)
// Components are simplified only by unit and annihilator laws, and b* = 1
// for tests b.
SplitPair Split(const Term& t);

struct RelPair {
  Rel ok;
  Rel er;
  const Rel& component(ErrorCode c) const {
    return c == ErrorCode::kOk ? ok : er;
  }
  friend bool operator==(const RelPair&, const RelPair&) = default;
};

// Evaluates t directly in the pair algebra built over m.
RelPair EvalFail(const RelationalModel& m, const Term& t);

// EvalFail prepared for repeated evaluation over one alphabet.
class CompiledFailTerm {
 public:
  CompiledFailTerm(const Term& t, const Alphabet& alphabet);
  RelPair Eval(const RelationalModel& m) const;

 private:
  struct Instr {
    Term::Op op;
    int index;
  };
  std::vector<Instr> code_;
};

// Equality (or order) in every FailTopKAT built as normal/error pairs over a
// TopKAT: both components must agree in TopKAT. The first failing component
// is reported.
struct FailVerdict {
  bool holds = true;
  Verdict ok;
  Verdict er;
  std::optional<ErrorCode> failing;
};

FailVerdict DecideFailEqual(const Term& t1, const Term& t2,
                            const Alphabet& alphabet);
FailVerdict DecideFailLeq(const Term& t1, const Term& t2,
                          const Alphabet& alphabet);

// "ok: <w>" or "er: <w>"; empty when the verdict holds.
std::string FormatFailWitness(const FailVerdict& v, const Alphabet& alphabet);

}  // namespace topkat

#endif  // TOPKAT_FAILTOPKAT_H_
