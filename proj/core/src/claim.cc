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

#include "topkat/claim.h"

#include <cstddef>

#include "topkat/error.h"
#include "topkat/parser.h"

namespace topkat {

std::string_view RelationSymbol(Relation rel) {
  switch (rel) {
    case Relation::kEq:
      return "=";
    case Relation::kLeq:
      return "<=";
    case Relation::kGeq:
      return ">=";
  }
  return "?";
}

Claim Claim::Normalized() const {
  if (rel == Relation::kGeq) return Claim{rhs, Relation::kLeq, lhs};
  return *this;
}

std::string Claim::ToString() const {
  return PrintTerm(lhs) + " " + std::string(RelationSymbol(rel)) + " " +
         PrintTerm(rhs);
}

Claim ParseClaim(std::string_view text, const Alphabet& alphabet,
                 TermKind max_kind) {
  SymbolResolver resolve = AlphabetResolver(alphabet);
  std::size_t pos = 0;
  Claim claim;
  claim.lhs = ParseTermAt(text, &pos, resolve, max_kind);
  if (text.substr(pos, 2) == "<=") {
    claim.rel = Relation::kLeq;
    pos += 2;
  } else if (text.substr(pos, 2) == ">=") {
    claim.rel = Relation::kGeq;
    pos += 2;
  } else if (text.substr(pos, 1) == "=") {
    pos += 1;
  } else {
    throw Error(ErrorKind::kSyntax, "expected '=', '<=' or '>='", pos);
  }
  claim.rhs = ParseTermAt(text, &pos, resolve, max_kind);
  if (pos != text.size()) {
    throw Error(ErrorKind::kSyntax, "trailing input after claim", pos);
  }
  return claim;
}

}  // namespace topkat
