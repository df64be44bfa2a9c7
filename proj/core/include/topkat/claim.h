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

#ifndef TOPKAT_CLAIM_H_
#define TOPKAT_CLAIM_H_

#include <string>
#include <string_view>

#include "topkat/alphabet.h"
#include "topkat/term.h"

namespace topkat {

enum class Relation { kEq, kLeq, kGeq };

std::string_view RelationSymbol(Relation rel);

// An equation or inequality between two terms.
struct Claim {
  Term lhs;
  Relation rel = Relation::kEq;
  Term rhs;

  // The same claim phrased as `lhs' <= rhs'` or `lhs = rhs`.
  Claim Normalized() const;
  std::string ToString() const;

  friend bool operator==(const Claim&, const Claim&) = default;
};

// Parses "t1 = t2", "t1 <= t2" or "t1 >= t2".
Claim ParseClaim(std::string_view text, const Alphabet& alphabet,
                 TermKind max_kind = TermKind::kFailTopKat);

}  // namespace topkat

#endif  // TOPKAT_CLAIM_H_
