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

#ifndef TOPKAT_PARSER_H_
#define TOPKAT_PARSER_H_

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>

#include "topkat/alphabet.h"
#include "topkat/term.h"

namespace topkat {

// Parses the term grammar
//
//   term     := sum
//   sum      := seq ('+' seq)*
//   seq      := unary (';' unary)*
//   unary    := '~' unary | atomexpr '*'*
//   atomexpr := '0' | '1' | 'top' | 'fail' | ident | '(' term ')'
//
// and validates the result against `alphabet` (see ValidateTerm). Errors
// carry the byte offset of the offending token.
Term ParseTerm(std::string_view text, const Alphabet& alphabet,
               TermKind max_kind = TermKind::kFailTopKat);

// Decides whether an identifier is an action or a test. Returns kAction or
// kTest, or throws.
using SymbolResolver =
    std::function<Term::Op(std::string_view name, std::size_t position)>;

SymbolResolver AlphabetResolver(const Alphabet& alphabet);

// Parses one term starting at `*pos` and stops before the first token that
// cannot extend it, which lets callers embed terms in larger syntax. `*pos`
// is left at that token (after skipping whitespace).
Term ParseTermAt(std::string_view text, std::size_t* pos,
                 const SymbolResolver& resolve,
                 TermKind max_kind = TermKind::kFailTopKat);

// Skips whitespace at `*pos`.
void SkipSpace(std::string_view text, std::size_t* pos);

// Identifiers of `text`, and the subset that occurs under `~`. Used to guess
// an alphabet when none is declared.
struct IdentifierUse {
  std::set<std::string> all;
  std::set<std::string> negated;
};

IdentifierUse ScanIdentifiers(std::string_view text);

}  // namespace topkat

#endif  // TOPKAT_PARSER_H_
