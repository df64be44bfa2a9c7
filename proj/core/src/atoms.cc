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

#include "topkat/atoms.h"

#include <sstream>
#include <utility>

#include "topkat/error.h"

namespace topkat {

std::vector<Atom> EnumerateAtoms(const Alphabet& alphabet) {
  if (static_cast<int>(alphabet.tests().size()) > alphabet.atom_cap()) {
    throw Error(ErrorKind::kCapExceeded,
                "too many tests to enumerate atoms: " +
                    std::to_string(alphabet.tests().size()));
  }
  std::vector<Atom> atoms(alphabet.num_atoms());
  for (Atom a = 0; a < atoms.size(); ++a) atoms[a] = a;
  return atoms;
}

bool EvalTest(const Term& t, Atom atom, const Alphabet& alphabet) {
  switch (t.op()) {
    case Term::Op::kZero:
      return false;
    case Term::Op::kOne:
      return true;
    case Term::Op::kTest: {
      std::optional<int> i = alphabet.TestIndex(t.symbol());
      if (!i) {
        throw Error(ErrorKind::kUndeclaredSymbol,
                    "'" + t.symbol() + "' is not a declared test");
      }
      return (atom >> *i) & 1;
    }
    case Term::Op::kPlus:
      return EvalTest(t.lhs(), atom, alphabet) ||
             EvalTest(t.rhs(), atom, alphabet);
    case Term::Op::kSeq:
      return EvalTest(t.lhs(), atom, alphabet) &&
             EvalTest(t.rhs(), atom, alphabet);
    case Term::Op::kNot:
      return !EvalTest(t.operand(), atom, alphabet);
    default:
      throw Error(ErrorKind::kInvalidArgument,
                  PrintTerm(t) + " is not a test");
  }
}

std::string FormatAtom(Atom atom, const Alphabet& alphabet) {
  const auto& tests = alphabet.tests();
  if (tests.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    if (i > 0) out += ',';
    if (!((atom >> i) & 1)) out += '~';
    out += tests[i];
  }
  return out;
}

std::optional<GuardedString> Coalesce(const GuardedString& x,
                                      const GuardedString& y) {
  if (x.last() != y.head) return std::nullopt;
  GuardedString out = x;
  out.tail.insert(out.tail.end(), y.tail.begin(), y.tail.end());
  return out;
}

std::string FormatGuardedString(const GuardedString& w,
                                 const Alphabet& alphabet) {
  std::string out = FormatAtom(w.head, alphabet);
  for (const auto& step : w.tail) {
    out += ' ';
    out += step.action;
    out += ' ';
    out += FormatAtom(step.atom, alphabet);
  }
  return out;
}

namespace {

Atom ParseAtom(const std::string& word, const Alphabet& alphabet) {
  if (word == "1" && alphabet.tests().empty()) return 0;
  Atom atom = 0;
  Atom seen = 0;
  std::stringstream in(word);
  std::string literal;
  while (std::getline(in, literal, ',')) {
    bool positive = true;
    if (!literal.empty() && literal[0] == '~') {
      positive = false;
      literal.erase(0, 1);
    }
    std::optional<int> i = alphabet.TestIndex(literal);
    if (!i) {
      throw Error(ErrorKind::kSyntax, "bad atom literal '" + literal + "'");
    }
    if ((seen >> *i) & 1) {
      throw Error(ErrorKind::kSyntax, "test repeated in atom '" + word + "'");
    }
    seen |= Atom{1} << *i;
    if (positive) atom |= Atom{1} << *i;
  }
  if (seen != static_cast<Atom>(alphabet.num_atoms() - 1)) {
    throw Error(ErrorKind::kSyntax, "atom '" + word + "' is incomplete");
  }
  return atom;
}

}  // namespace

GuardedString ParseGuardedString(std::string_view text,
                                 const Alphabet& alphabet) {
  std::stringstream in{std::string(text)};
  std::vector<std::string> words;
  std::string word;
  while (in >> word) words.push_back(word);
  if (words.size() % 2 == 0) {
    throw Error(ErrorKind::kSyntax,
                "guarded string must alternate atoms and actions");
  }
  GuardedString w;
  w.head = ParseAtom(words[0], alphabet);
  for (std::size_t i = 1; i < words.size(); i += 2) {
    if (words[i] != kTauAction && !alphabet.HasAction(words[i])) {
      throw Error(ErrorKind::kUndeclaredSymbol,
                  "'" + words[i] + "' is not a declared action");
    }
    w.tail.push_back({words[i], ParseAtom(words[i + 1], alphabet)});
  }
  return w;
}

}  // namespace topkat
