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

#include "topkat/parser.h"

#include <cctype>
#include <string>
#include <utility>

#include "topkat/error.h"

namespace topkat {
namespace {

// Bounds recursion on adversarial input such as long runs of '(' or '~'.
constexpr int kMaxNesting = 2000;

bool IsIdentStart(char c) { return c >= 'a' && c <= 'z'; }
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t pos, const SymbolResolver& resolve,
         TermKind max_kind, IdentifierUse* use)
      : text_(text), pos_(pos), resolve_(resolve), max_kind_(max_kind),
        use_(use) {}

  Term Sum() {
    Term t = Seq();
    while (Peek() == '+') {
      ++pos_;
      t = Term::Plus(std::move(t), Seq());
    }
    return t;
  }

  std::size_t pos() {
    SkipSpace(text_, &pos_);
    return pos_;
  }

 private:
  char Peek() {
    SkipSpace(text_, &pos_);
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void Fail(const std::string& message, std::size_t at) {
    throw Error(ErrorKind::kSyntax, message, at);
  }

  std::string Describe() {
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  Term Seq() {
    Term t = Unary();
    while (Peek() == ';') {
      ++pos_;
      t = Term::Seq(std::move(t), Unary());
    }
    return t;
  }

  Term Unary() {
    if (++depth_ > kMaxNesting) Fail("nesting too deep", pos_);
    Term t;
    if (Peek() == '~') {
      std::size_t at = pos_++;
      ++negation_;
      Term operand = Unary();
      --negation_;
      if (use_ == nullptr && !operand.IsTestOnly()) {
        throw Error(ErrorKind::kNegationOverAction,
                    "~ applied to " + PrintTerm(operand) +
                        ", which is not a test",
                    at);
      }
      t = Term::Not(std::move(operand));
    } else {
      std::size_t at = pos_;
      t = AtomExpr();
      while (Peek() == '*') {
        if (use_ == nullptr && t.IsTestOnly() && MentionsTest(t)) {
          throw Error(ErrorKind::kStarOverTest,
                      "star over test " + PrintTerm(t) +
                          " is rejected; it always equals 1, write 1 instead",
                      at);
        }
        ++pos_;
        t = Term::Star(std::move(t));
      }
    }
    --depth_;
    return t;
  }

  static bool MentionsTest(const Term& t) {
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

  Term AtomExpr() {
    char c = Peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Term t = Sum();
      if (Peek() != ')') Fail("expected ')' but found " + Describe(), pos_);
      ++pos_;
      return t;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
        Fail("malformed constant", at);
      }
      return c == '0' ? Term::Zero() : Term::One();
    }
    if (IsIdentStart(c)) {
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
      std::string name(text_.substr(at, pos_ - at));
      if (name == "top") {
        if (max_kind_ < TermKind::kTopKat) {
          throw Error(ErrorKind::kDisallowedConstant,
                      "'top' is not allowed in a " +
                          std::string(TermKindName(max_kind_)) + " term",
                      at);
        }
        return Term::Top();
      }
      if (name == "fail") {
        if (max_kind_ < TermKind::kFailTopKat) {
          throw Error(ErrorKind::kDisallowedConstant,
                      "'fail' is not allowed in a " +
                          std::string(TermKindName(max_kind_)) + " term",
                      at);
        }
        return Term::Fail();
      }
      if (IsReservedWord(name)) {
        Fail("reserved word '" + name + "' cannot be used in a term", at);
      }
      if (use_ != nullptr) {
        use_->all.insert(name);
        if (negation_ > 0) use_->negated.insert(name);
        return Term::Action(std::move(name));
      }
      Term::Op op = resolve_(name, at);
      return op == Term::Op::kTest ? Term::Test(std::move(name))
                                   : Term::Action(std::move(name));
    }
    if (c == '\0') Fail("unexpected end of input", at);
    Fail("unexpected " + Describe(), at);
  }

  std::string_view text_;
  std::size_t pos_;
  const SymbolResolver& resolve_;
  TermKind max_kind_;
  IdentifierUse* use_;
  int depth_ = 0;
  int negation_ = 0;
};

const SymbolResolver& NullResolver() {
  static const SymbolResolver* r = new SymbolResolver(
      [](std::string_view, std::size_t) { return Term::Op::kAction; });
  return *r;
}

}  // namespace

void SkipSpace(std::string_view text, std::size_t* pos) {
  while (*pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[*pos]))) {
    ++*pos;
  }
}

SymbolResolver AlphabetResolver(const Alphabet& alphabet) {
  return [&alphabet](std::string_view name, std::size_t at) {
    if (alphabet.HasAction(name)) return Term::Op::kAction;
    if (alphabet.HasTest(name)) return Term::Op::kTest;
    throw Error(ErrorKind::kUndeclaredSymbol,
                "'" + std::string(name) + "' is not declared", at);
  };
}

Term ParseTermAt(std::string_view text, std::size_t* pos,
                 const SymbolResolver& resolve, TermKind max_kind) {
  Parser parser(text, *pos, resolve, max_kind, nullptr);
  Term t = parser.Sum();
  *pos = parser.pos();
  return t;
}

Term ParseTerm(std::string_view text, const Alphabet& alphabet,
               TermKind max_kind) {
  std::size_t pos = 0;
  Term t = ParseTermAt(text, &pos, AlphabetResolver(alphabet), max_kind);
  if (pos != text.size()) {
    throw Error(ErrorKind::kSyntax,
                "unexpected '" + std::string(1, text[pos]) + "'", pos);
  }
  return t;
}

IdentifierUse ScanIdentifiers(std::string_view text) {
  IdentifierUse use;
  std::size_t pos = 0;
  // Keep scanning past embedded terms (triples put several in one string).
  while (pos < text.size()) {
    SkipSpace(text, &pos);
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c == '~' || c == '(' || c == '0' || c == '1' || IsIdentStart(c)) {
      std::size_t before = pos;
      try {
        Parser parser(text, pos, NullResolver(), TermKind::kFailTopKat, &use);
        parser.Sum();
        pos = parser.pos();
      } catch (const Error&) {
        pos = before + 1;
        while (pos < text.size() && IsIdentChar(text[pos])) ++pos;
      }
      if (pos == before) ++pos;
    } else {
      ++pos;
    }
  }
  return use;
}

}  // namespace topkat
