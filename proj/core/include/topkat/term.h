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

#ifndef TOPKAT_TERM_H_
#define TOPKAT_TERM_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace topkat {

class Alphabet;

// The largest feature set a term uses: KAT < TopKAT < FailTopKAT.
enum class TermKind : std::uint8_t { kKat = 0, kTopKat = 1, kFailTopKat = 2 };

std::string_view TermKindName(TermKind kind);

// An immutable (Fail)(Top)KAT expression. Copies share structure; equality is
// structural. Terms carry no alphabet: see ValidateTerm.
class Term {
 public:
  enum class Op : std::uint8_t {
    kZero,
    kOne,
    kTop,
    kFail,
    kAction,
    kTest,
    kPlus,
    kSeq,
    kStar,
    kNot,
  };

  // Default-constructed terms are 0.
  Term();

  static Term Zero();
  static Term One();
  static Term Top();
  static Term Fail();
  static Term Action(std::string symbol);
  static Term Test(std::string symbol);
  static Term Plus(Term lhs, Term rhs);
  static Term Seq(Term lhs, Term rhs);
  static Term Star(Term operand);
  static Term Not(Term operand);

  Op op() const;
  // Only for kAction / kTest.
  const std::string& symbol() const;
  // lhs() is also the operand of kStar / kNot.
  const Term& lhs() const;
  const Term& rhs() const;
  const Term& operand() const { return lhs(); }

  bool is_binary() const { return op() == Op::kPlus || op() == Op::kSeq; }
  bool is_unary() const { return op() == Op::kStar || op() == Op::kNot; }

  // Number of AST nodes.
  std::size_t size() const;
  std::size_t hash() const;

  // Built from 0, 1, tests, +, ; and ~ only.
  bool IsTestOnly() const;
  bool ContainsTop() const;
  bool ContainsFail() const;
  TermKind kind() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  // Total order: by hash, then structure. Used to canonicalize term sets.
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Sum of the named actions; 0 when empty.
Term SumOf(const std::set<std::string>& actions);

// Canonical fully-parenthesized rendering; ParseTerm inverts it.
std::string PrintTerm(const Term& t);

// Checks symbols against `alphabet` and enforces the structural rules:
// negation only over test-only subterms, no star over a test that mentions a
// test symbol (b* = 1), and top/fail only when `max_kind` admits them.
void ValidateTerm(const Term& t, const Alphabet& alphabet,
                  TermKind max_kind = TermKind::kFailTopKat);

struct Primitives {
  std::set<std::string> actions;
  std::set<std::string> tests;
  friend bool operator==(const Primitives&, const Primitives&) = default;
};

Primitives OccurringPrimitives(const Term& t);

}  // namespace topkat

#endif  // TOPKAT_TERM_H_
