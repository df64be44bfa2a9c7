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

#include "topkat/term.h"

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "topkat/alphabet.h"
#include "topkat/error.h"

namespace topkat {

struct Term::Node {
  Op op;
  std::string symbol;
  Term lhs;
  Term rhs;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool test_only = false;
  bool has_top = false;
  bool has_fail = false;

  // Leaves only; children default to a shared 0 node after construction.
  Node(Op o, std::string s) : op(o), symbol(std::move(s)), lhs(NoInit()), rhs(NoInit()) {}
  Node(Op o, Term l, Term r) : op(o), lhs(std::move(l)), rhs(std::move(r)) {}

 private:
  static Term NoInit() { return Term(std::shared_ptr<const Node>()); }
};

namespace {

std::size_t Mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string_view TermKindName(TermKind kind) {
  switch (kind) {
    case TermKind::kKat:
      return "KAT";
    case TermKind::kTopKat:
      return "TopKAT";
    case TermKind::kFailTopKat:
      return "FailTopKAT";
  }
  return "?";
}

namespace {


}  // namespace

Term::Term() : Term(Zero()) {}

Term Term::Zero() {
  static const Term* zero = new Term([] {
    auto n = std::make_shared<Node>(Op::kZero, "");
    n->hash = Mix(0, static_cast<std::size_t>(Op::kZero));
    n->test_only = true;
    return Term(std::shared_ptr<const Node>(std::move(n)));
  }());
  return *zero;
}

Term Term::One() {
  static const Term* one = new Term([] {
    auto n = std::make_shared<Node>(Op::kOne, "");
    n->hash = Mix(0, static_cast<std::size_t>(Op::kOne));
    n->test_only = true;
    return Term(std::shared_ptr<const Node>(std::move(n)));
  }());
  return *one;
}

Term Term::Top() {
  static const Term* top = new Term([] {
    auto n = std::make_shared<Node>(Op::kTop, "");
    n->hash = Mix(0, static_cast<std::size_t>(Op::kTop));
    n->has_top = true;
    return Term(std::shared_ptr<const Node>(std::move(n)));
  }());
  return *top;
}

Term Term::Fail() {
  static const Term* fail = new Term([] {
    auto n = std::make_shared<Node>(Op::kFail, "");
    n->hash = Mix(0, static_cast<std::size_t>(Op::kFail));
    n->has_fail = true;
    return Term(std::shared_ptr<const Node>(std::move(n)));
  }());
  return *fail;
}

Term Term::Action(std::string symbol) {
  auto n = std::make_shared<Node>(Op::kAction, std::move(symbol));
  n->hash = Mix(static_cast<std::size_t>(Op::kAction),
                std::hash<std::string>{}(n->symbol));
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::Test(std::string symbol) {
  auto n = std::make_shared<Node>(Op::kTest, std::move(symbol));
  n->hash = Mix(static_cast<std::size_t>(Op::kTest),
                std::hash<std::string>{}(n->symbol));
  n->test_only = true;
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

template <typename NodeT>
void FillComposite(NodeT& n) {
  std::size_t h = Mix(static_cast<std::size_t>(n.op) * 31, n.lhs.hash());
  if (n.op == Term::Op::kPlus || n.op == Term::Op::kSeq) {
    h = Mix(h, n.rhs.hash());
    n.size = 1 + n.lhs.size() + n.rhs.size();
  } else {
    n.size = 1 + n.lhs.size();
  }
  n.hash = h;
}

}  // namespace

Term Term::Plus(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>(Op::kPlus, std::move(lhs), std::move(rhs));
  FillComposite(*n);
  n->test_only = n->lhs.IsTestOnly() && n->rhs.IsTestOnly();
  n->has_top = n->lhs.ContainsTop() || n->rhs.ContainsTop();
  n->has_fail = n->lhs.ContainsFail() || n->rhs.ContainsFail();
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::Seq(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>(Op::kSeq, std::move(lhs), std::move(rhs));
  FillComposite(*n);
  n->test_only = n->lhs.IsTestOnly() && n->rhs.IsTestOnly();
  n->has_top = n->lhs.ContainsTop() || n->rhs.ContainsTop();
  n->has_fail = n->lhs.ContainsFail() || n->rhs.ContainsFail();
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::Star(Term operand) {
  auto n = std::make_shared<Node>(Op::kStar, std::move(operand), Zero());
  FillComposite(*n);
  n->test_only = false;
  n->has_top = n->lhs.ContainsTop();
  n->has_fail = n->lhs.ContainsFail();
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::Not(Term operand) {
  auto n = std::make_shared<Node>(Op::kNot, std::move(operand), Zero());
  FillComposite(*n);
  n->test_only = n->lhs.IsTestOnly();
  n->has_top = n->lhs.ContainsTop();
  n->has_fail = n->lhs.ContainsFail();
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term::Op Term::op() const { return node_->op; }
const std::string& Term::symbol() const { return node_->symbol; }
const Term& Term::lhs() const { return node_->lhs; }
const Term& Term::rhs() const { return node_->rhs; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }
bool Term::IsTestOnly() const { return node_->test_only; }
bool Term::ContainsTop() const { return node_->has_top; }
bool Term::ContainsFail() const { return node_->has_fail; }

TermKind Term::kind() const {
  if (ContainsFail()) return TermKind::kFailTopKat;
  if (ContainsTop()) return TermKind::kTopKat;
  return TermKind::kKat;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.op() != b.op()) {
    return false;
  }
  switch (a.op()) {
    case Term::Op::kZero:
    case Term::Op::kOne:
    case Term::Op::kTop:
    case Term::Op::kFail:
      return true;
    case Term::Op::kAction:
    case Term::Op::kTest:
      return a.symbol() == b.symbol();
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Term::Op::kStar:
    case Term::Op::kNot:
      return a.lhs() == b.lhs();
  }
  return false;
}

bool operator<(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return false;
  if (a.hash() != b.hash()) return a.hash() < b.hash();
  if (a.op() != b.op()) return a.op() < b.op();
  switch (a.op()) {
    case Term::Op::kAction:
    case Term::Op::kTest:
      return a.symbol() < b.symbol();
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      if (a.lhs() != b.lhs()) return a.lhs() < b.lhs();
      return a.rhs() < b.rhs();
    case Term::Op::kStar:
    case Term::Op::kNot:
      return a.lhs() < b.lhs();
    default:
      return false;
  }
}

Term SumOf(const std::set<std::string>& actions) {
  Term out;
  bool first = true;
  for (const std::string& a : actions) {
    out = first ? Term::Action(a) : Term::Plus(out, Term::Action(a));
    first = false;
  }
  return out;
}

namespace {

void PrintInto(const Term& t, std::string& out) {
  switch (t.op()) {
    case Term::Op::kZero:
      out += '0';
      return;
    case Term::Op::kOne:
      out += '1';
      return;
    case Term::Op::kTop:
      out += "top";
      return;
    case Term::Op::kFail:
      out += "fail";
      return;
    case Term::Op::kAction:
    case Term::Op::kTest:
      out += t.symbol();
      return;
    case Term::Op::kPlus:
      out += '(';
      PrintInto(t.lhs(), out);
      out += " + ";
      PrintInto(t.rhs(), out);
      out += ')';
      return;
    case Term::Op::kSeq:
      out += '(';
      PrintInto(t.lhs(), out);
      out += ';';
      PrintInto(t.rhs(), out);
      out += ')';
      return;
    case Term::Op::kStar:
      out += '(';
      PrintInto(t.operand(), out);
      out += ")*";
      return;
    case Term::Op::kNot:
      out += '~';
      PrintInto(t.operand(), out);
      return;
  }
}

bool MentionsTestSymbol(const Term& t) {
  switch (t.op()) {
    case Term::Op::kTest:
    case Term::Op::kNot:
      return true;
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      return MentionsTestSymbol(t.lhs()) || MentionsTestSymbol(t.rhs());
    default:
      return false;
  }
}

void Validate(const Term& t, const Alphabet& alphabet, TermKind max_kind) {
  switch (t.op()) {
    case Term::Op::kZero:
    case Term::Op::kOne:
      return;
    case Term::Op::kTop:
      if (max_kind < TermKind::kTopKat) {
        throw Error(ErrorKind::kDisallowedConstant,
                    "'top' is not allowed in a " +
                        std::string(TermKindName(max_kind)) + " term");
      }
      return;
    case Term::Op::kFail:
      if (max_kind < TermKind::kFailTopKat) {
        throw Error(ErrorKind::kDisallowedConstant,
                    "'fail' is not allowed in a " +
                        std::string(TermKindName(max_kind)) + " term");
      }
      return;
    case Term::Op::kAction:
      if (!alphabet.HasAction(t.symbol())) {
        throw Error(ErrorKind::kUndeclaredSymbol,
                    "'" + t.symbol() + "' is not a declared action");
      }
      return;
    case Term::Op::kTest:
      if (!alphabet.HasTest(t.symbol())) {
        throw Error(ErrorKind::kUndeclaredSymbol,
                    "'" + t.symbol() + "' is not a declared test");
      }
      return;
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      Validate(t.lhs(), alphabet, max_kind);
      Validate(t.rhs(), alphabet, max_kind);
      return;
    case Term::Op::kStar:
      Validate(t.operand(), alphabet, max_kind);
      if (t.operand().IsTestOnly() && MentionsTestSymbol(t.operand())) {
        throw Error(ErrorKind::kStarOverTest,
                    "star over test " + PrintTerm(t.operand()) +
                        " is rejected; it always equals 1, write 1 instead");
      }
      return;
    case Term::Op::kNot:
      Validate(t.operand(), alphabet, max_kind);
      if (!t.operand().IsTestOnly()) {
        throw Error(ErrorKind::kNegationOverAction,
                    "~ applied to " + PrintTerm(t.operand()) +
                        ", which is not a test");
      }
      return;
  }
}

void Collect(const Term& t, Primitives& out) {
  switch (t.op()) {
    case Term::Op::kAction:
      out.actions.insert(t.symbol());
      return;
    case Term::Op::kTest:
      out.tests.insert(t.symbol());
      return;
    case Term::Op::kPlus:
    case Term::Op::kSeq:
      Collect(t.lhs(), out);
      Collect(t.rhs(), out);
      return;
    case Term::Op::kStar:
    case Term::Op::kNot:
      Collect(t.operand(), out);
      return;
    default:
      return;
  }
}

}  // namespace

std::string PrintTerm(const Term& t) {
  std::string out;
  PrintInto(t, out);
  return out;
}

void ValidateTerm(const Term& t, const Alphabet& alphabet, TermKind max_kind) {
  Validate(t, alphabet, max_kind);
}

Primitives OccurringPrimitives(const Term& t) {
  Primitives out;
  Collect(t, out);
  return out;
}

}  // namespace topkat
