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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "testing/random_terms.h"
#include "topkat/alphabet.h"
#include "topkat/claim.h"
#include "topkat/desugar.h"
#include "topkat/error.h"
#include "topkat/parser.h"
#include "topkat/term.h"

namespace topkat {
namespace {

Alphabet PQB() { return Alphabet::Create({"p", "q"}, {"b"}); }

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kUnsupported;
}

TEST(AlphabetTest, RejectsOverlapDuplicatesAndReservedWords) {
  EXPECT_EQ(KindOf([] { Alphabet::Create({"p"}, {"p"}); }),
            ErrorKind::kInvalidAlphabet);
  EXPECT_EQ(KindOf([] { Alphabet::Create({"p", "p"}, {}); }),
            ErrorKind::kInvalidAlphabet);
  EXPECT_EQ(KindOf([] { Alphabet::Create({"top"}, {}); }),
            ErrorKind::kInvalidAlphabet);
  EXPECT_EQ(KindOf([] { Alphabet::Create({}, {"ok"}); }),
            ErrorKind::kInvalidAlphabet);
  EXPECT_EQ(KindOf([] { Alphabet::Create({"P"}, {}); }),
            ErrorKind::kInvalidAlphabet);
}

TEST(AlphabetTest, EnforcesTestCap) {
  std::vector<std::string> tests;
  for (int i = 0; i < 5; ++i) tests.push_back("b" + std::to_string(i));
  EXPECT_EQ(KindOf([&] { Alphabet::Create({}, tests, 4); }),
            ErrorKind::kCapExceeded);
  EXPECT_EQ(Alphabet::Create({}, tests, 5).num_atoms(), 32);
}

TEST(ParseTest, ReadsGrammar) {
  Alphabet a = PQB();
  EXPECT_EQ(ParseTerm("b;p + ~b;q", a),
            Term::Plus(Term::Seq(Term::Test("b"), Term::Action("p")),
                       Term::Seq(Term::Not(Term::Test("b")),
                                 Term::Action("q"))));
  EXPECT_EQ(ParseTerm("top;b;p", a),
            Term::Seq(Term::Seq(Term::Top(), Term::Test("b")),
                      Term::Action("p")));
  EXPECT_EQ(ParseTerm("p**", a), Term::Star(Term::Star(Term::Action("p"))));
  EXPECT_EQ(ParseTerm(" ( p ) ", a), Term::Action("p"));
  EXPECT_EQ(ParseTerm("~~b", a), Term::Not(Term::Not(Term::Test("b"))));
  EXPECT_EQ(ParseTerm("1*", a), Term::Star(Term::One()));
}

TEST(ParseTest, Precedence) {
  Alphabet a = PQB();
  // * binds tighter than ;, which binds tighter than +.
  EXPECT_EQ(ParseTerm("p;q*", a),
            Term::Seq(Term::Action("p"), Term::Star(Term::Action("q"))));
  EXPECT_EQ(ParseTerm("p + q;p", a),
            Term::Plus(Term::Action("p"),
                       Term::Seq(Term::Action("q"), Term::Action("p"))));
  EXPECT_EQ(ParseTerm("p + q + p", a),
            Term::Plus(Term::Plus(Term::Action("p"), Term::Action("q")),
                       Term::Action("p")));
}

TEST(ParseTest, ValidationErrors) {
  Alphabet a = PQB();
  EXPECT_EQ(KindOf([&] { ParseTerm("~p", a); }),
            ErrorKind::kNegationOverAction);
  EXPECT_EQ(KindOf([&] { ParseTerm("~(b;p)", a); }),
            ErrorKind::kNegationOverAction);
  EXPECT_EQ(KindOf([&] { ParseTerm("r", a); }), ErrorKind::kUndeclaredSymbol);
  EXPECT_EQ(KindOf([&] { ParseTerm("top", a, TermKind::kKat); }),
            ErrorKind::kDisallowedConstant);
  EXPECT_EQ(KindOf([&] { ParseTerm("fail", a, TermKind::kTopKat); }),
            ErrorKind::kDisallowedConstant);
  EXPECT_EQ(KindOf([&] { ParseTerm("b*", a); }), ErrorKind::kStarOverTest);
  EXPECT_EQ(KindOf([&] { ParseTerm("p +", a); }), ErrorKind::kSyntax);
  EXPECT_EQ(KindOf([&] { ParseTerm("(p", a); }), ErrorKind::kSyntax);
  EXPECT_EQ(KindOf([&] { ParseTerm("p q", a); }), ErrorKind::kSyntax);
  EXPECT_EQ(KindOf([&] { ParseTerm("ok", a); }), ErrorKind::kSyntax);
  EXPECT_EQ(KindOf([&] { ParseTerm("01", a); }), ErrorKind::kSyntax);
}

TEST(ParseTest, SyntaxErrorsCarryOffsets) {
  try {
    ParseTerm("p + )", PQB());
    FAIL();
  } catch (const Error& e) {
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(*e.position(), 4u);
  }
}

TEST(PrintTest, CanonicalForms) {
  EXPECT_EQ(PrintTerm(Term::Star(Term::Seq(Term::Test("b"),
                                           Term::Action("p")))),
            "((b;p))*");
  EXPECT_EQ(PrintTerm(Term::Top()), "top");
  EXPECT_EQ(PrintTerm(Term::Fail()), "fail");
  EXPECT_EQ(PrintTerm(Term::Not(Term::Plus(Term::Test("b"), Term::One()))),
            "~(b + 1)");
}

TEST(PrintTest, RoundTripsRandomTerms) {
  Alphabet a = Alphabet::Create({"p", "q", "r"}, {"b", "c"});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20000; ++i) {
    testing::TermShape shape{.max_size = 1 + i % 25,
                             .allow_top = i % 2 == 0,
                             .allow_fail = i % 3 == 0};
    Term t = testing::RandomTerm(rng, a, shape);
    ASSERT_NO_THROW(ValidateTerm(t, a)) << PrintTerm(t);
    std::string text = PrintTerm(t);
    ASSERT_EQ(ParseTerm(text, a), t) << text;
  }
}

TEST(ParseTest, FuzzedInputNeverCrashes) {
  Alphabet a = PQB();
  const std::string pieces[] = {"p", "q", "b", "~", "*", "(", ")", "+",
                                ";", "0", "1", "top", "fail", " ", "x", "@"};
  std::mt19937_64 rng(7);
  int accepted = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string text;
    int len = 1 + static_cast<int>(rng() % 12);
    for (int k = 0; k < len; ++k) text += pieces[rng() % std::size(pieces)];
    try {
      Term t = ParseTerm(text, a);
      ++accepted;
      EXPECT_EQ(ParseTerm(PrintTerm(t), a), t);
    } catch (const Error&) {
    }
  }
  EXPECT_GT(accepted, 0);
  EXPECT_THROW(ParseTerm(std::string(100000, '('), a), Error);
  EXPECT_THROW(ParseTerm(std::string(100000, '~') + "b", a), Error);
}

TEST(TermTest, KindLattice) {
  Alphabet a = PQB();
  EXPECT_EQ(ParseTerm("p;b", a).kind(), TermKind::kKat);
  EXPECT_EQ(ParseTerm("top;p", a).kind(), TermKind::kTopKat);
  EXPECT_EQ(ParseTerm("top;fail", a).kind(), TermKind::kFailTopKat);
  EXPECT_TRUE(ParseTerm("~b + 1;b", a).IsTestOnly());
  EXPECT_FALSE(ParseTerm("1*", a).IsTestOnly());
}

TEST(TermTest, OccurringPrimitives) {
  Alphabet a = PQB();
  EXPECT_EQ(OccurringPrimitives(ParseTerm("top;b;p", a)),
            (Primitives{{"p"}, {"b"}}));
  EXPECT_EQ(OccurringPrimitives(ParseTerm("0", a)), Primitives{});
  EXPECT_EQ(OccurringPrimitives(ParseTerm("b;p + ~b;q", a)),
            (Primitives{{"p", "q"}, {"b"}}));
}

TEST(DesugarTest, WhileAndIf) {
  Term b = Term::Test("b");
  EXPECT_EQ(Desugar(Program::While(b, Program::Action("inc"))),
            Term::Seq(Term::Star(Term::Seq(b, Term::Action("inc"))),
                      Term::Not(b)));
  EXPECT_EQ(Desugar(Program::If(b, Program::Skip(), Program::Action("neg"))),
            Term::Plus(Term::Seq(b, Term::One()),
                       Term::Seq(Term::Not(b), Term::Action("neg"))));
  EXPECT_EQ(Desugar(Program::Skip()), Term::One());
  EXPECT_EQ(Desugar(Program::Seq({Program::Assume(b), Program::Error()})),
            Term::Seq(b, Term::Fail()));
  EXPECT_THROW(Desugar(Program::Error(), TermKind::kTopKat), Error);
}

TEST(ClaimTest, ParsesRelations) {
  Alphabet a = PQB();
  Claim c = ParseClaim("top;p <= top", a);
  EXPECT_EQ(c.rel, Relation::kLeq);
  EXPECT_EQ(ParseClaim("p >= q", a).Normalized(),
            (Claim{Term::Action("q"), Relation::kLeq, Term::Action("p")}));
  EXPECT_EQ(ParseClaim("p = p;p", a).rel, Relation::kEq);
  EXPECT_THROW(ParseClaim("p", a), Error);
}

TEST(ScanIdentifiersTest, FindsNegatedNames) {
  IdentifierUse use = ScanIdentifiers("[a] b;p + ~b;q [ok: c]");
  EXPECT_EQ(use.all, (std::set<std::string>{"a", "b", "c", "p", "q"}));
  EXPECT_EQ(use.negated, (std::set<std::string>{"b"}));
}

}  // namespace
}  // namespace topkat
