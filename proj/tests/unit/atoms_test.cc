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
#include <vector>

#include "gtest/gtest.h"
#include "testing/oracles.h"
#include "testing/random_terms.h"
#include "topkat/atoms.h"
#include "topkat/error.h"
#include "topkat/guarded_nfa.h"
#include "topkat/language.h"
#include "topkat/parser.h"

namespace topkat {
namespace {

using testing::NaiveLanguage;
using testing::StringSet;

StringSet AsSet(const GuardedLanguage& lang) {
  std::vector<GuardedString> v = lang.Strings();
  return StringSet(v.begin(), v.end());
}

std::vector<std::string> WithTau(const Alphabet& a) {
  std::vector<std::string> out = a.actions();
  out.emplace_back(kTauAction);
  return out;
}

TEST(AtomsTest, Enumerate) {
  EXPECT_EQ(EnumerateAtoms(Alphabet::Create({}, {"b"})),
            (std::vector<Atom>{0, 1}));
  EXPECT_EQ(EnumerateAtoms(Alphabet::Create({"p"}, {})),
            (std::vector<Atom>{0}));
  EXPECT_EQ(EnumerateAtoms(Alphabet::Create({}, {"b", "c"})).size(), 4u);
}

TEST(AtomsTest, EvalTest) {
  Alphabet a = Alphabet::Create({"p"}, {"b", "c"});
  Atom b_not_c = 0b01;
  EXPECT_TRUE(EvalTest(ParseTerm("b", a), b_not_c, a));
  EXPECT_FALSE(EvalTest(ParseTerm("~b;c", a), b_not_c, a));
  for (Atom x = 0; x < 4; ++x) EXPECT_TRUE(EvalTest(ParseTerm("1", a), x, a));
  EXPECT_THROW(EvalTest(ParseTerm("p", a), 0, a), Error);
}

TEST(AtomsTest, FormatAndParse) {
  Alphabet a = Alphabet::Create({"p"}, {"b", "c"});
  GuardedString w{0b01, {{"p", 0b11}}};
  EXPECT_EQ(FormatGuardedString(w, a), "b,~c p b,c");
  EXPECT_EQ(ParseGuardedString("b,~c p b,c", a), w);
  EXPECT_EQ(ParseGuardedString("~c,b p c,b", a), w);
  EXPECT_EQ(FormatGuardedString(GuardedString{0, {{"top", 0}}},
                                Alphabet::Create({"p"}, {})),
            "1 top 1");
  EXPECT_THROW(ParseGuardedString("b p b,c", a), Error);
}

TEST(CoalesceTest, Examples) {
  GuardedString x{1, {{"p", 2}}};
  GuardedString y{2, {{"q", 3}}};
  EXPECT_EQ(Coalesce(x, y), (GuardedString{1, {{"p", 2}, {"q", 3}}}));
  EXPECT_EQ(Coalesce(GuardedString{1, {}}, GuardedString{1, {}}),
            (GuardedString{1, {}}));
  EXPECT_EQ(Coalesce(GuardedString{0, {{"p", 1}}}, GuardedString{2, {{"q", 3}}}),
            std::nullopt);
}

GuardedString RandomString(std::mt19937_64& rng) {
  GuardedString w{static_cast<Atom>(rng() % 2), {}};
  int n = static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) {
    w.tail.push_back({rng() % 2 ? "p" : "q", static_cast<Atom>(rng() % 2)});
  }
  return w;
}

TEST(CoalesceTest, AssociativeWhereDefined) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    GuardedString x = RandomString(rng);
    GuardedString y = RandomString(rng);
    GuardedString z = RandomString(rng);
    auto xy = Coalesce(x, y);
    auto yz = Coalesce(y, z);
    std::optional<GuardedString> left = xy ? Coalesce(*xy, z) : std::nullopt;
    std::optional<GuardedString> right = yz ? Coalesce(x, *yz) : std::nullopt;
    ASSERT_EQ(left, right);
  }
}

TEST(LanguageTest, Examples) {
  Alphabet b = Alphabet::Create({}, {"b"});
  EXPECT_EQ(AsSet(LanguageUpTo(Term::Test("b"), b, 2)),
            (StringSet{GuardedString{1, {}}}));
  Alphabet p = Alphabet::Create({"p"}, {});
  EXPECT_EQ(AsSet(LanguageUpTo(Term::Action("p"), p, 2)),
            (StringSet{GuardedString{0, {{"p", 0}}}}));
  EXPECT_EQ(AsSet(LanguageUpTo(Term::Star(Term::Action("p")), p, 2)),
            (StringSet{GuardedString{0, {}}, GuardedString{0, {{"p", 0}}},
                       GuardedString{0, {{"p", 0}, {"p", 0}}}}));
  EXPECT_THROW(LanguageUpTo(Term::Action("p"), p, -1), Error);
  EXPECT_THROW(LanguageUpTo(Term::Fail(), p, 1), Error);
}

TEST(LanguageTest, TopSemantics) {
  Alphabet p = Alphabet::Create({"p"}, {});
  GuardedLanguage tau = LanguageUpTo(Term::Top(), p, 2, TopSemantics::kTauAction);
  EXPECT_EQ(AsSet(tau), (StringSet{GuardedString{0, {{"top", 0}}}}));
  GuardedLanguage full = LanguageUpTo(Term::Top(), p, 2, TopSemantics::kFull);
  // 1 + 2 + 4 strings over {p, top}.
  EXPECT_EQ(full.size(), 7u);
}

TEST(LanguageTest, MatchesNaiveOracle) {
  Alphabet a = Alphabet::Create({"p", "q"}, {"b", "c"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    Term t = testing::RandomTerm(rng, a, {.max_size = 8, .allow_top = true});
    int n = static_cast<int>(rng() % 3);
    GuardedLanguage fast = LanguageUpTo(t, a, n, TopSemantics::kFull);
    ASSERT_EQ(AsSet(fast), NaiveLanguage(t, a.tests(), WithTau(a), n))
        << PrintTerm(t) << " at " << n;
  }
}

TEST(LanguageTest, MonotoneInBound) {
  Alphabet a = Alphabet::Create({"p", "q"}, {"b"});
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    Term t = testing::RandomTerm(rng, a, {.max_size = 10});
    StringSet prev;
    for (int n = 0; n <= 4; ++n) {
      StringSet cur = AsSet(LanguageUpTo(t, a, n));
      ASSERT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(),
                                prev.end()))
          << PrintTerm(t);
      prev = std::move(cur);
    }
  }
}

TEST(LanguageTest, TestOnlyTermsDenoteAtoms) {
  Alphabet a = Alphabet::Create({"p"}, {"b", "c"});
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Term t = testing::RandomTest(rng, a, 9);
    StringSet expected;
    for (Atom x : EnumerateAtoms(a)) {
      if (EvalTest(t, x, a)) expected.insert(GuardedString{x, {}});
    }
    ASSERT_EQ(AsSet(LanguageUpTo(t, a, 1 + i % 3)), expected) << PrintTerm(t);
  }
}

TEST(LanguageTest, LeftDistributivity) {
  Alphabet a = Alphabet::Create({"p", "q"}, {"b"});
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    Term t1 = testing::RandomTerm(rng, a, {.max_size = 5, .allow_top = true});
    Term t2 = testing::RandomTerm(rng, a, {.max_size = 5, .allow_top = true});
    Term t3 = testing::RandomTerm(rng, a, {.max_size = 5, .allow_top = true});
    Term lhs = Term::Seq(t1, Term::Plus(t2, t3));
    Term rhs = Term::Plus(Term::Seq(t1, t2), Term::Seq(t1, t3));
    ASSERT_EQ(LanguageUpTo(lhs, a, 3, TopSemantics::kFull),
              LanguageUpTo(rhs, a, 3, TopSemantics::kFull))
        << PrintTerm(lhs);
  }
}

TEST(GuardedNfaTest, AgreesWithBoundedLanguage) {
  Alphabet a = Alphabet::Create({"p", "q"}, {"b"});
  std::mt19937_64 rng(15);
  std::vector<std::string> actions = WithTau(a);
  for (int i = 0; i < 300; ++i) {
    Term t = testing::RandomTerm(rng, a, {.max_size = 9, .allow_top = true});
    GuardedNfa nfa(t, a);
    StringSet all = NaiveLanguage(Term::Top(), a.tests(), actions, 3);
    GuardedLanguage lang = LanguageUpTo(t, a, 3, TopSemantics::kFull);
    for (const GuardedString& w : all) {
      ASSERT_EQ(nfa.Accepts(w), lang.Contains(w))
          << PrintTerm(t) << " on " << FormatGuardedString(w, a);
    }
  }
}

TEST(GuardedNfaTest, FirstDifferenceIsShortestAndOneSided) {
  Alphabet a = Alphabet::Create({"p", "q"}, {"b"});
  std::mt19937_64 rng(16);
  for (int i = 0; i < 300; ++i) {
    Term t1 = testing::RandomTerm(rng, a, {.max_size = 7, .allow_top = true});
    Term t2 = testing::RandomTerm(rng, a, {.max_size = 7, .allow_top = true});
    GuardedLanguage l1 = LanguageUpTo(t1, a, 3, TopSemantics::kFull);
    GuardedLanguage l2 = LanguageUpTo(t2, a, 3, TopSemantics::kFull);
    auto diff = GuardedNfa::FirstDifference(GuardedNfa(t1, a), GuardedNfa(t2, a), 3);
    auto expected = l1.FirstDifference(l2);
    ASSERT_EQ(diff.has_value(), expected.has_value())
        << PrintTerm(t1) << " vs " << PrintTerm(t2);
    if (diff) {
      EXPECT_EQ(diff->length(), expected->length());
      EXPECT_NE(l1.Contains(*diff), l2.Contains(*diff));
    }
  }
}

}  // namespace
}  // namespace topkat
