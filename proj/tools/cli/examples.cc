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

#include "cli/examples.h"

#include <functional>
#include <map>

#include "topkat/claim.h"
#include "topkat/engine.h"
#include "topkat/failtopkat.h"
#include "topkat/logic.h"
#include "topkat/parser.h"
#include "topkat/relational_model.h"
#include "topkat/search.h"

namespace topkat::cli {
namespace {

// Integers -2..2 as states 0..4.
constexpr int kLow = -2;
constexpr int kStates = 5;

StateMask Where(const std::function<bool(int)>& pred) {
  StateMask out = 0;
  for (int s = 0; s < kStates; ++s) {
    if (pred(s + kLow)) out |= StateMask{1} << s;
  }
  return out;
}

// x := f(x), dropping results outside the range.
Rel Assign(const std::function<int(int)>& f) {
  Rel r(kStates);
  for (int s = 0; s < kStates; ++s) {
    int to = f(s + kLow) - kLow;
    if (to >= 0 && to < kStates) r.Set(s, to);
  }
  return r;
}

RelationalModel IntegerModel(const Alphabet& alphabet,
                             const std::map<std::string, Rel>& actions,
                             const std::map<std::string, StateMask>& tests) {
  return RelationalModel::Create(kStates, alphabet, actions, tests);
}

bool Valid(std::string_view triple, const Alphabet& a,
           std::optional<Form> form = std::nullopt) {
  Triple t = ParseTriple(triple, a);
  return CheckTripleEquational(t, form.value_or(DefaultForm(t.style)), a).valid;
}

ExampleOutcome Incompleteness() {
  ExampleOutcome e;
  e.name = "incompleteness pair";
  Alphabet a = Alphabet::Create({"p"}, {});
  Claim eq = ParseClaim("top;p = top;p;top;p", a);
  Claim leq = ParseClaim("p <= p;top;p", a);
  bool engine = !DecideEqual(eq.lhs, eq.rhs, a).equal &&
                !DecideLeq(leq.lhs, leq.rhs, a).equal;
  SearchConfig sweep;
  sweep.max_states = 3;
  bool no_countermodel = !FindCountermodel(eq, sweep).countermodel &&
                         !FindCountermodel(leq, sweep).countermodel;
  RelationalModel m = RelationalModel::Create(
      2, a, {{"p", Rel::FromPairs(2, {{0, 1}})}}, {},
      TopSpec::Explicit(Rel::FromPairs(2, {{0, 0}, {1, 1}, {0, 1}})));
  Rel tp = EvalTerm(m, eq.lhs), tptp = EvalTerm(m, eq.rhs);
  bool model = tp == Rel::FromPairs(2, {{0, 1}}) && tptp.IsEmpty();
  e.reproduced = engine && no_countermodel && model;
  e.detail = std::string("engine ") + (engine ? "not equal" : "EQUAL") +
             "; full-top models up to 3 states: " +
             (no_countermodel ? "no countermodel" : "COUNTERMODEL") +
             "; general model top;p = " + tp.ToString() +
             ", top;p;top;p = " + tptp.ToString();
  return e;
}

ExampleOutcome GeneralTopCodomain() {
  ExampleOutcome e;
  e.name = "general top breaks the codomain encoding";
  Alphabet a = Alphabet::Create({"p", "q"}, {});
  RelationalModel m = RelationalModel::Create(
      2, a, {{"p", Rel::FromPairs(2, {{0, 1}})}, {"q", Rel::FromPairs(2, {{1, 1}})}},
      {}, TopSpec::Explicit(Rel::FromPairs(2, {{0, 0}, {1, 1}, {0, 1}})));
  Rel tp = EvalTerm(m, ParseTerm("top;p", a));
  Rel tq = EvalTerm(m, ParseTerm("top;q", a));
  e.reproduced = m.action("p").Codomain() == m.action("q").Codomain() &&
                 tp == Rel::FromPairs(2, {{0, 1}}) &&
                 tq == Rel::FromPairs(2, {{0, 1}, {1, 1}});
  e.detail = "codomain(p) = codomain(q) = " +
             FormatStates(m.action("p").Codomain()) + "; top;p = " +
             tp.ToString() + ", top;q = " + tq.ToString();
  return e;
}

ExampleOutcome KatSeparation() {
  ExampleOutcome e;
  e.name = "KAT cannot express the triple";
  Alphabet a = Alphabet::Create({"p"}, {"b", "c"});
  RelationalModel u = RelationalModel::Create(
      2, a, {{"p", Rel::FromPairs(2, {{0, 1}})}}, {{"b", 0b01}, {"c", 0b10}});
  RelationalModel u0 = u.WithAction("p", Rel::Empty(2));
  Triple t = ParseTriple("[b] p [ok: c]", a);
  bool triple = HoldsSemantically(u, t) && !HoldsSemantically(u0, t);
  bool tracks_none = true;
  for (const char* candidate : {"b;p;~c = 0", "b;p;c = b;p", "c <= b;p",
                                "b;p;c = 0"}) {
    Claim c = ParseClaim(candidate, a);
    if (HoldsIn(u, c) && !HoldsIn(u0, c)) tracks_none = false;
  }
  Claim f2 = EncodeTriple(t, Form::kF2);
  bool top_tracks = HoldsIn(u, f2) && !HoldsIn(u0, f2);
  e.reproduced = triple && tracks_none && top_tracks;
  e.detail = std::string("[b] p [c] ") +
             (triple ? "holds with p = {(0,1)}, fails with p empty"
                     : "DOES NOT SEPARATE") +
             "; KAT candidates " + (tracks_none ? "do not track it" : "TRACK IT") +
             "; top;b;p >= c " + (top_tracks ? "tracks it" : "DOES NOT TRACK IT");
  return e;
}

ExampleOutcome AbsoluteValue() {
  ExampleOutcome e;
  e.name = "incorrect absolute value";
  // b: x < 0, q: x := -x
  Alphabet a = Alphabet::Create({"q"}, {"b"});
  const char* text = "[b] b;1 + ~b;q [ok: b]";
  bool valid = Valid(text, a);
  RelationalModel m = IntegerModel(a, {{"q", Assign([](int x) { return -x; })}},
                                   {{"b", Where([](int x) { return x < 0; })}});
  bool holds = HoldsSemantically(m, ParseTriple(text, a));
  e.reproduced = valid && holds;
  e.detail = std::string(text) + ": " + (valid ? "valid" : "UNPROVEN") +
             "; on -2..2 " + (holds ? "holds" : "DOES NOT HOLD");
  return e;
}

ExampleOutcome StrongestPostcondition() {
  ExampleOutcome e;
  e.name = "strongest postcondition of a loop";
  // b: x < 0, p: x := x + 1
  Alphabet a = Alphabet::Create({"p"}, {"b"});
  const char* inc = "[1] (b;p)*;~b [ok: ~b]";
  const char* hoare = "{1} (b;p)*;~b {~b}";
  bool valid = Valid(inc, a);
  for (Form f : {Form::kKozen, Form::kTopLeq, Form::kTopTop}) {
    valid = valid && Valid(hoare, a, f);
  }
  RelationalModel m = IntegerModel(a, {{"p", Assign([](int x) { return x + 1; })}},
                                   {{"b", Where([](int x) { return x < 0; })}});
  bool holds = HoldsSemantically(m, ParseTriple(inc, a)) &&
               HoldsSemantically(m, ParseTriple(hoare, a));
  e.reproduced = valid && holds;
  e.detail = std::string(inc) + " and " + hoare + ": " +
             (valid ? "valid (all forms)" : "UNPROVEN") + "; on -2..2 " +
             (holds ? "both hold" : "DO NOT HOLD");
  return e;
}

ExampleOutcome GeneralizedLoop() {
  ExampleOutcome e;
  e.name = "loop postcondition under c >= ~b";
  // Every c above ~b is ~b + d for some test d.
  Alphabet a = Alphabet::Create({"p"}, {"b", "d"});
  const char* inc = "[~b + d] (b;p)*;~b [ok: ~b]";
  const char* hoare = "{~b + d} (b;p)*;~b {~b}";
  bool valid = Valid(inc, a) && Valid(hoare, a, Form::kKozen);
  // And directly over models with a test c satisfying the hypothesis.
  Alphabet ac = Alphabet::Create({"p"}, {"b", "c"});
  Triple ti = ParseTriple("[c] (b;p)*;~b [ok: ~b]", ac);
  Triple th = ParseTriple("{c} (b;p)*;~b {~b}", ac);
  ModelEnumerator models(2, ac);
  std::uint64_t hits = 0, violations = 0;
  for (std::uint64_t i = 0; i < models.count(); ++i) {
    RelationalModel m = models.Get(i);
    StateMask not_b = AllStates(2) & ~m.test("b");
    if ((not_b & ~m.test("c")) != 0) continue;
    ++hits;
    violations += !HoldsSemantically(m, ti) || !HoldsSemantically(m, th);
  }
  e.reproduced = valid && violations == 0 && hits > 0;
  e.detail = std::string("equationally ") + (valid ? "valid" : "UNPROVEN") +
             "; " + std::to_string(hits) + " two-state models with c >= ~b, " +
             std::to_string(violations) + " violations";
  return e;
}

ExampleOutcome ErrorInLoop() {
  ExampleOutcome e;
  e.name = "error in loop";
  // b: x >= 0, c: x <= 0, d: x = 0, p arbitrary
  Alphabet a = Alphabet::Create({"p"}, {"b", "c", "d"});
  const char* text = "[1] ((b;(c;fail + ~c;p))*;~b) [er: d]";
  Triple t = ParseTriple(text, a);
  std::map<std::string, StateMask> tests = {
      {"b", Where([](int x) { return x >= 0; })},
      {"c", Where([](int x) { return x <= 0; })},
      {"d", Where([](int x) { return x == 0; })}};
  std::vector<Rel> programs = {
      Rel::Empty(kStates), Rel::Identity(kStates), Rel::Full(kStates),
      Assign([](int x) { return x + 1; }), Assign([](int x) { return x - 1; }),
      Assign([](int x) { return -x; }), Assign([](int) { return 0; })};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    programs.push_back(
        RandomModel(kStates, Alphabet::Create({"p"}, {}), TopSpec::Kind::kFull,
                    0.3, SeedFor(17, seed))
            .action("p"));
  }
  int holds = 0;
  for (const Rel& p : programs) {
    RelationalModel m = IntegerModel(a, {{"p", p}}, tests);
    holds += HoldsSemantically(m, t) && HoldsIn(m, EncodeTriple(t, Form::kF2));
  }
  // Not an equational consequence on its own: it needs x >= 0 and x <= 0
  // to mean x = 0. With d replaced by b;c it is.
  bool unproven_alone = !Valid(text, a);
  bool valid_with_fact = Valid("[1] ((b;(c;fail + ~c;p))*;~b) [er: b;c]", a);
  e.reproduced = holds == static_cast<int>(programs.size()) && unproven_alone &&
                 valid_with_fact;
  e.detail = std::string(text) + " holds on -2..2 for " + std::to_string(holds) +
             "/" + std::to_string(programs.size()) + " choices of p; " +
             "equationally " + (unproven_alone ? "unproven" : "VALID") +
             " alone, " + (valid_with_fact ? "valid" : "UNPROVEN") +
             " with d = b;c";
  return e;
}

ExampleOutcome Assignment() {
  ExampleOutcome e;
  e.name = "assignment via a hypothesis";
  // pos: x > 0, neg: x < 0, a: x := -x
  Alphabet al = Alphabet::Create({"a"}, {"neg", "pos"});
  Triple hypothesis = ParseTriple("[pos] a [ok: neg]", al);
  Triple goal = ParseTriple("[pos] neg;1 + ~neg;a [ok: neg]", al);
  RelationalModel m = IntegerModel(
      al, {{"a", Assign([](int x) { return -x; })}},
      {{"pos", Where([](int x) { return x > 0; })},
       {"neg", Where([](int x) { return x < 0; })}});
  bool in_model = HoldsSemantically(m, hypothesis) && HoldsSemantically(m, goal);
  // The derivation uses only the hypothesis and pos <= ~neg, so the goal
  // holds in every model satisfying both.
  ModelEnumerator models(3, al);
  std::uint64_t hits = 0, violations = 0;
  for (std::uint64_t i = 0; i < models.count(); ++i) {
    RelationalModel k = models.Get(i);
    if ((k.test("pos") & k.test("neg")) != 0) continue;
    if (!HoldsSemantically(k, hypothesis)) continue;
    ++hits;
    violations += !HoldsSemantically(k, goal);
  }
  e.reproduced = in_model && hits > 0 && violations == 0;
  e.detail = std::string("on -2..2 hypothesis and goal ") +
             (in_model ? "hold" : "DO NOT HOLD") + "; " +
             std::to_string(hits) +
             " three-state models satisfy the hypothesis, " +
             std::to_string(violations) + " violate the goal";
  return e;
}

ExampleOutcome FailAnnihilation() {
  ExampleOutcome e;
  e.name = "fail annihilates on the left only";
  Alphabet a = Alphabet::Create({"p"}, {});
  FailVerdict left = DecideFailEqual(ParseTerm("fail;p", a), Term::Fail(), a);
  FailVerdict right = DecideFailEqual(ParseTerm("p;fail", a), Term::Fail(), a);
  e.reproduced = left.holds && !right.holds && right.failing == ErrorCode::kEr;
  e.detail = std::string("fail;p = fail ") + (left.holds ? "holds" : "FAILS") +
             "; p;fail = fail " +
             (right.holds ? "HOLDS" : "fails with " + FormatFailWitness(right, a));
  return e;
}

}  // namespace

std::vector<ExampleOutcome> RunPinnedExamples() {
  return {Incompleteness(), GeneralTopCodomain(), KatSeparation(),
          AbsoluteValue(),  StrongestPostcondition(), GeneralizedLoop(),
          ErrorInLoop(),    Assignment(),            FailAnnihilation()};
}

}  // namespace topkat::cli
