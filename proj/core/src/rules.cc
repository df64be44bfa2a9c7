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

#include "topkat/rules.h"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "parallel.h"
#include "topkat/error.h"
#include "topkat/failtopkat.h"
#include "topkat/parser.h"

namespace topkat {
namespace {

Term Substitute(const Term& t, const std::map<std::string, Term>& actions) {
  switch (t.op()) {
    case Term::Op::kAction: {
      auto it = actions.find(t.symbol());
      return it == actions.end() ? t : it->second;
    }
    case Term::Op::kPlus:
      return Term::Plus(Substitute(t.lhs(), actions),
                        Substitute(t.rhs(), actions));
    case Term::Op::kSeq:
      return Term::Seq(Substitute(t.lhs(), actions),
                       Substitute(t.rhs(), actions));
    case Term::Op::kStar:
      return Term::Star(Substitute(t.operand(), actions));
    default:
      return t;
  }
}

std::string Replace(std::string text, std::string_view from,
                    std::string_view to) {
  for (std::size_t at = text.find(from); at != std::string::npos;
       at = text.find(from, at + to.size())) {
    text.replace(at, from.size(), to);
  }
  return text;
}

struct RuleText {
  std::string id;
  int figure;
  std::string name;
  std::vector<std::string> actions;
  std::vector<std::string> tests;
  std::vector<std::string> premises;
  std::vector<std::pair<std::string, std::string>> sides;
  std::vector<std::string> conclusions;
  Sampling sampling = Sampling::kDirected;
};

Rule Build(const RuleText& text) {
  Rule rule;
  rule.id = text.id;
  rule.figure = text.figure;
  rule.name = text.name;
  rule.sampling = text.sampling;
  std::vector<std::string> actions = text.actions;
  std::map<std::string, Term> failing;
  if (text.figure == 5) {
    for (const std::string& a : text.actions) {
      actions.push_back(a + "e");
      failing.emplace(a, Term::Plus(Term::Action(a),
                                    Term::Seq(Term::Action(a + "e"),
                                              Term::Fail())));
    }
  }
  rule.variables = Alphabet::Create(actions, text.tests);
  auto triple = [&](const std::string& s) {
    Triple t = ParseTriple(s, rule.variables);
    t.prog = Substitute(t.prog, failing);
    return t;
  };
  for (const std::string& s : text.premises) rule.premises.push_back(triple(s));
  for (const auto& [lhs, rhs] : text.sides) {
    rule.side_conditions.push_back(
        {ParseTerm(lhs, rule.variables), ParseTerm(rhs, rule.variables)});
  }
  for (const std::string& s : text.conclusions) {
    rule.conclusions.push_back(triple(s));
  }
  return rule;
}

// One entry per outcome; "$e" in the texts stands for the outcome.
std::vector<RuleText> PerOutcome(const RuleText& text) {
  std::vector<RuleText> out;
  for (ErrorCode code : {ErrorCode::kOk, ErrorCode::kEr}) {
    std::string e(ErrorCodeName(code));
    RuleText t = text;
    t.id += "[" + e + "]";
    for (auto* list : {&t.premises, &t.conclusions}) {
      for (std::string& s : *list) s = Replace(s, "$e", e);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Rule> BuildCatalog() {
  std::vector<RuleText> texts = {
      {"fig1/composition", 1, "Composition", {"p", "q"}, {"a", "b", "c"},
       {"{a} p {b}", "{b} q {c}"}, {}, {"{a} p;q {c}"}},
      {"fig1/conditional", 1, "Conditional", {"p", "q"}, {"b", "c", "d"},
       {"{b;c} p {d}", "{~b;c} q {d}"}, {}, {"{c} b;p + ~b;q {d}"}},
      {"fig1/while", 1, "While", {"p"}, {"b", "c"},
       {"{b;c} p {c}"}, {}, {"{c} (b;p)*;~b {~b;c}"}},
      {"fig1/consequence", 1, "Consequence", {"p"}, {"b", "b1", "c", "c1"},
       {"{b} p {c}"}, {{"b1", "b"}, {"c", "c1"}}, {"{b1} p {c1}"}},

      {"fig3/empty", 3, "Empty", {"p"}, {"b"}, {}, {}, {"[b] p [0]"}},
      {"fig3/consequence", 3, "Consequence", {"p"}, {"b", "b1", "c", "c1"},
       {"[b] p [c]"}, {{"b", "b1"}, {"c1", "c"}}, {"[b1] p [c1]"}},
      {"fig3/disjunction", 3, "Disjunction", {"p"}, {"b1", "b2", "c1", "c2"},
       {"[b1] p [c1]", "[b2] p [c2]"}, {}, {"[b1 + b2] p [c1 + c2]"}},
      {"fig3/identity", 3, "Identity", {}, {"b"}, {}, {}, {"[b] 1 [b]"}},
      {"fig3/composition", 3, "Composition", {"p", "q"}, {"a", "b", "c"},
       {"[a] p [b]", "[b] q [c]"}, {}, {"[a] p;q [c]"}},
      {"fig3/choice-left", 3, "Choice-Left", {"p", "q"}, {"a", "b"},
       {"[a] p [b]"}, {}, {"[a] p + q [b]"}},
      {"fig3/choice-right", 3, "Choice-Right", {"p", "q"}, {"a", "b"},
       {"[a] q [b]"}, {}, {"[a] p + q [b]"}},
      {"fig3/assume", 3, "Assume", {}, {"b", "c"}, {}, {}, {"[b] c [b;c]"}},
      {"fig3/iter-zero", 3, "Iter-Zero", {"p"}, {"b"}, {}, {}, {"[b] p* [b]"}},
      {"fig3/iter-nonzero", 3, "Iter-NonZero", {"p"}, {"b", "c"},
       {"[b] p*;p [c]"}, {}, {"[b] p* [c]"}},
      {"fig3/iter-dependent", 3, "Iter-Dependent", {"p"},
       {"b0", "b1", "b2", "b3", "b4"},
       {"[b0] p [b1]", "[b1] p [b2]", "[b2] p [b3]", "[b3] p [b4]",
        "[b4] p [b4]"},
       {}, {"[b0] p* [b0 + b1 + b2 + b3 + b4]"}, Sampling::kChain},

      {"fig5/identity", 5, "Identity", {}, {"b"}, {}, {},
       {"[b] 1 [ok: b]", "[b] 1 [er: 0]"}},
      {"fig5/composition-fail", 5, "Composition-Fail", {"p", "q"}, {"a", "b"},
       {"[a] p [er: b]"}, {}, {"[a] p;q [er: b]"}},
      {"fig5/assume", 5, "Assume", {}, {"a", "b"}, {}, {},
       {"[a] b [ok: a;b]", "[a] b [er: 0]"}},
      {"fig5/error", 5, "Error", {}, {"b"}, {}, {}, {"[b] fail [er: b]"}},
      {"fig5/iter-zero", 5, "Iter-Zero", {"p"}, {"b"}, {}, {},
       {"[b] p* [ok: b]"}},
      {"fig5/iter-dependent", 5, "Iter-Dependent", {"p"},
       {"b0", "b1", "b2", "b3", "b4"},
       {"[b0] p [ok: b1]", "[b1] p [ok: b2]", "[b2] p [ok: b3]",
        "[b3] p [ok: b4]", "[b4] p [ok: b4]"},
       {}, {"[b0] p* [ok: b0 + b1 + b2 + b3 + b4]"}, Sampling::kChain},
  };
  std::vector<RuleText> per_outcome = {
      {"fig5/empty", 5, "Empty", {"p"}, {"b"}, {}, {}, {"[b] p [$e: 0]"}},
      {"fig5/consequence", 5, "Consequence", {"p"}, {"b", "b1", "c", "c1"},
       {"[b] p [$e: c]"}, {{"b", "b1"}, {"c1", "c"}}, {"[b1] p [$e: c1]"}},
      {"fig5/disjunction", 5, "Disjunction", {"p"}, {"b1", "b2", "c1", "c2"},
       {"[b1] p [$e: c1]", "[b2] p [$e: c2]"}, {}, {"[b1 + b2] p [$e: c1 + c2]"}},
      {"fig5/composition-normal", 5, "Composition-Normal", {"p", "q"},
       {"a", "b", "c"}, {"[a] p [ok: b]", "[b] q [$e: c]"}, {},
       {"[a] p;q [$e: c]"}},
      {"fig5/choice-left", 5, "Choice-Left", {"p", "q"}, {"b", "c"},
       {"[b] p [$e: c]"}, {}, {"[b] p + q [$e: c]"}},
      {"fig5/choice-right", 5, "Choice-Right", {"p", "q"}, {"b", "c"},
       {"[b] q [$e: c]"}, {}, {"[b] p + q [$e: c]"}},
      {"fig5/iter-nonzero", 5, "Iter-NonZero", {"p"}, {"b", "c"},
       {"[b] p*;p [$e: c]"}, {}, {"[b] p* [$e: c]"}},
  };
  for (const RuleText& t : per_outcome) {
    for (RuleText& v : PerOutcome(t)) texts.push_back(std::move(v));
  }
  std::stable_sort(texts.begin(), texts.end(),
                   [](const RuleText& a, const RuleText& b) {
                     return a.figure < b.figure;
                   });
  std::vector<Rule> rules;
  for (const RuleText& t : texts) rules.push_back(Build(t));
  return rules;
}

// Premises, side conditions and conclusions of a rule compiled against its
// schema variables.
class CompiledRule {
 public:
  static constexpr int kPremiseFails = -1;
  static constexpr int kHolds = 0;

  explicit CompiledRule(const Rule& rule) {
    for (const Triple& t : rule.premises) {
      premises_.emplace_back(t, rule.variables);
    }
    for (const TestOrder& s : rule.side_conditions) {
      sides_.emplace_back(CompiledTerm(s.lhs, rule.variables),
                          CompiledTerm(s.rhs, rule.variables));
    }
    for (const Triple& t : rule.conclusions) {
      conclusions_.emplace_back(t, rule.variables);
    }
  }

  // kPremiseFails, kHolds, or 1 + the index of the first failing conclusion.
  int Check(const RelationalModel& m) const {
    for (const CompiledTriple& p : premises_) {
      if (!p.Holds(m)) return kPremiseFails;
    }
    for (const auto& [lhs, rhs] : sides_) {
      if ((lhs.EvalTestSet(m) & ~rhs.EvalTestSet(m)) != 0) {
        return kPremiseFails;
      }
    }
    for (std::size_t i = 0; i < conclusions_.size(); ++i) {
      if (!conclusions_[i].Holds(m)) return static_cast<int>(i) + 1;
    }
    return kHolds;
  }

  const CompiledTriple& premise(std::size_t i) const { return premises_[i]; }
  const CompiledTerm& side(std::size_t i, bool lhs) const {
    return lhs ? sides_[i].first : sides_[i].second;
  }

 private:
  std::vector<CompiledTriple> premises_;
  std::vector<std::pair<CompiledTerm, CompiledTerm>> sides_;
  std::vector<CompiledTriple> conclusions_;
};

void AddTests(const Term& t, std::set<std::string>* out) {
  Primitives p = OccurringPrimitives(t);
  out->insert(p.tests.begin(), p.tests.end());
}

// Redraws unconstrained tests so that premises hold; see Sampling.
RelationalModel Direct(const Rule& rule, const CompiledRule& compiled,
                       RelationalModel m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const StateMask all = AllStates(m.size());
  std::set<std::string> fixed;
  for (std::size_t i = 0; i < rule.premises.size(); ++i) {
    const Triple& t = rule.premises[i];
    AddTests(t.pre, &fixed);
    AddTests(t.prog, &fixed);
    if (t.post.op() == Term::Op::kTest && !fixed.count(t.post.symbol())) {
      StateMask reached = compiled.premise(i).Reached(m);
      StateMask noise = rng() & all;
      m = m.WithTest(t.post.symbol(), t.style == TripleStyle::kHoare
                                          ? reached | noise
                                          : reached & noise);
    }
    AddTests(t.post, &fixed);
  }
  for (std::size_t i = 0; i < rule.side_conditions.size(); ++i) {
    const TestOrder& s = rule.side_conditions[i];
    StateMask noise = rng() & all;
    if (s.lhs.op() == Term::Op::kTest && !fixed.count(s.lhs.symbol())) {
      m = m.WithTest(s.lhs.symbol(),
                     compiled.side(i, false).EvalTestSet(m) & noise);
    } else if (s.rhs.op() == Term::Op::kTest && !fixed.count(s.rhs.symbol())) {
      m = m.WithTest(s.rhs.symbol(),
                     compiled.side(i, true).EvalTestSet(m) | noise);
    }
    AddTests(s.lhs, &fixed);
    AddTests(s.rhs, &fixed);
  }
  if (rule.sampling == Sampling::kChain && rule.premises.size() >= 2) {
    // The last premise is [bk] p [bk]; the one before is [b(k-1)] p [bk].
    std::size_t k = rule.premises.size() - 1;
    const std::string& tail = rule.premises[k].post.symbol();
    StateMask x = compiled.premise(k - 1).Reached(m);
    for (;;) {
      StateMask next = x & compiled.premise(k).Reached(m.WithTest(tail, x));
      if (next == x) break;
      x = next;
    }
    m = m.WithTest(tail, x);
  }
  return m;
}

std::uint64_t IdHash(std::string_view id) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t hits = 0;
  std::uint64_t violations = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  int conclusion = 0;
};

template <typename ModelAt>
void Sweep(const std::string& phase, std::uint64_t count, int jobs,
           const CompiledRule& compiled, ModelAt model_at, RuleReport* report) {
  std::vector<Tally> tallies(std::max(1, jobs));
  internal::ParallelFor(count, jobs, [&](std::uint64_t i, int w) {
    Tally& t = tallies[w];
    ++t.instances;
    int outcome = compiled.Check(model_at(i));
    if (outcome == CompiledRule::kPremiseFails) return;
    ++t.hits;
    if (outcome == CompiledRule::kHolds) return;
    ++t.violations;
    if (i < t.first) {
      t.first = i;
      t.conclusion = outcome - 1;
    }
  });
  SweepStats stats{phase};
  Tally best;
  for (const Tally& t : tallies) {
    stats.instances += t.instances;
    stats.premise_hits += t.hits;
    stats.violations += t.violations;
    if (t.first < best.first) best = t;
  }
  report->sweeps.push_back(stats);
  if (stats.violations > 0 && !report->first_violation) {
    report->first_violation =
        Violation{phase, best.first, model_at(best.first), best.conclusion};
  }
}

}  // namespace

std::string Rule::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += premises[i].ToString();
  }
  for (const TestOrder& s : side_conditions) {
    if (!out.empty()) out += ", ";
    out += PrintTerm(s.lhs) + " <= " + PrintTerm(s.rhs);
  }
  out += out.empty() ? "|- " : " |- ";
  for (std::size_t i = 0; i < conclusions.size(); ++i) {
    if (i > 0) out += ", ";
    out += conclusions[i].ToString();
  }
  return out;
}

const std::vector<Rule>& RuleCatalog() {
  static const std::vector<Rule>* catalog = new std::vector<Rule>(BuildCatalog());
  return *catalog;
}

std::vector<const Rule*> RulesOfFigure(int figure) {
  if (figure != 1 && figure != 3 && figure != 5) {
    throw Error(ErrorKind::kInvalidArgument,
                "figure must be 1, 3 or 5, not " + std::to_string(figure));
  }
  std::vector<const Rule*> out;
  for (const Rule& r : RuleCatalog()) {
    if (r.figure == figure) out.push_back(&r);
  }
  return out;
}

const Rule& FindRule(std::string_view id) {
  for (const Rule& r : RuleCatalog()) {
    if (r.id == id) return r;
  }
  throw Error(ErrorKind::kInvalidArgument, "no rule '" + std::string(id) + "'");
}

bool RuleReport::equational_valid() const {
  return std::all_of(equational.begin(), equational.end(),
                     [](const TripleVerdict& v) { return v.valid; });
}

std::uint64_t RuleReport::violations() const {
  std::uint64_t total = 0;
  for (const SweepStats& s : sweeps) total += s.violations;
  return total;
}

std::vector<TripleVerdict> CheckRuleEquational(const Rule& rule) {
  if (!rule.premise_free()) {
    throw Error(ErrorKind::kInvalidArgument,
                "rule " + rule.id + " has premises; check it against models");
  }
  std::vector<TripleVerdict> out;
  for (const Triple& t : rule.conclusions) {
    out.push_back(
        CheckTripleEquational(t, DefaultForm(t.style), rule.variables));
  }
  return out;
}

RuleReport CheckRule(const Rule& rule, const RuleCheckConfig& config) {
  RuleReport report;
  report.rule_id = rule.id;
  if (rule.premise_free()) report.equational = CheckRuleEquational(rule);
  CompiledRule compiled(rule);
  if (config.exhaustive_states > 0) {
    ModelEnumerator models(config.exhaustive_states, rule.variables);
    Sweep("exhaustive n=" + std::to_string(config.exhaustive_states),
          models.count(), config.jobs, compiled,
          [&](std::uint64_t i) { return models.Get(i); }, &report);
  }
  const std::uint64_t base = SeedFor(config.seed, IdHash(rule.id));
  for (int n : config.random_states) {
    std::uint64_t seed = SeedFor(base, static_cast<std::uint64_t>(n));
    Sweep("random n=" + std::to_string(n), config.random_models, config.jobs,
          compiled,
          [&](std::uint64_t i) {
            std::uint64_t s = SeedFor(seed, i);
            return Direct(rule, compiled,
                          RandomModel(n, rule.variables, TopSpec::Kind::kFull,
                                      config.density, s),
                          SeedFor(s, 1));
          },
          &report);
  }
  return report;
}

}  // namespace topkat
