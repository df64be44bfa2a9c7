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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "topkat/engine.h"
#include "topkat/failtopkat.h"
#include "topkat/guarded_nfa.h"
#include "topkat/language.h"
#include "topkat/parser.h"
#include "topkat/relational_model.h"
#include "topkat/rules.h"

namespace topkat {
namespace {

// A chain t_k = (p;b + q;~b)^k ; top ; (p + q)*, which grows linearly.
Term Chain(const Alphabet& a, int k) {
  std::string text = "1";
  for (int i = 0; i < k; ++i) text += ";(p;b + q;~b)";
  return ParseTerm(text + ";top;(p + q)*", a);
}

void BM_DecideEqualChain(benchmark::State& state) {
  Alphabet a = Alphabet::Create({"p", "q"}, {"b"});
  Term t = Chain(a, static_cast<int>(state.range(0)));
  Term u = Term::Plus(t, t);
  for (auto _ : state) benchmark::DoNotOptimize(DecideEqual(t, u, a).equal);
  state.counters["size"] = static_cast<double>(t.size());
}
BENCHMARK(BM_DecideEqualChain)->RangeMultiplier(2)->Range(1, 16)
    ->Unit(benchmark::kMillisecond);

void BM_DecideEqualIncompletenessPair(benchmark::State& state) {
  Alphabet a = Alphabet::Create({"p"}, {});
  Term l = ParseTerm("top;p", a), r = ParseTerm("top;p;top;p", a);
  for (auto _ : state) benchmark::DoNotOptimize(DecideEqual(l, r, a).equal);
}
BENCHMARK(BM_DecideEqualIncompletenessPair);

void BM_DecideEqualStarUnfold(benchmark::State& state) {
  int tests = static_cast<int>(state.range(0));
  std::vector<std::string> names;
  for (int i = 0; i < tests; ++i) names.push_back("b" + std::to_string(i));
  Alphabet a = Alphabet::Create({"p", "q"}, names);
  std::string guard = names.empty() ? "1" : names[0];
  for (int i = 1; i < tests; ++i) guard += ";" + names[i];
  Term l = ParseTerm("(" + guard + ";p + q)*", a);
  Term r = ParseTerm("1 + (" + guard + ";p + q);(" + guard + ";p + q)*", a);
  for (auto _ : state) benchmark::DoNotOptimize(DecideEqual(l, r, a).equal);
}
BENCHMARK(BM_DecideEqualStarUnfold)->DenseRange(0, 3)
    ->Unit(benchmark::kMicrosecond);

void BM_NfaFirstDifference(benchmark::State& state) {
  Alphabet a = Alphabet::Create({"p", "q"}, {"b"});
  Term t = Chain(a, 4);
  GuardedNfa x(t, a), y(Term::Plus(t, t), a);
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(GuardedNfa::FirstDifference(x, y, bound));
  }
}
BENCHMARK(BM_NfaFirstDifference)->DenseRange(2, 8, 2)
    ->Unit(benchmark::kMicrosecond);

void BM_LanguageUpToTop(benchmark::State& state) {
  Alphabet base = Alphabet::Create({"p", "q"}, {"b", "c"});
  Alphabet a = base.WithActions({"p", "q", std::string(kTauAction)});
  Term t = ParseTerm("top;p;top", base);
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(LanguageUpTo(t, a, bound, TopSemantics::kFull).size());
  }
}
BENCHMARK(BM_LanguageUpToTop)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_EvalTerm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Alphabet a = Alphabet::Create({"p", "q"}, {"b"});
  Term t = ParseTerm("(b;p + ~b;q)*;top;(p;q)*", a);
  RelationalModel m = RandomModel(n, a, TopSpec::Kind::kFull, 0.3, 1);
  CompiledTerm compiled(t, a);
  for (auto _ : state) benchmark::DoNotOptimize(compiled.Eval(m));
}
BENCHMARK(BM_EvalTerm)->RangeMultiplier(2)->Range(2, 64);

void BM_EvalFail(benchmark::State& state) {
  Alphabet a = Alphabet::Create({"p"}, {"b"});
  Term t = ParseTerm("(b;(p + fail) + ~b;p)*;~b", a);
  RelationalModel m = RandomModel(static_cast<int>(state.range(0)), a,
                                  TopSpec::Kind::kFull, 0.3, 2);
  CompiledFailTerm compiled(t, a);
  for (auto _ : state) benchmark::DoNotOptimize(compiled.Eval(m));
}
BENCHMARK(BM_EvalFail)->RangeMultiplier(4)->Range(4, 64);

void BM_CheckRule(benchmark::State& state, const char* id) {
  RuleCheckConfig config;
  config.random_models = 100;
  const Rule& rule = FindRule(id);
  for (auto _ : state) benchmark::DoNotOptimize(CheckRule(rule, config).passed());
}
BENCHMARK_CAPTURE(BM_CheckRule, composition, "fig3/composition")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckRule, iter_dependent, "fig3/iter-dependent")
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace topkat

BENCHMARK_MAIN();
