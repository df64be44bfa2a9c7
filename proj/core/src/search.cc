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

#include "topkat/search.h"

#include <vector>

#include "parallel.h"
#include "topkat/error.h"

namespace topkat {
namespace {

Alphabet ClaimAlphabet(const Claim& claim) {
  Primitives a = OccurringPrimitives(claim.lhs);
  Primitives b = OccurringPrimitives(claim.rhs);
  a.actions.insert(b.actions.begin(), b.actions.end());
  a.tests.insert(b.tests.begin(), b.tests.end());
  return Alphabet::Create({a.actions.begin(), a.actions.end()},
                          {a.tests.begin(), a.tests.end()});
}

bool Compare(const RelPair& l, Relation rel, const RelPair& r) {
  switch (rel) {
    case Relation::kEq:
      return l == r;
    case Relation::kLeq:
      return l.ok.SubsetOf(r.ok) && l.er.SubsetOf(r.er);
    case Relation::kGeq:
      return r.ok.SubsetOf(l.ok) && r.er.SubsetOf(l.er);
  }
  return false;
}

// Both sides compiled once against the search alphabet.
class CompiledClaim {
 public:
  CompiledClaim(const Claim& claim, const Alphabet& alphabet)
      : rel_(claim.rel),
        lhs_(claim.lhs, alphabet),
        rhs_(claim.rhs, alphabet) {}

  ClaimValues Eval(const RelationalModel& m) const {
    return {lhs_.Eval(m), rhs_.Eval(m)};
  }
  bool Holds(const RelationalModel& m) const {
    ClaimValues v = Eval(m);
    return Compare(v.lhs, rel_, v.rhs);
  }

 private:
  Relation rel_;
  CompiledFailTerm lhs_;
  CompiledFailTerm rhs_;
};

}  // namespace

ClaimValues EvaluateClaim(const RelationalModel& m, const Claim& claim) {
  return {EvalFail(m, claim.lhs), EvalFail(m, claim.rhs)};
}

bool HoldsIn(const RelationalModel& m, const Claim& claim) {
  ClaimValues v = EvaluateClaim(m, claim);
  return Compare(v.lhs, claim.rel, v.rhs);
}

SearchResult FindCountermodel(const Claim& claim, const SearchConfig& config) {
  if (config.min_states < 1 || config.max_states > kMaxStates ||
      config.min_states > config.max_states) {
    throw Error(ErrorKind::kInvalidArgument, "invalid carrier size range");
  }
  if (config.mode == SearchConfig::Mode::kExhaustive &&
      config.top != TopSpec::Kind::kFull) {
    throw Error(ErrorKind::kUnsupported,
                "exhaustive search only covers Full-top models");
  }
  Alphabet alphabet = ClaimAlphabet(claim);
  CompiledClaim compiled(claim, alphabet);
  SearchResult result;
  for (int n = config.min_states; n <= config.max_states; ++n) {
    std::optional<std::uint64_t> hit;
    if (config.mode == SearchConfig::Mode::kExhaustive) {
      ModelEnumerator models(n, alphabet);
      hit = internal::FindFirst(models.count(), config.jobs, [&](std::uint64_t i) {
        return !compiled.Holds(models.Get(i));
      });
      result.models_checked += hit ? *hit + 1 : models.count();
      if (hit) {
        RelationalModel m = models.Get(*hit);
        result.countermodel = Countermodel{m, compiled.Eval(m), n, *hit};
      }
    } else {
      auto model = [&](std::uint64_t i) {
        return RandomModel(n, alphabet, config.top, config.density,
                           SeedFor(config.seed + static_cast<std::uint64_t>(n), i));
      };
      hit = internal::FindFirst(config.models, config.jobs, [&](std::uint64_t i) {
        return !compiled.Holds(model(i));
      });
      result.models_checked += hit ? *hit + 1 : config.models;
      if (hit) {
        RelationalModel m = model(*hit);
        result.countermodel = Countermodel{m, compiled.Eval(m), n, *hit};
      }
    }
    if (hit) break;
  }
  return result;
}

}  // namespace topkat
