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

#include "cli/commands.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "cli/examples.h"
#include "nlohmann/json.hpp"
#include "topkat/claim.h"
#include "topkat/engine.h"
#include "topkat/error.h"
#include "topkat/failtopkat.h"
#include "topkat/guarded_nfa.h"
#include "topkat/logic.h"
#include "topkat/model_json.h"
#include "topkat/parser.h"
#include "topkat/rules.h"
#include "topkat/search.h"

namespace topkat::cli {
namespace {

using nlohmann::json;

constexpr char kFailNote[] =
    "note: terms with fail are compared on their (normal, error) split; "
    "equal means equal in every pair model built over a TopKAT";
constexpr char kUnprovenNote[] =
    "note: unproven is not a refutation; the witness separates the two "
    "sides' languages, and the triple may still hold in a particular model";

json Header(std::string_view command) {
  return json{{"schema", kJsonSchema}, {"command", command}};
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

json AlphabetJson(const Alphabet& a) {
  return json{{"actions", a.actions()}, {"tests", a.tests()}};
}

json RelJson(const Rel& r) {
  json out = json::array();
  for (auto [i, j] : r.Pairs()) out.push_back({i, j});
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kInvalidArgument, "cannot read '" + path + "'");
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string ShortSide(Side s) { return s == Side::kLeft ? "left" : "right"; }

// Text and JSON renderings of a decision between two terms.
struct Decision {
  bool holds = false;
  std::optional<GuardedString> witness;
  Side side = Side::kLeft;
  std::optional<ErrorCode> component;  // fail terms only
  DecisionStats stats;
};

Decision Decide(const Term& lhs, const Term& rhs, bool leq,
                const Alphabet& alphabet) {
  Decision d;
  if (lhs.ContainsFail() || rhs.ContainsFail()) {
    FailVerdict v = leq ? DecideFailLeq(lhs, rhs, alphabet)
                        : DecideFailEqual(lhs, rhs, alphabet);
    d.holds = v.holds;
    if (!v.holds) {
      const Verdict& failing = *v.failing == ErrorCode::kOk ? v.ok : v.er;
      d.witness = failing.witness;
      d.side = failing.accepted_by;
      d.component = v.failing;
    }
    d.stats = v.ok.stats;
    return d;
  }
  Verdict v = leq ? DecideLeq(lhs, rhs, alphabet) : DecideEqual(lhs, rhs, alphabet);
  d.holds = v.equal;
  d.witness = v.witness;
  d.side = v.accepted_by;
  d.stats = v.stats;
  return d;
}

std::string WitnessText(const Decision& d, const Alphabet& alphabet) {
  std::string w = FormatGuardedString(*d.witness, alphabet);
  if (d.component) w = std::string(ErrorCodeName(*d.component)) + ": " + w;
  return w;
}

CommandResult Compare(std::string_view command, const std::string& lhs_text,
                      const std::string& rhs_text, bool leq,
                      const RunConfig& config) {
  Alphabet alphabet = ResolveAlphabet(config, {lhs_text, rhs_text});
  Term lhs = ParseTerm(lhs_text, alphabet);
  Term rhs = ParseTerm(rhs_text, alphabet);
  Decision d = Decide(lhs, rhs, leq, alphabet);
  bool fail = lhs.ContainsFail() || rhs.ContainsFail();
  CommandResult r;
  r.exit_code = d.holds ? kExitHolds : kExitRefuted;
  std::string verdict = leq ? (d.holds ? "holds" : "does not hold")
                            : (d.holds ? "equal" : "not equal");
  if (config.format == OutputFormat::kJson) {
    json j = Header(command);
    j["alphabet"] = AlphabetJson(alphabet);
    j["lhs"] = PrintTerm(lhs);
    j["rhs"] = PrintTerm(rhs);
    j["relation"] = leq ? "<=" : "=";
    j["holds"] = d.holds;
    j["semantics"] = fail ? "fail-split" : "topkat";
    if (!d.holds) {
      j["witness"] = FormatGuardedString(*d.witness, alphabet);
      j["witness_length"] = d.witness->length();
      j["accepted_by"] = ShortSide(d.side);
      if (d.component) j["component"] = ErrorCodeName(*d.component);
    }
    j["automaton_states"] = d.stats.automaton_states;
    r.out = Dump(j);
    return r;
  }
  std::ostringstream out;
  out << PrintTerm(lhs) << (leq ? " <= " : " = ") << PrintTerm(rhs) << "\n";
  out << verdict << "\n";
  if (!d.holds) {
    out << "witness: " << WitnessText(d, alphabet) << " (accepted only by the "
        << ShortSide(d.side) << " term)\n";
  }
  if (fail) out << kFailNote << "\n";
  r.out = out.str();
  return r;
}

std::string SweepText(const RuleReport& report) {
  std::string out;
  for (const SweepStats& s : report.sweeps) {
    if (!out.empty()) out += "; ";
    out += s.phase + ": " + std::to_string(s.premise_hits) + "/" +
           std::to_string(s.instances) + " premise hits, " +
           std::to_string(s.violations) + " violations";
  }
  return out;
}

}  // namespace

std::vector<std::string> SplitNames(const std::string& text) {
  std::vector<std::string> out;
  std::string name;
  for (char c : text + " ") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!name.empty()) out.push_back(name);
      name.clear();
    } else {
      name += c;
    }
  }
  return out;
}

void LoadAlphabetFile(const std::string& path, RunConfig* config) {
  std::istringstream in(ReadFile(path));
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    std::string rest = colon == std::string::npos ? "" : line.substr(colon + 1);
    rest.erase(std::remove(rest.begin(), rest.end(), '\r'), rest.end());
    if (key == "actions") {
      config->actions = SplitNames(rest);
    } else if (key == "tests") {
      config->tests = SplitNames(rest);
    } else {
      throw Error(ErrorKind::kInvalidAlphabet,
                  path + ":" + std::to_string(number) +
                      ": expected 'actions: ...' or 'tests: ...'");
    }
  }
}

Alphabet ResolveAlphabet(const RunConfig& config,
                         const std::vector<std::string>& texts) {
  if (config.actions && config.tests) {
    return Alphabet::Create(*config.actions, *config.tests);
  }
  std::set<std::string> all, tests;
  for (const std::string& text : texts) {
    std::size_t first = text.find_first_not_of(" \t");
    bool triple = first != std::string::npos &&
                  (text[first] == '[' || text[first] == '{');
    IdentifierUse use =
        triple ? ScanTripleIdentifiers(text) : ScanIdentifiers(text);
    all.insert(use.all.begin(), use.all.end());
    tests.insert(use.negated.begin(), use.negated.end());
  }
  std::vector<std::string> actions, test_list;
  if (config.actions) {
    actions = *config.actions;
    for (const std::string& n : all) {
      if (std::find(actions.begin(), actions.end(), n) == actions.end()) {
        test_list.push_back(n);
      }
    }
  } else if (config.tests) {
    test_list = *config.tests;
    for (const std::string& n : all) {
      if (std::find(test_list.begin(), test_list.end(), n) == test_list.end()) {
        actions.push_back(n);
      }
    }
  } else {
    for (const std::string& n : all) {
      (tests.count(n) ? test_list : actions).push_back(n);
    }
  }
  return Alphabet::Create(actions, test_list);
}

CommandResult CmdEquiv(const std::string& lhs, const std::string& rhs,
                       const RunConfig& config) {
  return Compare("equiv", lhs, rhs, false, config);
}

CommandResult CmdLeq(const std::string& lhs, const std::string& rhs,
                     const RunConfig& config) {
  return Compare("leq", lhs, rhs, true, config);
}

CommandResult CmdTriple(const std::string& text, const TripleOptions& options,
                        const RunConfig& config) {
  CommandResult r;
  json j = Header("triple");
  std::ostringstream out;
  if (options.strategy == Strategy::kModel) {
    std::string doc = ReadFile(options.model_file);
    RelationalModel model = config.actions || config.tests
                                ? ModelFromJson(doc, ResolveAlphabet(config, {text}))
                                : ModelFromJson(doc);
    Triple t = ParseTriple(text, model.alphabet());
    bool holds = HoldsSemantically(model, t);
    r.exit_code = holds ? kExitHolds : kExitRefuted;
    if (config.format == OutputFormat::kJson) {
      j["triple"] = t.ToString();
      j["strategy"] = "model";
      j["model"] = json::parse(ModelToJson(model));
      j["holds"] = holds;
      r.out = Dump(j);
      return r;
    }
    out << t.ToString() << "\n";
    out << (holds ? "holds" : "does not hold") << " in the model from "
        << options.model_file << "\n";
    r.out = out.str();
    return r;
  }
  Alphabet alphabet = ResolveAlphabet(config, {text});
  Triple t = ParseTriple(text, alphabet);
  Form form = options.form ? ParseForm(*options.form) : DefaultForm(t.style);
  TripleVerdict v = CheckTripleEquational(t, form, alphabet);
  r.exit_code = v.valid ? kExitHolds : kExitRefuted;
  if (config.format == OutputFormat::kJson) {
    j["alphabet"] = AlphabetJson(alphabet);
    j["triple"] = t.ToString();
    j["strategy"] = "equational";
    j["form"] = FormName(form);
    j["encoding"] = v.encoding.ToString();
    j["verdict"] = v.valid ? "valid" : "unproven";
    if (!v.valid) {
      j["witness"] = FormatGuardedString(*v.verdict.witness, alphabet);
      j["accepted_by"] = ShortSide(v.verdict.accepted_by);
    }
    r.out = Dump(j);
    return r;
  }
  out << t.ToString() << "\n";
  out << "encoding (" << FormName(form) << "): " << v.encoding.ToString() << "\n";
  if (v.valid) {
    out << "valid\n";
  } else {
    out << "unproven\n";
    out << "witness: " << FormatGuardedString(*v.verdict.witness, alphabet)
        << " (accepted only by the " << ShortSide(v.verdict.accepted_by)
        << " side)\n";
    out << kUnprovenNote << "\n";
  }
  r.out = out.str();
  return r;
}

CommandResult CmdRules(std::optional<int> figure, const RunConfig& config) {
  std::vector<const Rule*> rules;
  if (figure) {
    rules = RulesOfFigure(*figure);
  } else {
    for (const Rule& rule : RuleCatalog()) rules.push_back(&rule);
  }
  RuleCheckConfig check;
  check.random_models = config.models;
  check.density = config.density;
  check.seed = config.seed;
  check.jobs = config.jobs;
  CommandResult r;
  json j = Header("rules");
  j["params"] = {{"figure", figure ? json(*figure) : json("all")},
                 {"seed", config.seed},
                 {"exhaustive_states", check.exhaustive_states},
                 {"random_states", check.random_states},
                 {"models", check.random_models},
                 {"density", check.density}};
  std::ostringstream out;
  out << "rules: figure " << (figure ? std::to_string(*figure) : "all")
      << ", seed " << config.seed << ", exhaustive n="
      << check.exhaustive_states << ", random n=";
  for (std::size_t i = 0; i < check.random_states.size(); ++i) {
    out << (i ? "," : "") << check.random_states[i];
  }
  out << " x " << check.random_models << ", density " << check.density << "\n";
  int failed = 0;
  json rows = json::array();
  for (const Rule* rule : rules) {
    RuleReport report = CheckRule(*rule, check);
    bool ok = report.passed();
    failed += !ok;
    std::string eq = rule->premise_free()
                         ? (report.equational_valid() ? "valid" : "unproven")
                         : "-";
    out << (ok ? "pass  " : "FAIL  ") << rule->id << "  equational: " << eq
        << "  " << SweepText(report) << "\n";
    json row = {{"id", rule->id},
                {"rule", rule->ToString()},
                {"passed", ok},
                {"equational", eq}};
    json sweeps = json::array();
    for (const SweepStats& s : report.sweeps) {
      sweeps.push_back({{"phase", s.phase},
                        {"instances", s.instances},
                        {"premise_hits", s.premise_hits},
                        {"violations", s.violations}});
    }
    row["sweeps"] = sweeps;
    if (report.first_violation) {
      const Violation& v = *report.first_violation;
      std::string model = ModelToJson(v.model);
      out << "      first violation (" << v.phase << ", index " << v.index
          << "): " << model << "\n";
      row["first_violation"] = {{"phase", v.phase},
                                {"index", v.index},
                                {"model", json::parse(model)}};
    }
    rows.push_back(row);
  }
  r.exit_code = failed == 0 ? kExitHolds : kExitRefuted;
  if (config.format == OutputFormat::kJson) {
    j["rules"] = rows;
    j["passed"] = failed == 0;
    r.out = Dump(j);
    return r;
  }
  if (failed == 0) {
    out << "all " << rules.size() << " rules pass\n";
  } else {
    out << failed << " of " << rules.size() << " rules fail\n";
  }
  r.out = out.str();
  return r;
}

CommandResult CmdExamples(const RunConfig& config) {
  std::vector<ExampleOutcome> outcomes = RunPinnedExamples();
  CommandResult r;
  const ExampleOutcome* first_divergence = nullptr;
  for (const ExampleOutcome& e : outcomes) {
    if (!e.reproduced && !first_divergence) first_divergence = &e;
  }
  r.exit_code = first_divergence ? kExitRefuted : kExitHolds;
  if (config.format == OutputFormat::kJson) {
    json j = Header("examples");
    json list = json::array();
    for (const ExampleOutcome& e : outcomes) {
      list.push_back({{"name", e.name},
                      {"reproduced", e.reproduced},
                      {"detail", e.detail}});
    }
    j["examples"] = list;
    j["passed"] = !first_divergence;
    r.out = Dump(j);
    return r;
  }
  std::ostringstream out;
  for (const ExampleOutcome& e : outcomes) {
    out << (e.reproduced ? "ok    " : "DIFF  ") << e.name << ": " << e.detail
        << "\n";
  }
  if (first_divergence) {
    out << "first divergence: " << first_divergence->name << "\n";
  } else {
    out << "all " << outcomes.size() << " examples reproduce\n";
  }
  r.out = out.str();
  return r;
}

CommandResult CmdOracle(const std::string& lhs_text,
                        const std::string& rhs_text, int bound,
                        const RunConfig& config) {
  if (bound < 0 || bound > kMaxOracleBound) {
    throw Error(ErrorKind::kInvalidArgument,
                "--bound must be in 0.." + std::to_string(kMaxOracleBound));
  }
  Alphabet alphabet = ResolveAlphabet(config, {lhs_text, rhs_text});
  Term lhs = ParseTerm(lhs_text, alphabet, TermKind::kTopKat);
  Term rhs = ParseTerm(rhs_text, alphabet, TermKind::kTopKat);
  GuardedNfa a(lhs, alphabet), b(rhs, alphabet);
  std::optional<GuardedString> diff = GuardedNfa::FirstDifference(a, b, bound);
  Verdict engine = DecideEqual(lhs, rhs, alphabet);
  // The engine and the oracle agree when neither sees a difference, or when
  // the engine's witness is one-sided and the oracle finds a difference
  // whenever the witness is within the bound.
  bool consistent;
  if (engine.equal) {
    consistent = !diff;
  } else {
    const GuardedString& w = *engine.witness;
    bool one_sided = a.Accepts(w) != b.Accepts(w) &&
                     a.Accepts(w) == (engine.accepted_by == Side::kLeft);
    consistent = one_sided &&
                 (diff || w.length() > static_cast<std::size_t>(bound));
  }
  CommandResult r;
  r.exit_code = !consistent ? kExitError : diff ? kExitRefuted : kExitHolds;
  if (config.format == OutputFormat::kJson) {
    json j = Header("oracle");
    j["alphabet"] = AlphabetJson(alphabet);
    j["lhs"] = PrintTerm(lhs);
    j["rhs"] = PrintTerm(rhs);
    j["bound"] = bound;
    j["bounded_equal"] = !diff;
    if (diff) {
      j["difference"] = FormatGuardedString(*diff, alphabet);
      j["difference_length"] = diff->length();
      j["accepted_by"] = a.Accepts(*diff) ? "left" : "right";
    }
    j["engine_equal"] = engine.equal;
    if (!engine.equal) {
      j["engine_witness"] = FormatGuardedString(*engine.witness, alphabet);
    }
    j["consistent"] = consistent;
    r.out = Dump(j);
    return r;
  }
  std::ostringstream out;
  out << "bound " << bound << ": ";
  if (diff) {
    out << "languages differ; shortest difference "
        << FormatGuardedString(*diff, alphabet) << " (length " << diff->length()
        << ", accepted only by the " << (a.Accepts(*diff) ? "left" : "right")
        << " term)\n";
  } else {
    out << "languages agree on all strings with at most " << bound
        << " actions\n";
  }
  out << "engine: " << DescribeVerdict(engine, alphabet) << "\n";
  out << (consistent ? "consistent" : "INCONSISTENT") << "\n";
  r.out = out.str();
  if (!consistent) r.err = "error: engine and bounded oracle disagree\n";
  return r;
}

CommandResult CmdModelSearch(const std::string& claim_text,
                             const SearchOptions& options,
                             const RunConfig& config) {
  Alphabet alphabet = ResolveAlphabet(config, {claim_text});
  Claim claim = ParseClaim(claim_text, alphabet);
  SearchConfig search;
  search.mode = options.random ? SearchConfig::Mode::kRandom
                               : SearchConfig::Mode::kExhaustive;
  search.min_states = config.min_states;
  search.max_states = config.max_states;
  search.models = config.models;
  search.density = config.density;
  search.seed = config.seed;
  search.jobs = config.jobs;
  search.top = options.explicit_top ? TopSpec::Kind::kExplicit
                                    : TopSpec::Kind::kFull;
  SearchResult result = FindCountermodel(claim, search);
  CommandResult r;
  r.exit_code = result.countermodel ? kExitRefuted : kExitHolds;
  std::string mode = options.random ? "random" : "exhaustive";
  std::string top = options.explicit_top ? "explicit" : "full";
  if (config.format == OutputFormat::kJson) {
    json j = Header("model-search");
    j["claim"] = claim.ToString();
    j["params"] = {{"mode", mode},
                   {"top", top},
                   {"min_states", search.min_states},
                   {"max_states", search.max_states},
                   {"seed", search.seed},
                   {"models", search.models},
                   {"density", search.density}};
    j["models_checked"] = result.models_checked;
    j["found"] = result.countermodel.has_value();
    if (result.countermodel) {
      const Countermodel& c = *result.countermodel;
      j["countermodel"] = json::parse(ModelToJson(c.model));
      j["index"] = c.index;
      j["lhs"] = {{"ok", RelJson(c.values.lhs.ok)}, {"er", RelJson(c.values.lhs.er)}};
      j["rhs"] = {{"ok", RelJson(c.values.rhs.ok)}, {"er", RelJson(c.values.rhs.er)}};
    }
    r.out = Dump(j);
    return r;
  }
  std::ostringstream out;
  out << "model-search: " << claim.ToString() << "\n";
  out << "mode " << mode << ", top " << top << ", states "
      << search.min_states << ".." << search.max_states;
  if (options.random) {
    out << ", " << search.models << " models per size, seed " << search.seed
        << ", density " << search.density;
  }
  out << "\n";
  if (!result.countermodel) {
    out << "no countermodel among " << result.models_checked << " models\n";
  } else {
    const Countermodel& c = *result.countermodel;
    out << "countermodel (" << c.states << " states, index " << c.index
        << "): " << ModelToJson(c.model) << "\n";
    bool fail = claim.lhs.ContainsFail() || claim.rhs.ContainsFail();
    auto side = [&](const char* name, const RelPair& v) {
      out << name << v.ok.ToString();
      if (fail) out << "  er: " << v.er.ToString();
      out << "\n";
    };
    side("lhs: ", c.values.lhs);
    side("rhs: ", c.values.rhs);
  }
  r.out = out.str();
  return r;
}

}  // namespace topkat::cli
