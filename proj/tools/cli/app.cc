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

#include "cli/app.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

#include "cli/commands.h"
#include "topkat/error.h"

namespace topkat::cli {
namespace {

struct Flags {
  std::optional<std::string> actions;
  std::optional<std::string> tests;
  std::string alphabet_file;
  std::string format = "text";
};

void AddAlphabetFlags(CLI::App* cmd, Flags* f) {
  cmd->add_option("--actions", f->actions, "Comma-separated action names");
  cmd->add_option("--tests", f->tests, "Comma-separated test names");
  cmd->add_option("--alphabet", f->alphabet_file,
                  "File with lines `actions: p q` and `tests: b c`");
}

void AddCommonFlags(CLI::App* cmd, Flags* f, RunConfig* c) {
  cmd->add_option("--format", f->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", c->seed, "Random seed");
  cmd->add_option("--jobs", c->jobs, "Worker threads")
      ->check(CLI::Range(1, 256));
}

void AddModelFlags(CLI::App* cmd, RunConfig* c) {
  cmd->add_option("--models", c->models, "Random models per size");
  cmd->add_option("--density", c->density, "Random relation density")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--min-states", c->min_states, "Smallest model size")
      ->check(CLI::Range(1, 4));
  cmd->add_option("--max-states", c->max_states, "Largest model size")
      ->check(CLI::Range(1, 4));
}

RunConfig Finish(const Flags& f, RunConfig c) {
  if (!f.alphabet_file.empty()) LoadAlphabetFile(f.alphabet_file, &c);
  if (f.actions) c.actions = SplitNames(*f.actions);
  if (f.tests) c.tests = SplitNames(*f.tests);
  c.format = f.format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  return c;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Decision procedures and checkers for Kleene algebra with top "
               "and tests",
               "topkat"};
  app.set_version_flag("--version", "topkat 0.1.0");
  app.require_subcommand(1);

  Flags flags;
  RunConfig config;
  std::function<CommandResult()> run;

  std::string lhs, rhs, text, form, strategy = "equational", model_file, top;
  int bound = 6;
  int figure = 0;
  bool random = false;

  auto* equiv = app.add_subcommand("equiv", "Decide lhs = rhs");
  equiv->add_option("lhs", lhs)->required();
  equiv->add_option("rhs", rhs)->required();
  AddAlphabetFlags(equiv, &flags);
  AddCommonFlags(equiv, &flags, &config);
  equiv->callback([&] {
    run = [&] { return CmdEquiv(lhs, rhs, Finish(flags, config)); };
  });

  auto* leq = app.add_subcommand("leq", "Decide lhs <= rhs");
  leq->add_option("lhs", lhs)->required();
  leq->add_option("rhs", rhs)->required();
  AddAlphabetFlags(leq, &flags);
  AddCommonFlags(leq, &flags, &config);
  leq->callback([&] {
    run = [&] { return CmdLeq(lhs, rhs, Finish(flags, config)); };
  });

  auto* triple = app.add_subcommand("triple", "Check a Hoare or incorrectness triple");
  triple->add_option("triple", text, "[b] p [ok: c] or {b} p {c}")->required();
  triple->add_option("--form", form,
                     "F1, F2, F3, kozen, top-leq or top-top");
  triple->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"equational", "model"}));
  triple->add_option("--model", model_file, "Model JSON (model strategy)");
  AddAlphabetFlags(triple, &flags);
  AddCommonFlags(triple, &flags, &config);
  triple->callback([&] {
    run = [&] {
      TripleOptions o;
      if (!form.empty()) o.form = form;
      o.strategy =
          strategy == "model" ? Strategy::kModel : Strategy::kEquational;
      o.model_file = model_file;
      return CmdTriple(text, o, Finish(flags, config));
    };
  });

  auto* rules = app.add_subcommand("rules", "Check the rule catalog");
  rules->add_option("--figure", figure, "Only rules of figure 1, 3 or 5")
      ->check(CLI::IsMember({1, 3, 5}));
  AddCommonFlags(rules, &flags, &config);
  rules->add_option("--models", config.models, "Random models per size");
  rules->add_option("--density", config.density, "Random relation density")
      ->check(CLI::Range(0.0, 1.0));
  rules->callback([&] {
    run = [&] {
      std::optional<int> f;
      if (figure != 0) f = figure;
      return CmdRules(f, Finish(flags, config));
    };
  });

  auto* examples = app.add_subcommand("examples", "Reproduce the pinned examples");
  AddCommonFlags(examples, &flags, &config);
  examples->callback([&] {
    run = [&] { return CmdExamples(Finish(flags, config)); };
  });

  auto* oracle = app.add_subcommand(
      "oracle", "Compare guarded-string languages up to a length bound");
  oracle->add_option("lhs", lhs)->required();
  oracle->add_option("rhs", rhs)->required();
  oracle->add_option("--bound", bound, "Maximum string length")
      ->check(CLI::Range(0, kMaxOracleBound));
  AddAlphabetFlags(oracle, &flags);
  AddCommonFlags(oracle, &flags, &config);
  oracle->callback([&] {
    run = [&] { return CmdOracle(lhs, rhs, bound, Finish(flags, config)); };
  });

  auto* search = app.add_subcommand(
      "model-search", "Search relational models for a countermodel");
  search->add_option("claim", text, "lhs = rhs, lhs <= rhs or lhs >= rhs")
      ->required();
  search->add_flag("--random", random, "Random models instead of all");
  search->add_option("--top", top, "Top interpretation (random mode)")
      ->check(CLI::IsMember({"full", "explicit"}));
  AddAlphabetFlags(search, &flags);
  AddCommonFlags(search, &flags, &config);
  AddModelFlags(search, &config);
  search->callback([&] {
    run = [&] {
      SearchOptions o;
      o.random = random;
      o.explicit_top = top == "explicit";
      return CmdModelSearch(text, o, Finish(flags, config));
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "topkat: " << e.what() << "\n";
    return kExitError;
  }
  if (config.min_states > config.max_states) {
    err << "topkat: --min-states exceeds --max-states\n";
    return kExitError;
  }
  try {
    CommandResult r = run();
    out << r.out;
    err << r.err;
    return r.exit_code;
  } catch (const Error& e) {
    err << "topkat: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "topkat: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace topkat::cli
