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

#include "topkat/model_json.h"

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"
#include "topkat/error.h"

namespace topkat {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, "model JSON: " + what);
}

Rel ReadPairs(const json& j, int n, const std::string& what) {
  if (!j.is_array()) Bad(what + " must be a list of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      Bad(what + " must contain [i, j] pairs");
    }
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return Rel::FromPairs(n, pairs);
}

json WritePairs(const Rel& r) {
  json out = json::array();
  for (auto [i, j] : r.Pairs()) out.push_back({i, j});
  return out;
}

RelationalModel Read(std::string_view text, const Alphabet* declared) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    Bad(e.what());
  }
  if (!doc.is_object()) Bad("top level must be an object");
  if (!doc.contains("states") || !doc["states"].is_number_integer()) {
    Bad("\"states\" must be an integer");
  }
  int n = doc["states"].get<int>();
  if (n < 1 || n > kMaxStates) {
    Bad("\"states\" must be in 1.." + std::to_string(kMaxStates));
  }
  std::map<std::string, Rel> actions;
  std::map<std::string, StateMask> tests;
  if (doc.contains("actions")) {
    if (!doc["actions"].is_object()) Bad("\"actions\" must be an object");
    for (const auto& [name, pairs] : doc["actions"].items()) {
      actions.emplace(name, ReadPairs(pairs, n, "action '" + name + "'"));
    }
  }
  if (doc.contains("tests")) {
    if (!doc["tests"].is_object()) Bad("\"tests\" must be an object");
    for (const auto& [name, states] : doc["tests"].items()) {
      if (!states.is_array()) Bad("test '" + name + "' must be a list");
      StateMask mask = 0;
      for (const json& s : states) {
        if (!s.is_number_integer() || s.get<int>() < 0 || s.get<int>() >= n) {
          Bad("test '" + name + "' lists a state outside the carrier");
        }
        mask |= StateMask{1} << s.get<int>();
      }
      tests.emplace(name, mask);
    }
  }
  TopSpec top = TopSpec::Full();
  if (doc.contains("top")) {
    const json& t = doc["top"];
    if (t.is_string()) {
      if (t.get<std::string>() != "full") Bad("\"top\" must be \"full\"");
    } else {
      top = TopSpec::Explicit(ReadPairs(t, n, "top"));
    }
  }
  Alphabet alphabet;
  if (declared != nullptr) {
    alphabet = *declared;
  } else {
    std::vector<std::string> a, b;
    for (const auto& [name, rel] : actions) a.push_back(name);
    for (const auto& [name, mask] : tests) b.push_back(name);
    alphabet = Alphabet::Create(a, b);
  }
  return RelationalModel::Create(n, alphabet, actions, tests, std::move(top));
}

}  // namespace

RelationalModel ModelFromJson(std::string_view text) {
  return Read(text, nullptr);
}

RelationalModel ModelFromJson(std::string_view text, const Alphabet& alphabet) {
  return Read(text, &alphabet);
}

std::string ModelToJson(const RelationalModel& m) {
  json doc = json::object();
  doc["states"] = m.size();
  doc["top"] = m.has_full_top() ? json("full") : WritePairs(m.top());
  json actions = json::object();
  for (std::size_t i = 0; i < m.alphabet().actions().size(); ++i) {
    actions[m.alphabet().actions()[i]] = WritePairs(m.action(static_cast<int>(i)));
  }
  json tests = json::object();
  for (std::size_t i = 0; i < m.alphabet().tests().size(); ++i) {
    json states = json::array();
    StateMask mask = m.test(static_cast<int>(i));
    for (int s = 0; s < m.size(); ++s) {
      if ((mask >> s) & 1) states.push_back(s);
    }
    tests[m.alphabet().tests()[i]] = states;
  }
  doc["actions"] = actions;
  doc["tests"] = tests;
  return doc.dump();
}

}  // namespace topkat
