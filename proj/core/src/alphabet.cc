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

#include "topkat/alphabet.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topkat/error.h"

namespace topkat {

int DefaultAtomCap() {
  const char* env = std::getenv("TOPKAT_ATOM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultAtomCap;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 0 || value > kMaxAtomCap) {
    throw Error(ErrorKind::kInvalidArgument,
                "TOPKAT_ATOM_CAP must be an integer in [0, " +
                    std::to_string(kMaxAtomCap) + "], got '" + env + "'");
  }
  return static_cast<int>(value);
}

bool IsReservedWord(std::string_view word) {
  return word == "top" || word == "fail" || word == "ok" || word == "er";
}

bool IsIdentifier(std::string_view word) {
  if (word.empty() || word[0] < 'a' || word[0] > 'z') return false;
  return std::all_of(word.begin() + 1, word.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

namespace {

void CheckSymbols(const std::vector<std::string>& symbols, const char* what,
                  bool allow_tau) {
  std::set<std::string_view> seen;
  for (const std::string& s : symbols) {
    bool tau = allow_tau && s == kTauAction;
    if (!tau && (!IsIdentifier(s) || IsReservedWord(s))) {
      throw Error(ErrorKind::kInvalidAlphabet,
                  std::string(what) + " symbol '" + s +
                      "' is not a valid identifier");
    }
    if (!seen.insert(s).second) {
      throw Error(ErrorKind::kInvalidAlphabet,
                  std::string("duplicate ") + what + " symbol '" + s + "'");
    }
  }
}

}  // namespace

Alphabet Alphabet::Create(std::vector<std::string> actions,
                          std::vector<std::string> tests, int atom_cap) {
  if (atom_cap < 0 || atom_cap > kMaxAtomCap) {
    throw Error(ErrorKind::kInvalidArgument,
                "atom cap out of range: " + std::to_string(atom_cap));
  }
  CheckSymbols(actions, "action", /*allow_tau=*/false);
  CheckSymbols(tests, "test", /*allow_tau=*/false);
  for (const std::string& a : actions) {
    if (std::find(tests.begin(), tests.end(), a) != tests.end()) {
      throw Error(ErrorKind::kInvalidAlphabet,
                  "symbol '" + a + "' declared as both action and test");
    }
  }
  if (static_cast<int>(tests.size()) > atom_cap) {
    throw Error(ErrorKind::kCapExceeded,
                std::to_string(tests.size()) + " tests exceed the cap of " +
                    std::to_string(atom_cap) + " (2^|tests| atoms)");
  }
  Alphabet out;
  out.actions_ = std::move(actions);
  out.tests_ = std::move(tests);
  out.atom_cap_ = atom_cap;
  return out;
}

std::optional<int> Alphabet::ActionIndex(std::string_view name) const {
  auto it = std::find(actions_.begin(), actions_.end(), name);
  if (it == actions_.end()) return std::nullopt;
  return static_cast<int>(it - actions_.begin());
}

std::optional<int> Alphabet::TestIndex(std::string_view name) const {
  auto it = std::find(tests_.begin(), tests_.end(), name);
  if (it == tests_.end()) return std::nullopt;
  return static_cast<int>(it - tests_.begin());
}

Alphabet Alphabet::WithActions(std::vector<std::string> actions) const {
  CheckSymbols(actions, "action", /*allow_tau=*/true);
  for (const std::string& a : actions) {
    if (HasTest(a)) {
      throw Error(ErrorKind::kInvalidAlphabet,
                  "symbol '" + a + "' declared as both action and test");
    }
  }
  Alphabet out = *this;
  out.actions_ = std::move(actions);
  return out;
}

std::string Alphabet::ToString() const {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ' ';
      s += v[i];
    }
    return s;
  };
  return "actions: " + join(actions_) + "\ntests: " + join(tests_);
}

}  // namespace topkat
