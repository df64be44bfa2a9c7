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

#ifndef TOPKAT_ALPHABET_H_
#define TOPKAT_ALPHABET_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topkat {

// Action symbol standing for `top` once the reduction has turned it into a
// primitive. Spelled like the reserved word so witnesses read naturally; it
// can never collide with a user action because `top` is reserved.
inline constexpr std::string_view kTauAction = "top";

// Default bound on the number of test symbols. Atoms are enumerated eagerly,
// so there are 2^|tests| of them. Overridden by the TOPKAT_ATOM_CAP
// environment variable.
inline constexpr int kDefaultAtomCap = 16;
// Atoms are packed into 32-bit words.
inline constexpr int kMaxAtomCap = 30;

int DefaultAtomCap();

bool IsReservedWord(std::string_view word);
bool IsIdentifier(std::string_view word);

// An action alphabet K and a disjoint test alphabet B, both ordered.
class Alphabet {
 public:
  Alphabet() = default;

  // Validates identifiers, disjointness, duplicates and the test cap.
  static Alphabet Create(std::vector<std::string> actions,
                         std::vector<std::string> tests,
                         int atom_cap = DefaultAtomCap());

  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<std::string>& tests() const { return tests_; }
  int atom_cap() const { return atom_cap_; }
  int num_atoms() const { return 1 << tests_.size(); }

  std::optional<int> ActionIndex(std::string_view name) const;
  std::optional<int> TestIndex(std::string_view name) const;
  bool HasAction(std::string_view name) const {
    return ActionIndex(name).has_value();
  }
  bool HasTest(std::string_view name) const {
    return TestIndex(name).has_value();
  }

  // Same tests, action set replaced. `top` (the reduction's primitive) is
  // accepted here and nowhere else.
  Alphabet WithActions(std::vector<std::string> actions) const;

  std::string ToString() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> actions_;
  std::vector<std::string> tests_;
  int atom_cap_ = kDefaultAtomCap;
};

}  // namespace topkat

#endif  // TOPKAT_ALPHABET_H_
