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

#ifndef TOPKAT_RELATION_H_
#define TOPKAT_RELATION_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/inlined_vector.h"

namespace topkat {

// Largest carrier supported: one 64-bit word per row.
inline constexpr int kMaxStates = 64;

// A set of states; bit i is state i.
using StateMask = std::uint64_t;

inline StateMask AllStates(int n) {
  return n >= 64 ? ~StateMask{0} : (StateMask{1} << n) - 1;
}

// A binary relation on {0..n-1}, stored as n rows of 64-bit words.
class Rel {
 public:
  Rel() = default;
  explicit Rel(int n);

  static Rel Empty(int n) { return Rel(n); }
  static Rel Identity(int n);
  static Rel Full(int n);
  // Sub-identity on the states of `mask`.
  static Rel Diagonal(int n, StateMask mask);
  // Throws kInvalidArgument for pairs outside the carrier.
  static Rel FromPairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return n_; }
  bool Contains(int i, int j) const { return (rows_[i] >> j) & 1; }
  void Set(int i, int j) { rows_[i] |= std::uint64_t{1} << j; }
  StateMask Row(int i) const { return rows_[i]; }
  void SetRow(int i, StateMask row) { rows_[i] = row; }

  bool IsEmpty() const;
  int Count() const;
  std::vector<std::pair<int, int>> Pairs() const;

  Rel Union(const Rel& other) const;
  Rel Intersect(const Rel& other) const;
  Rel Compose(const Rel& other) const;  // this ; other
  // Reflexive-transitive closure.
  Rel Star() const;
  bool SubsetOf(const Rel& other) const;

  bool IsReflexive() const;
  bool IsTransitive() const;

  // Column support: states with an incoming pair.
  StateMask Codomain() const;
  StateMask Domain() const;

  // "{(0,1), (1,1)}".
  std::string ToString() const;

  friend bool operator==(const Rel& a, const Rel& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Rel& a, const Rel& b) { return !(a == b); }

 private:
  int n_ = 0;
  absl::InlinedVector<std::uint64_t, 8> rows_;
};

std::string FormatStates(StateMask mask);

}  // namespace topkat

#endif  // TOPKAT_RELATION_H_
