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

#include "topkat/relation.h"

#include <bit>

#include "topkat/error.h"

namespace topkat {

Rel::Rel(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > kMaxStates) {
    throw Error(ErrorKind::kInvalidArgument,
                "carrier size must be in 0.." + std::to_string(kMaxStates));
  }
}

Rel Rel::Identity(int n) { return Diagonal(n, AllStates(n)); }

Rel Rel::Full(int n) {
  Rel r(n);
  for (int i = 0; i < n; ++i) r.rows_[i] = AllStates(n);
  return r;
}

Rel Rel::Diagonal(int n, StateMask mask) {
  Rel r(n);
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1) r.Set(i, i);
  }
  return r;
}

Rel Rel::FromPairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Rel r(n);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside carrier of size " + std::to_string(n));
    }
    r.Set(i, j);
  }
  return r;
}

bool Rel::IsEmpty() const {
  for (std::uint64_t row : rows_) {
    if (row != 0) return false;
  }
  return true;
}

int Rel::Count() const {
  int c = 0;
  for (std::uint64_t row : rows_) c += std::popcount(row);
  return c;
}

std::vector<std::pair<int, int>> Rel::Pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (Contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Rel Rel::Union(const Rel& other) const {
  Rel r = *this;
  for (int i = 0; i < n_; ++i) r.rows_[i] |= other.rows_[i];
  return r;
}

Rel Rel::Intersect(const Rel& other) const {
  Rel r = *this;
  for (int i = 0; i < n_; ++i) r.rows_[i] &= other.rows_[i];
  return r;
}

Rel Rel::Compose(const Rel& other) const {
  Rel r(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint64_t row = rows_[i];
    std::uint64_t acc = 0;
    while (row != 0) {
      int k = std::countr_zero(row);
      row &= row - 1;
      acc |= other.rows_[k];
    }
    r.rows_[i] = acc;
  }
  return r;
}

Rel Rel::Star() const {
  Rel r = Union(Identity(n_));
  // (R + I)^(2^k) reaches the closure after ceil(log2 n) squarings.
  while (true) {
    Rel sq = r.Compose(r);
    if (sq == r) return r;
    r = std::move(sq);
  }
}

bool Rel::SubsetOf(const Rel& other) const {
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] & ~other.rows_[i]) return false;
  }
  return true;
}

bool Rel::IsReflexive() const { return Identity(n_).SubsetOf(*this); }

bool Rel::IsTransitive() const { return Compose(*this).SubsetOf(*this); }

StateMask Rel::Codomain() const {
  StateMask m = 0;
  for (std::uint64_t row : rows_) m |= row;
  return m;
}

StateMask Rel::Domain() const {
  StateMask m = 0;
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] != 0) m |= StateMask{1} << i;
  }
  return m;
}

std::string Rel::ToString() const {
  std::string out = "{";
  bool first = true;
  for (auto [i, j] : Pairs()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out + "}";
}

std::string FormatStates(StateMask mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (!((mask >> i) & 1)) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

}  // namespace topkat
