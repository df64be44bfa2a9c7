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

#ifndef TOPKAT_LANGUAGE_H_
#define TOPKAT_LANGUAGE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "topkat/alphabet.h"
#include "topkat/atoms.h"
#include "topkat/term.h"

namespace topkat {

// How `top` is read by LanguageUpTo.
enum class TopSemantics {
  // `top` is the primitive action tau: the strings  a top b.
  kTauAction,
  // `top` is every guarded string over the actions (tau included). This is
  // the standard valuation of the greatest element.
  kFull,
};

namespace internal {

// A set of packed guarded-string keys. When every key of the shape fits in
// a small table the set is a bitmap with one layer per length; otherwise it
// is a hash set.
class KeySet {
 public:
  KeySet() = default;
  KeySet(int atom_bits, int block_bits, int max_length);

  bool insert(std::uint64_t key);
  bool contains(std::uint64_t key) const;
  std::size_t size() const { return dense_ ? count_ : hashed_.size(); }
  bool empty() const { return size() == 0; }
  void Merge(const KeySet& other);
  KeySet EmptyLike() const;

  template <typename F>
  void ForEach(F&& f) const {
    if (!dense_) {
      for (std::uint64_t k : hashed_) f(k);
      return;
    }
    for (std::size_t len = 0; len + 1 < offsets_.size(); ++len) {
      for (std::size_t w = offsets_[len]; w < offsets_[len + 1]; ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          std::uint64_t body = (w - offsets_[len]) * 64 + b;
          f(body | (static_cast<std::uint64_t>(len) << 60));
        }
      }
    }
  }

  friend bool operator==(const KeySet& a, const KeySet& b);

 private:
  std::size_t Index(std::uint64_t key) const;

  bool dense_ = false;
  int atom_bits_ = 0;
  int block_bits_ = 0;
  int max_length_ = 0;
  std::vector<std::size_t> offsets_;  // first word of each length layer
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
  absl::flat_hash_set<std::uint64_t> hashed_;
};

}  // namespace internal

// A finite set of guarded strings of bounded length over a fixed alphabet.
// Strings are packed into 64-bit keys so set operations are exact and fast.
class GuardedLanguage {
 public:
  // Actions are `alphabet.actions()` followed by tau when it is not already
  // listed. Throws kCapExceeded when strings of `max_length` do not fit.
  GuardedLanguage(const Alphabet& alphabet, int max_length);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& actions() const { return actions_; }
  int max_length() const { return max_length_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  bool Contains(const GuardedString& w) const;
  void Insert(const GuardedString& w);
  std::vector<GuardedString> Strings() const;  // sorted

  // Shortest, then smallest, string in exactly one of the two languages.
  std::optional<GuardedString> FirstDifference(
      const GuardedLanguage& other) const;

  friend bool operator==(const GuardedLanguage& a, const GuardedLanguage& b) {
    return a.keys_ == b.keys_;
  }

 private:
  friend class LanguageBuilder;
  friend GuardedLanguage LanguageUpTo(const Term&, const Alphabet&, int,
                                      TopSemantics);

  int Length(std::uint64_t key) const { return static_cast<int>(key >> 60); }
  Atom LastAtom(std::uint64_t key) const;
  Atom HeadAtom(std::uint64_t key) const {
    return static_cast<Atom>(key & atom_mask_);
  }
  std::uint64_t Encode(const GuardedString& w) const;
  GuardedString Decode(std::uint64_t key) const;

  Alphabet alphabet_;
  std::vector<std::string> actions_;
  int max_length_;
  int atom_bits_;
  int action_bits_;
  std::uint64_t atom_mask_;
  internal::KeySet keys_;
};

// Every string of the standard interpretation of `t` with at most
// `max_length` actions. `t` may not contain fail.
GuardedLanguage LanguageUpTo(const Term& t, const Alphabet& alphabet,
                             int max_length,
                             TopSemantics top = TopSemantics::kTauAction);

}  // namespace topkat

#endif  // TOPKAT_LANGUAGE_H_
