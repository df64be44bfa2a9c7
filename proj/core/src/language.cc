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

#include "topkat/language.h"

#include <algorithm>
#include <bit>
#include <optional>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "topkat/error.h"

namespace topkat {

// Key layout, low bits first: head atom, then one (action, atom) block per
// step; the length sits in the top four bits. The last atom of a string of
// length n starts at bit n * (action_bits + atom_bits), so coalescing x and
// y is an OR of x with y shifted to that offset.

namespace internal {

namespace {
constexpr std::uint64_t kBodyMask = (std::uint64_t{1} << 60) - 1;
constexpr std::size_t kMaxDenseBits = std::size_t{1} << 24;
}  // namespace

KeySet::KeySet(int atom_bits, int block_bits, int max_length)
    : atom_bits_(atom_bits), block_bits_(block_bits), max_length_(max_length) {
  std::size_t words = 0;
  std::vector<std::size_t> offsets;
  for (int len = 0; len <= max_length; ++len) {
    int bits = atom_bits + len * block_bits;
    if (bits > 24) return;
    offsets.push_back(words);
    words += ((std::size_t{1} << bits) + 63) / 64;
    if (words * 64 > kMaxDenseBits) return;
  }
  offsets.push_back(words);
  dense_ = true;
  offsets_ = std::move(offsets);
  words_.assign(words, 0);
}

KeySet KeySet::EmptyLike() const {
  KeySet out;
  out.dense_ = dense_;
  out.atom_bits_ = atom_bits_;
  out.block_bits_ = block_bits_;
  out.max_length_ = max_length_;
  out.offsets_ = offsets_;
  if (dense_) out.words_.assign(words_.size(), 0);
  return out;
}

std::size_t KeySet::Index(std::uint64_t key) const {
  return offsets_[key >> 60] * 64 + (key & kBodyMask);
}

bool KeySet::insert(std::uint64_t key) {
  if (!dense_) return hashed_.insert(key).second;
  std::size_t i = Index(key);
  std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (words_[i / 64] & bit) return false;
  words_[i / 64] |= bit;
  ++count_;
  return true;
}

bool KeySet::contains(std::uint64_t key) const {
  if (!dense_) return hashed_.contains(key);
  if (static_cast<int>(key >> 60) > max_length_) return false;
  std::size_t i = Index(key);
  return (words_[i / 64] >> (i % 64)) & 1;
}

void KeySet::Merge(const KeySet& other) {
  if (!dense_ || !other.dense_) {
    other.ForEach([&](std::uint64_t k) { insert(k); });
    return;
  }
  count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
    count_ += std::popcount(words_[w]);
  }
}

bool operator==(const KeySet& a, const KeySet& b) {
  if (a.dense_ && b.dense_) return a.words_ == b.words_;
  if (a.size() != b.size()) return false;
  bool same = true;
  a.ForEach([&](std::uint64_t k) { same = same && b.contains(k); });
  return same;
}

}  // namespace internal

GuardedLanguage::GuardedLanguage(const Alphabet& alphabet, int max_length)
    : alphabet_(alphabet), max_length_(max_length) {
  if (max_length < 0) {
    throw Error(ErrorKind::kInvalidArgument, "length bound must be >= 0");
  }
  actions_ = alphabet.actions();
  if (std::find(actions_.begin(), actions_.end(), kTauAction) ==
      actions_.end()) {
    actions_.emplace_back(kTauAction);
  }
  atom_bits_ = static_cast<int>(alphabet.tests().size());
  action_bits_ = std::bit_width(actions_.size() - 1);
  atom_mask_ = (std::uint64_t{1} << atom_bits_) - 1;
  keys_ = internal::KeySet(atom_bits_, atom_bits_ + action_bits_, max_length);
  int bits = atom_bits_ + max_length * (atom_bits_ + action_bits_);
  if (max_length > 15 || bits > 60) {
    throw Error(ErrorKind::kCapExceeded,
                "guarded strings of length " + std::to_string(max_length) +
                    " do not fit the packed encoding");
  }
}

Atom GuardedLanguage::LastAtom(std::uint64_t key) const {
  int shift = Length(key) * (atom_bits_ + action_bits_);
  return static_cast<Atom>((key >> shift) & atom_mask_);
}

std::uint64_t GuardedLanguage::Encode(const GuardedString& w) const {
  std::uint64_t key = w.head;
  int shift = atom_bits_;
  for (const auto& step : w.tail) {
    auto it = std::find(actions_.begin(), actions_.end(), step.action);
    if (it == actions_.end()) {
      throw Error(ErrorKind::kUndeclaredSymbol,
                  "'" + step.action + "' is not an action of this language");
    }
    key |= static_cast<std::uint64_t>(it - actions_.begin()) << shift;
    shift += action_bits_;
    key |= static_cast<std::uint64_t>(step.atom) << shift;
    shift += atom_bits_;
  }
  return key | (static_cast<std::uint64_t>(w.tail.size()) << 60);
}

GuardedString GuardedLanguage::Decode(std::uint64_t key) const {
  GuardedString w;
  w.head = HeadAtom(key);
  int n = Length(key);
  int shift = atom_bits_;
  std::uint64_t action_mask = (std::uint64_t{1} << action_bits_) - 1;
  for (int i = 0; i < n; ++i) {
    GuardedString::Step step;
    step.action = actions_[(key >> shift) & action_mask];
    shift += action_bits_;
    step.atom = static_cast<Atom>((key >> shift) & atom_mask_);
    shift += atom_bits_;
    w.tail.push_back(std::move(step));
  }
  return w;
}

bool GuardedLanguage::Contains(const GuardedString& w) const {
  if (static_cast<int>(w.length()) > max_length_) return false;
  return keys_.contains(Encode(w));
}

void GuardedLanguage::Insert(const GuardedString& w) {
  if (static_cast<int>(w.length()) > max_length_) {
    throw Error(ErrorKind::kInvalidArgument, "string exceeds length bound");
  }
  keys_.insert(Encode(w));
}

std::vector<GuardedString> GuardedLanguage::Strings() const {
  std::vector<GuardedString> out;
  out.reserve(keys_.size());
  keys_.ForEach([&](std::uint64_t k) { out.push_back(Decode(k)); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return out;
}

std::optional<GuardedString> GuardedLanguage::FirstDifference(
    const GuardedLanguage& other) const {
  std::optional<GuardedString> best;
  auto consider = [&](const GuardedLanguage& from, const GuardedLanguage& to) {
    from.keys_.ForEach([&](std::uint64_t k) {
      if (to.keys_.contains(k)) return;
      GuardedString w = from.Decode(k);
      if (!best || w.length() < best->length() ||
          (w.length() == best->length() && w < *best)) {
        best = std::move(w);
      }
    });
  };
  consider(*this, other);
  consider(other, *this);
  return best;
}

class LanguageBuilder {
 public:
  using Keys = internal::KeySet;

  LanguageBuilder(const GuardedLanguage& shape, TopSemantics top)
      : shape_(shape), top_(top), empty_(shape.keys_.EmptyLike()) {
    block_ = shape.atom_bits_ + shape.action_bits_;
    num_atoms_ = Atom{1} << shape.atom_bits_;
  }

  Keys Build(const Term& t) {
    switch (t.op()) {
      case Term::Op::kZero:
      case Term::Op::kOne:
      case Term::Op::kTest:
      case Term::Op::kNot:
        return TestAtoms(t);
      case Term::Op::kPlus:
      case Term::Op::kSeq:
        if (t.IsTestOnly()) return TestAtoms(t);
        if (t.op() == Term::Op::kPlus) {
          Keys a = Build(t.lhs());
          Keys b = Build(t.rhs());
          if (a.size() < b.size()) std::swap(a, b);
          a.Merge(b);
          return a;
        }
        return Product(Build(t.lhs()), Build(t.rhs()));
      case Term::Op::kAction:
        return ActionStrings({ActionIndex(t.symbol())});
      case Term::Op::kTop:
        if (top_ == TopSemantics::kTauAction) {
          return ActionStrings({ActionIndex(std::string(kTauAction))});
        }
        return AllStrings();
      case Term::Op::kStar:
        return Star(Build(t.operand()));
      case Term::Op::kFail:
        throw Error(ErrorKind::kUnsupported,
                    "fail has no guarded-string language; split it first");
    }
    return empty_.EmptyLike();
  }

 private:
  std::uint64_t ActionIndex(const std::string& name) const {
    auto it = std::find(shape_.actions_.begin(), shape_.actions_.end(), name);
    if (it == shape_.actions_.end()) {
      throw Error(ErrorKind::kUndeclaredSymbol,
                  "'" + name + "' is not an action of this language");
    }
    return static_cast<std::uint64_t>(it - shape_.actions_.begin());
  }

  Keys TestAtoms(const Term& t) const {
    Keys out = empty_.EmptyLike();
    for (Atom a = 0; a < num_atoms_; ++a) {
      if (EvalTest(t, a, shape_.alphabet_)) out.insert(a);
    }
    return out;
  }

  Keys ActionStrings(const std::vector<std::uint64_t>& actions) const {
    Keys out = empty_.EmptyLike();
    if (shape_.max_length_ < 1) return out;
    for (Atom a = 0; a < num_atoms_; ++a) {
      for (std::uint64_t p : actions) {
        for (Atom b = 0; b < num_atoms_; ++b) {
          out.insert(a | (p << shape_.atom_bits_) |
                     (std::uint64_t{b} << block_) | (std::uint64_t{1} << 60));
        }
      }
    }
    return out;
  }

  // Every string up to the bound, enumerated directly.
  const Keys& AllStrings() const {
    if (all_) return *all_;
    std::uint64_t num_actions = shape_.actions_.size();
    Keys out = empty_.EmptyLike();
    for (int len = 0; len <= shape_.max_length_; ++len) {
      // One digit per atom and per action, least significant first.
      std::vector<std::uint64_t> digits(2 * len + 1, 0);
      for (;;) {
        std::uint64_t key = digits[0];
        int shift = shape_.atom_bits_;
        for (int i = 0; i < len; ++i) {
          key |= digits[2 * i + 1] << shift;
          shift += shape_.action_bits_;
          key |= digits[2 * i + 2] << shift;
          shift += shape_.atom_bits_;
        }
        out.insert(key | (static_cast<std::uint64_t>(len) << 60));
        std::size_t d = 0;
        for (; d < digits.size(); ++d) {
          std::uint64_t radix = d % 2 == 0 ? num_atoms_ : num_actions;
          if (++digits[d] < radix) break;
          digits[d] = 0;
        }
        if (d == digits.size()) break;
      }
    }
    all_ = std::move(out);
    return *all_;
  }

  std::uint64_t Join(std::uint64_t x, std::uint64_t y) const {
    int lx = shape_.Length(x);
    int ly = shape_.Length(y);
    std::uint64_t body_mask = (std::uint64_t{1} << 60) - 1;
    std::uint64_t body = (x & body_mask) | ((y & body_mask) << (lx * block_));
    return body | (static_cast<std::uint64_t>(lx + ly) << 60);
  }

  // Calls f on every coalesced product of x in xs and y in ys within the
  // bound. ys is bucketed by head atom and length so each x only visits
  // strings that fit.
  template <typename F>
  void ForEachJoin(const Keys& xs, const Keys& ys, F&& f) const {
    int lengths = shape_.max_length_ + 1;
    std::vector<std::vector<std::uint64_t>> buckets(num_atoms_ * lengths);
    ys.ForEach([&](std::uint64_t y) {
      buckets[shape_.HeadAtom(y) * lengths + shape_.Length(y)].push_back(y);
    });
    xs.ForEach([&](std::uint64_t x) {
      int room = shape_.max_length_ - shape_.Length(x);
      std::size_t base = shape_.LastAtom(x) * lengths;
      for (int len = 0; len <= room; ++len) {
        for (std::uint64_t y : buckets[base + len]) f(Join(x, y));
      }
    });
  }

  // Coalesced product restricted to max_length.
  Keys Product(const Keys& xs, const Keys& ys) const {
    Keys out = empty_.EmptyLike();
    ForEachJoin(xs, ys, [&](std::uint64_t k) { out.insert(k); });
    return out;
  }

  // Least fixpoint of S = atoms + S ; body, computed semi-naively: only the
  // strings found in the previous round are extended. A body with every
  // one-step string generates everything.
  Keys Star(const Keys& body) const {
    bool all_steps = shape_.max_length_ >= 1;
    for (Atom a = 0; a < num_atoms_ && all_steps; ++a) {
      for (std::uint64_t p = 0; p < shape_.actions_.size() && all_steps; ++p) {
        for (Atom b = 0; b < num_atoms_ && all_steps; ++b) {
          all_steps = body.contains(a | (p << shape_.atom_bits_) |
                                    (std::uint64_t{b} << block_) |
                                    (std::uint64_t{1} << 60));
        }
      }
    }
    if (all_steps) return AllStrings();

    Keys steps = empty_.EmptyLike();
    body.ForEach([&](std::uint64_t y) {
      if (shape_.Length(y) > 0) steps.insert(y);
    });
    Keys result = empty_.EmptyLike();
    for (Atom a = 0; a < num_atoms_; ++a) result.insert(a);
    Keys frontier = result;
    while (!frontier.empty()) {
      Keys next = empty_.EmptyLike();
      ForEachJoin(frontier, steps, [&](std::uint64_t k) {
        if (result.insert(k)) next.insert(k);
      });
      frontier = std::move(next);
    }
    return result;
  }

  const GuardedLanguage& shape_;
  TopSemantics top_;
  Keys empty_;
  int block_;
  Atom num_atoms_;
  mutable std::optional<Keys> all_;
};

GuardedLanguage LanguageUpTo(const Term& t, const Alphabet& alphabet,
                             int max_length, TopSemantics top) {
  GuardedLanguage lang(alphabet, max_length);
  LanguageBuilder builder(lang, top);
  lang.keys_ = builder.Build(t);
  return lang;
}

}  // namespace topkat
