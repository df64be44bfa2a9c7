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

#include "topkat/guarded_nfa.h"

#include <algorithm>
#include <deque>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "topkat/error.h"

namespace topkat {

GuardedNfa::GuardedNfa(const Term& t, const Alphabet& alphabet,
                       bool top_is_full)
    : alphabet_(alphabet), top_is_full_(top_is_full) {
  actions_ = alphabet.actions();
  if (std::find(actions_.begin(), actions_.end(), kTauAction) ==
      actions_.end()) {
    actions_.emplace_back(kTauAction);
  }
  num_atoms_ = static_cast<Atom>(alphabet.num_atoms());
  start_ = NewState();
  final_ = NewState();
  Build(t, start_, final_);
  words_ = (num_states() + 63) / 64;
  PrecomputeClosures();
}

int GuardedNfa::NewState() {
  silent_.emplace_back();
  moves_.emplace_back();
  return static_cast<int>(silent_.size()) - 1;
}

void GuardedNfa::AddSilent(int from, int to, std::vector<bool> atoms) {
  silent_[from].push_back({to, std::move(atoms)});
}

void GuardedNfa::AddSilentAll(int from, int to) {
  AddSilent(from, to, std::vector<bool>(num_atoms_, true));
}

int GuardedNfa::ActionIndex(const std::string& name) const {
  auto it = std::find(actions_.begin(), actions_.end(), name);
  if (it == actions_.end()) {
    throw Error(ErrorKind::kUndeclaredSymbol,
                "'" + name + "' is not an action of this automaton");
  }
  return static_cast<int>(it - actions_.begin());
}

void GuardedNfa::Build(const Term& t, int entry, int exit) {
  if (t.IsTestOnly()) {
    std::vector<bool> atoms(num_atoms_);
    bool any = false;
    for (Atom a = 0; a < num_atoms_; ++a) {
      atoms[a] = EvalTest(t, a, alphabet_);
      any = any || atoms[a];
    }
    if (any) AddSilent(entry, exit, std::move(atoms));
    return;
  }
  switch (t.op()) {
    case Term::Op::kAction:
      moves_[entry].push_back({ActionIndex(t.symbol()), exit});
      return;
    case Term::Op::kTop:
      if (!top_is_full_) {
        moves_[entry].push_back({ActionIndex(std::string(kTauAction)), exit});
        return;
      } else {
        // entry -> hub -> exit silently, and every action loops on hub.
        int hub = NewState();
        AddSilentAll(entry, hub);
        AddSilentAll(hub, exit);
        for (int a = 0; a < static_cast<int>(actions_.size()); ++a) {
          moves_[hub].push_back({a, hub});
        }
      }
      return;
    case Term::Op::kPlus:
      Build(t.lhs(), entry, exit);
      Build(t.rhs(), entry, exit);
      return;
    case Term::Op::kSeq: {
      int mid = NewState();
      Build(t.lhs(), entry, mid);
      Build(t.rhs(), mid, exit);
      return;
    }
    case Term::Op::kStar: {
      // Fresh loop state keeps the body's silent edges from leaking into
      // the surrounding context.
      int loop = NewState();
      AddSilentAll(entry, loop);
      AddSilentAll(loop, exit);
      int body_exit = NewState();
      Build(t.operand(), loop, body_exit);
      AddSilentAll(body_exit, loop);
      return;
    }
    case Term::Op::kFail:
      throw Error(ErrorKind::kUnsupported,
                  "fail has no guarded-string language; split it first");
    default:
      return;
  }
}

void GuardedNfa::PrecomputeClosures() {
  int n = num_states();
  closure_.assign(num_atoms_, std::vector<Bits>(n, Empty()));
  for (Atom a = 0; a < num_atoms_; ++a) {
    for (int q = 0; q < n; ++q) {
      Bits& reach = closure_[a][q];
      std::vector<int> stack = {q};
      reach[q / 64] |= std::uint64_t{1} << (q % 64);
      while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (const SilentEdge& e : silent_[s]) {
          if (!e.atoms[a]) continue;
          std::uint64_t bit = std::uint64_t{1} << (e.to % 64);
          if (reach[e.to / 64] & bit) continue;
          reach[e.to / 64] |= bit;
          stack.push_back(e.to);
        }
      }
    }
  }
}

GuardedNfa::Bits GuardedNfa::Closure(const Bits& states, Atom atom) const {
  Bits out = Empty();
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = states[w];
    while (word != 0) {
      int q = w * 64 + __builtin_ctzll(word);
      word &= word - 1;
      const Bits& c = closure_[atom][q];
      for (int i = 0; i < words_; ++i) out[i] |= c[i];
    }
  }
  return out;
}

GuardedNfa::Bits GuardedNfa::Step(const Bits& states, int action) const {
  Bits out = Empty();
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = states[w];
    while (word != 0) {
      int q = w * 64 + __builtin_ctzll(word);
      word &= word - 1;
      for (const ActionEdge& e : moves_[q]) {
        if (e.action == action) out[e.to / 64] |= std::uint64_t{1} << (e.to % 64);
      }
    }
  }
  return out;
}

bool GuardedNfa::Accepts(const GuardedString& w) const {
  Bits cur = Empty();
  cur[start_ / 64] |= std::uint64_t{1} << (start_ % 64);
  cur = Closure(cur, w.head);
  for (const auto& step : w.tail) {
    auto it = std::find(actions_.begin(), actions_.end(), step.action);
    if (it == actions_.end()) return false;
    cur = Closure(Step(cur, static_cast<int>(it - actions_.begin())),
                  step.atom);
  }
  return HasFinal(cur);
}

std::optional<GuardedString> GuardedNfa::FirstDifference(const GuardedNfa& a,
                                                         const GuardedNfa& b,
                                                         int max_length) {
  if (a.actions_ != b.actions_ || a.num_atoms_ != b.num_atoms_) {
    throw Error(ErrorKind::kInvalidArgument,
                "automata over different alphabets");
  }
  struct Node {
    Bits x;
    Bits y;
    int depth;
    int parent;
    Atom atom;   // atom read before `action`
    int action;  // action leading here
  };
  auto rebuild = [&](const std::vector<Node>& nodes, int index, Atom last) {
    GuardedString w;
    std::vector<std::pair<Atom, int>> letters;
    for (int i = index; nodes[i].parent >= 0; i = nodes[i].parent) {
      letters.emplace_back(nodes[i].atom, nodes[i].action);
    }
    std::reverse(letters.begin(), letters.end());
    if (letters.empty()) {
      w.head = last;
      return w;
    }
    w.head = letters[0].first;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      Atom next = i + 1 < letters.size() ? letters[i + 1].first : last;
      w.tail.push_back({a.actions_[letters[i].second], next});
    }
    return w;
  };

  std::vector<Node> nodes;
  absl::flat_hash_set<std::vector<std::uint64_t>> seen;
  auto key = [](const Bits& x, const Bits& y) {
    std::vector<std::uint64_t> k = x;
    k.insert(k.end(), y.begin(), y.end());
    return k;
  };
  Node root{a.Empty(), b.Empty(), 0, -1, 0, -1};
  root.x[a.start_ / 64] |= std::uint64_t{1} << (a.start_ % 64);
  root.y[b.start_ / 64] |= std::uint64_t{1} << (b.start_ % 64);
  seen.insert(key(root.x, root.y));
  nodes.push_back(std::move(root));
  // Breadth-first, so the first difference found is a shortest one.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Atom atom = 0; atom < a.num_atoms_; ++atom) {
      Bits cx = a.Closure(nodes[i].x, atom);
      Bits cy = b.Closure(nodes[i].y, atom);
      if (a.HasFinal(cx) != b.HasFinal(cy)) {
        return rebuild(nodes, static_cast<int>(i), atom);
      }
    }
    if (nodes[i].depth >= max_length) continue;
    for (Atom atom = 0; atom < a.num_atoms_; ++atom) {
      Bits cx = a.Closure(nodes[i].x, atom);
      Bits cy = b.Closure(nodes[i].y, atom);
      for (int act = 0; act < static_cast<int>(a.actions_.size()); ++act) {
        Bits nx = a.Step(cx, act);
        Bits ny = b.Step(cy, act);
        if (!seen.insert(key(nx, ny)).second) continue;
        nodes.push_back({std::move(nx), std::move(ny), nodes[i].depth + 1,
                         static_cast<int>(i), atom, act});
      }
    }
  }
  return std::nullopt;
}

}  // namespace topkat
