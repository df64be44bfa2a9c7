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

#include "topkat/engine.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/container/inlined_vector.h"
#include "topkat/error.h"

namespace topkat {

namespace {

Term ReduceWith(const Term& t, const Term& replacement) {
  switch (t.op()) {
    case Term::Op::kTop:
      return replacement;
    case Term::Op::kFail:
      throw Error(ErrorKind::kUnsupported,
                  "fail cannot be reduced; split the term first");
    case Term::Op::kPlus:
      if (!t.ContainsTop()) return t;
      return Term::Plus(ReduceWith(t.lhs(), replacement),
                        ReduceWith(t.rhs(), replacement));
    case Term::Op::kSeq:
      if (!t.ContainsTop()) return t;
      return Term::Seq(ReduceWith(t.lhs(), replacement),
                       ReduceWith(t.rhs(), replacement));
    case Term::Op::kStar:
      if (!t.ContainsTop()) return t;
      return Term::Star(ReduceWith(t.operand(), replacement));
    default:
      return t;
  }
}

}  // namespace

ReducedTerm ReduceTop(const Term& t, const std::set<std::string>& joint_actions) {
  if (t.ContainsFail()) {
    throw Error(ErrorKind::kUnsupported,
                "fail cannot be reduced; split the term first");
  }
  if (!t.ContainsTop()) return {t, false};
  Term sum = Term::Action(std::string(kTauAction));
  if (!joint_actions.empty()) {
    sum = Term::Plus(SumOf(joint_actions), std::move(sum));
  }
  return {ReduceWith(t, Term::Star(std::move(sum))), true};
}

bool Obs(const Term& t, Atom atom, const Alphabet& alphabet) {
  switch (t.op()) {
    case Term::Op::kZero:
      return false;
    case Term::Op::kOne:
      return true;
    case Term::Op::kTest:
    case Term::Op::kNot:
      return EvalTest(t, atom, alphabet);
    case Term::Op::kAction:
      return false;
    case Term::Op::kPlus:
      return Obs(t.lhs(), atom, alphabet) || Obs(t.rhs(), atom, alphabet);
    case Term::Op::kSeq:
      return Obs(t.lhs(), atom, alphabet) && Obs(t.rhs(), atom, alphabet);
    case Term::Op::kStar:
      return true;
    case Term::Op::kTop:
    case Term::Op::kFail:
      throw Error(ErrorKind::kInvalidArgument,
                  "Obs needs a reduced term; found " + PrintTerm(t));
  }
  return false;
}

namespace {

// d;t with d's sequence spine re-associated to the right and units dropped.
Term Append(const Term& d, const Term& t) {
  if (d.op() == Term::Op::kOne) return t;
  if (t.op() == Term::Op::kOne) return d;
  if (d.op() == Term::Op::kSeq) return Term::Seq(d.lhs(), Append(d.rhs(), t));
  return Term::Seq(d, t);
}

void DeriveInto(const Term& t, Atom atom, std::string_view action,
                const Alphabet& alphabet, std::vector<Term>& out) {
  switch (t.op()) {
    case Term::Op::kAction:
      if (t.symbol() == action) out.push_back(Term::One());
      return;
    case Term::Op::kPlus:
      DeriveInto(t.lhs(), atom, action, alphabet, out);
      DeriveInto(t.rhs(), atom, action, alphabet, out);
      return;
    case Term::Op::kSeq: {
      std::vector<Term> left;
      DeriveInto(t.lhs(), atom, action, alphabet, left);
      for (const Term& d : left) out.push_back(Append(d, t.rhs()));
      if (Obs(t.lhs(), atom, alphabet)) {
        DeriveInto(t.rhs(), atom, action, alphabet, out);
      }
      return;
    }
    case Term::Op::kStar: {
      std::vector<Term> inner;
      DeriveInto(t.operand(), atom, action, alphabet, inner);
      for (const Term& d : inner) out.push_back(Append(d, t));
      return;
    }
    case Term::Op::kTop:
    case Term::Op::kFail:
      throw Error(ErrorKind::kInvalidArgument,
                  "Derive needs a reduced term; found " + PrintTerm(t));
    default:
      return;
  }
}

}  // namespace

std::vector<Term> Derive(const Term& t, Atom atom, std::string_view action,
                         const Alphabet& alphabet) {
  std::vector<Term> out;
  DeriveInto(t, atom, action, alphabet, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// The derivative automaton of a pair of reduced terms, built lazily.
//
// Subterms are interned into nodes. A residual is a sequence of nodes read
// left to right (empty = 1); an automaton state is a sorted set of residual
// ids. Transitions are computed on demand and memoized.
class DerivativeAutomaton {
 public:
  DerivativeAutomaton(const Alphabet& alphabet,
                      std::vector<std::string> actions)
      : alphabet_(alphabet), actions_(std::move(actions)) {
    num_atoms_ = static_cast<Atom>(alphabet.num_atoms());
    words_ = (num_atoms_ + 63) / 64;
  }

  int num_actions() const { return static_cast<int>(actions_.size()); }
  Atom num_atoms() const { return num_atoms_; }
  const std::string& action_name(int a) const { return actions_[a]; }
  std::size_t num_states() const { return states_.size(); }

  int StateOf(const Term& t) {
    int node = Intern(t);
    return InternState({InternResidual({node})});
  }

  bool Accepts(int state, Atom atom) const {
    return (states_[state].obs[atom / 64] >> (atom % 64)) & 1;
  }

  int Next(int state, Atom atom, int action) {
    std::size_t slot =
        (static_cast<std::size_t>(atom) * actions_.size() + action);
    auto& trans = states_[state].next;
    if (trans.empty()) {
      trans.assign(static_cast<std::size_t>(num_atoms_) * actions_.size(), -1);
    }
    if (trans[slot] >= 0) return trans[slot];
    std::vector<int> members;
    // Copy: InternResidual may grow residuals_.
    std::vector<int> source = states_[state].residuals;
    for (int r : source) {
      std::vector<int> seq = residuals_[r];
      DeriveSeq(seq, 0, atom, action, members);
    }
    int next = InternState(std::move(members));
    states_[state].next[slot] = next;
    return next;
  }

 private:
  struct Node {
    Term::Op op;
    int lhs = -1;
    int rhs = -1;
    int action = -1;
    std::vector<std::uint64_t> obs;  // bit per atom
  };
  struct State {
    std::vector<int> residuals;
    std::vector<std::uint64_t> obs;
    std::vector<int> next;
  };

  bool NodeObs(int node, Atom atom) const {
    return (nodes_[node].obs[atom / 64] >> (atom % 64)) & 1;
  }

  int Intern(const Term& t) {
    auto it = node_ids_.find(t);
    if (it != node_ids_.end()) return it->second;
    Node n;
    // Test-only subterms are leaves here: they have no derivatives.
    n.op = t.IsTestOnly() ? Term::Op::kTest : t.op();
    n.obs.assign(words_, 0);
    if (t.IsTestOnly()) {
      for (Atom a = 0; a < num_atoms_; ++a) {
        if (EvalTest(t, a, alphabet_)) n.obs[a / 64] |= std::uint64_t{1} << (a % 64);
      }
    } else {
      switch (t.op()) {
        case Term::Op::kAction: {
          auto at = std::find(actions_.begin(), actions_.end(), t.symbol());
          n.action = static_cast<int>(at - actions_.begin());
          break;
        }
        case Term::Op::kPlus:
        case Term::Op::kSeq: {
          n.lhs = Intern(t.lhs());
          n.rhs = Intern(t.rhs());
          const auto& l = nodes_[n.lhs].obs;
          const auto& r = nodes_[n.rhs].obs;
          for (int w = 0; w < words_; ++w) {
            n.obs[w] = t.op() == Term::Op::kPlus ? (l[w] | r[w]) : (l[w] & r[w]);
          }
          break;
        }
        case Term::Op::kStar:
          n.lhs = Intern(t.operand());
          for (Atom a = 0; a < num_atoms_; ++a) {
            n.obs[a / 64] |= std::uint64_t{1} << (a % 64);
          }
          break;
        default:
          throw Error(ErrorKind::kInvalidArgument,
                      "unexpected " + PrintTerm(t) + " in a reduced term");
      }
    }
    nodes_.push_back(std::move(n));
    int id = static_cast<int>(nodes_.size()) - 1;
    node_ids_.emplace(t, id);
    return id;
  }

  int InternResidual(std::vector<int> seq) {
    auto [it, inserted] =
        residual_ids_.try_emplace(seq, static_cast<int>(residuals_.size()));
    if (inserted) residuals_.push_back(std::move(seq));
    return it->second;
  }

  int InternState(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto [it, inserted] =
        state_ids_.try_emplace(members, static_cast<int>(states_.size()));
    if (inserted) {
      State s;
      s.obs.assign(words_, 0);
      for (int r : members) {
        for (Atom a = 0; a < num_atoms_; ++a) {
          if (SeqObs(residuals_[r], 0, a)) {
            s.obs[a / 64] |= std::uint64_t{1} << (a % 64);
          }
        }
      }
      s.residuals = std::move(members);
      states_.push_back(std::move(s));
    }
    return it->second;
  }

  bool SeqObs(const std::vector<int>& seq, std::size_t from, Atom atom) const {
    for (std::size_t i = from; i < seq.size(); ++i) {
      if (!NodeObs(seq[i], atom)) return false;
    }
    return true;
  }

  // Appends to `out` the residual ids of  seq[from..]  by (atom, action).
  void DeriveSeq(const std::vector<int>& seq, std::size_t from, Atom atom,
                 int action, std::vector<int>& out) {
    if (from >= seq.size()) return;
    std::vector<std::vector<int>> heads;
    DeriveNode(seq[from], atom, action, heads);
    for (auto& h : heads) {
      h.insert(h.end(), seq.begin() + from + 1, seq.end());
      out.push_back(InternResidual(std::move(h)));
    }
    if (NodeObs(seq[from], atom)) DeriveSeq(seq, from + 1, atom, action, out);
  }

  void DeriveNode(int id, Atom atom, int action,
                  std::vector<std::vector<int>>& out) {
    const Node& n = nodes_[id];
    switch (n.op) {
      case Term::Op::kAction:
        if (n.action == action) out.emplace_back();
        return;
      case Term::Op::kPlus: {
        int l = n.lhs, r = n.rhs;
        DeriveNode(l, atom, action, out);
        DeriveNode(r, atom, action, out);
        return;
      }
      case Term::Op::kSeq: {
        int l = n.lhs, r = n.rhs;
        std::size_t first = out.size();
        DeriveNode(l, atom, action, out);
        for (std::size_t i = first; i < out.size(); ++i) out[i].push_back(r);
        if (NodeObs(l, atom)) DeriveNode(r, atom, action, out);
        return;
      }
      case Term::Op::kStar: {
        int body = n.lhs;
        std::size_t first = out.size();
        DeriveNode(body, atom, action, out);
        for (std::size_t i = first; i < out.size(); ++i) out[i].push_back(id);
        return;
      }
      default:
        return;
    }
  }

  const Alphabet& alphabet_;
  std::vector<std::string> actions_;
  Atom num_atoms_;
  int words_;
  std::vector<Node> nodes_;
  absl::flat_hash_map<Term, int, TermHash> node_ids_;
  std::vector<std::vector<int>> residuals_;
  absl::flat_hash_map<std::vector<int>, int> residual_ids_;
  std::vector<State> states_;
  absl::flat_hash_map<std::vector<int>, int> state_ids_;
};

class UnionFind {
 public:
  int Find(int x) {
    Grow(x);
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  void Grow(int x) {
    while (static_cast<int>(parent_.size()) <= x) {
      parent_.push_back(static_cast<int>(parent_.size()));
    }
  }
  std::vector<int> parent_;
};

}  // namespace

Verdict DecideEqual(const Term& t1, const Term& t2, const Alphabet& alphabet) {
  ValidateTerm(t1, alphabet, TermKind::kTopKat);
  ValidateTerm(t2, alphabet, TermKind::kTopKat);
  EnumerateAtoms(alphabet);  // enforces the atom cap

  Primitives p1 = OccurringPrimitives(t1);
  Primitives p2 = OccurringPrimitives(t2);
  std::set<std::string> joint = p1.actions;
  joint.insert(p2.actions.begin(), p2.actions.end());
  ReducedTerm r1 = ReduceTop(t1, joint);
  ReducedTerm r2 = ReduceTop(t2, joint);

  std::vector<std::string> actions(joint.begin(), joint.end());
  if (r1.original_had_top || r2.original_had_top) {
    actions.emplace_back(kTauAction);
  }
  Alphabet extended = alphabet.WithActions(actions);
  DerivativeAutomaton automaton(extended, actions);

  struct Item {
    int x;
    int y;
    int parent;
    Atom atom;
    int action;
  };
  std::vector<Item> items;
  items.push_back({automaton.StateOf(r1.term), automaton.StateOf(r2.term), -1,
                   0, -1});
  UnionFind classes;
  Verdict verdict;
  verdict.stats.letters =
      static_cast<std::size_t>(automaton.num_atoms()) * actions.size();

  // Breadth-first so the witness is a shortest distinguishing string.
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item item = items[i];
    if (classes.Find(item.x) == classes.Find(item.y)) continue;
    for (Atom atom = 0; atom < automaton.num_atoms(); ++atom) {
      bool left = automaton.Accepts(item.x, atom);
      if (left == automaton.Accepts(item.y, atom)) continue;
      std::vector<std::pair<Atom, int>> letters;
      for (int j = static_cast<int>(i); items[j].parent >= 0;
           j = items[j].parent) {
        letters.emplace_back(items[j].atom, items[j].action);
      }
      std::reverse(letters.begin(), letters.end());
      GuardedString w;
      w.head = letters.empty() ? atom : letters[0].first;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        Atom next = k + 1 < letters.size() ? letters[k + 1].first : atom;
        w.tail.push_back({automaton.action_name(letters[k].second), next});
      }
      verdict.equal = false;
      verdict.witness = std::move(w);
      verdict.accepted_by = left ? Side::kLeft : Side::kRight;
      verdict.stats.automaton_states = automaton.num_states();
      return verdict;
    }
    classes.Union(item.x, item.y);
    ++verdict.stats.merged_pairs;
    for (Atom atom = 0; atom < automaton.num_atoms(); ++atom) {
      for (int a = 0; a < automaton.num_actions(); ++a) {
        items.push_back({automaton.Next(item.x, atom, a),
                         automaton.Next(item.y, atom, a), static_cast<int>(i),
                         atom, a});
      }
    }
  }
  verdict.stats.automaton_states = automaton.num_states();
  return verdict;
}

Verdict DecideLeq(const Term& t1, const Term& t2, const Alphabet& alphabet) {
  return DecideEqual(Term::Plus(t1, t2), t2, alphabet);
}

std::string DescribeVerdict(const Verdict& v, const Alphabet& alphabet) {
  if (v.equal) return "equal";
  return "not equal; witness " + FormatGuardedString(*v.witness, alphabet) +
         " is accepted only by the " +
         (v.accepted_by == Side::kLeft ? "left" : "right") + " term";
}

}  // namespace topkat
