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

#include "topkat/logic.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "topkat/error.h"

namespace topkat {
namespace {

void Expect(std::string_view text, std::size_t* pos, char c) {
  SkipSpace(text, pos);
  if (*pos >= text.size() || text[*pos] != c) {
    throw Error(ErrorKind::kSyntax, std::string("expected '") + c + "'", *pos);
  }
  ++*pos;
}

// Consumes "ok:" or "er:" if present.
ErrorCode ReadCode(std::string_view text, std::size_t* pos) {
  SkipSpace(text, pos);
  for (ErrorCode code : {ErrorCode::kOk, ErrorCode::kEr}) {
    std::string_view name = ErrorCodeName(code);
    if (text.substr(*pos, name.size()) != name) continue;
    std::size_t after = *pos + name.size();
    SkipSpace(text, &after);
    if (after < text.size() && text[after] == ':') {
      *pos = after + 1;
      return code;
    }
  }
  return ErrorCode::kOk;
}

}  // namespace

std::string Triple::ToString() const {
  if (style == TripleStyle::kHoare) {
    return "{" + PrintTerm(pre) + "} " + PrintTerm(prog) + " {" +
           PrintTerm(post) + "}";
  }
  return "[" + PrintTerm(pre) + "] " + PrintTerm(prog) + " [" +
         std::string(ErrorCodeName(code)) + ": " + PrintTerm(post) + "]";
}

Triple HoareTriple(Term pre, Term prog, Term post) {
  Triple t{std::move(pre), std::move(prog), ErrorCode::kOk, std::move(post),
           TripleStyle::kHoare};
  ValidateTriple(t);
  return t;
}

Triple IncorrectnessTriple(Term pre, Term prog, Term post, ErrorCode code) {
  Triple t{std::move(pre), std::move(prog), code, std::move(post),
           TripleStyle::kIncorrectness};
  ValidateTriple(t);
  return t;
}

void ValidateTriple(const Triple& t) {
  if (!t.pre.IsTestOnly()) {
    throw Error(ErrorKind::kInvalidArgument,
                "precondition is not a test: " + PrintTerm(t.pre));
  }
  if (!t.post.IsTestOnly()) {
    throw Error(ErrorKind::kInvalidArgument,
                "postcondition is not a test: " + PrintTerm(t.post));
  }
  if (t.style == TripleStyle::kHoare) {
    if (t.code != ErrorCode::kOk) {
      throw Error(ErrorKind::kInvalidArgument,
                  "Hoare triples have no error code");
    }
    if (t.prog.ContainsFail()) {
      throw Error(ErrorKind::kUnsupported,
                  "Hoare triples over programs with fail are not supported");
    }
  }
}

Triple ParseTriple(std::string_view text, const Alphabet& alphabet) {
  SymbolResolver resolve = AlphabetResolver(alphabet);
  std::size_t pos = 0;
  SkipSpace(text, &pos);
  if (pos >= text.size() || (text[pos] != '[' && text[pos] != '{')) {
    throw Error(ErrorKind::kSyntax, "a triple starts with '[' or '{'", pos);
  }
  bool hoare = text[pos] == '{';
  char open = hoare ? '{' : '[';
  char close = hoare ? '}' : ']';
  ++pos;
  Triple t;
  t.style = hoare ? TripleStyle::kHoare : TripleStyle::kIncorrectness;
  t.pre = ParseTermAt(text, &pos, resolve);
  Expect(text, &pos, close);
  t.prog = ParseTermAt(text, &pos, resolve);
  Expect(text, &pos, open);
  std::size_t code_pos = pos;
  t.code = ReadCode(text, &pos);
  if (hoare && pos != code_pos) {
    throw Error(ErrorKind::kSyntax, "Hoare triples have no error code",
                code_pos);
  }
  t.post = ParseTermAt(text, &pos, resolve);
  Expect(text, &pos, close);
  SkipSpace(text, &pos);
  if (pos != text.size()) {
    throw Error(ErrorKind::kSyntax, "unexpected text after triple", pos);
  }
  for (const Term* part : {&t.pre, &t.prog, &t.post}) {
    ValidateTerm(*part, alphabet, TermKind::kFailTopKat);
  }
  ValidateTriple(t);
  return t;
}

IdentifierUse ScanTripleIdentifiers(std::string_view text) {
  IdentifierUse use = ScanIdentifiers(text);
  std::size_t first = text.find_first_of("[{");
  std::size_t pre_end = text.find_first_of("]}", first);
  std::size_t post_begin = text.find_last_of("[{");
  if (first == std::string_view::npos || pre_end == std::string_view::npos ||
      post_begin == std::string_view::npos || post_begin <= pre_end) {
    return use;
  }
  std::string post(text.substr(post_begin + 1));
  for (std::string_view code : {"ok", "er"}) {
    std::size_t at = post.find(code);
    std::size_t colon = post.find(':');
    if (at != std::string::npos && colon != std::string::npos && at < colon) {
      post = post.substr(colon + 1);
    }
  }
  for (const std::string& name :
       ScanIdentifiers(text.substr(first + 1, pre_end - first - 1)).all) {
    use.negated.insert(name);
  }
  for (const std::string& name : ScanIdentifiers(post).all) {
    use.negated.insert(name);
  }
  return use;
}

std::string_view FormName(Form f) {
  switch (f) {
    case Form::kF1:
      return "F1";
    case Form::kF2:
      return "F2";
    case Form::kF3:
      return "F3";
    case Form::kKozen:
      return "kozen";
    case Form::kTopLeq:
      return "top-leq";
    case Form::kTopTop:
      return "top-top";
  }
  return "?";
}

Form ParseForm(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Form f : {Form::kF1, Form::kF2, Form::kF3, Form::kKozen, Form::kTopLeq,
                 Form::kTopTop}) {
    std::string name(FormName(f));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == name) return f;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown form '" + std::string(text) +
                  "' (expected F1, F2, F3, kozen, top-leq or top-top)");
}

TripleStyle FormStyle(Form f) {
  switch (f) {
    case Form::kF1:
    case Form::kF2:
    case Form::kF3:
      return TripleStyle::kIncorrectness;
    default:
      return TripleStyle::kHoare;
  }
}

Form DefaultForm(TripleStyle style) {
  return style == TripleStyle::kHoare ? Form::kKozen : Form::kF2;
}

Claim EncodeTriple(const Triple& t, Form form) {
  ValidateTriple(t);
  if (FormStyle(form) != t.style) {
    throw Error(ErrorKind::kInvalidArgument,
                "form " + std::string(FormName(form)) + " does not apply to " +
                    (t.style == TripleStyle::kHoare ? "Hoare" : "incorrectness") +
                    " triples");
  }
  const Term top = Term::Top();
  switch (form) {
    case Form::kKozen:
      return {Term::Seq(Term::Seq(t.pre, t.prog), Term::Not(t.post)),
              Relation::kEq, Term::Zero()};
    case Form::kTopLeq:
      return {Term::Seq(t.pre, t.prog), Relation::kLeq, Term::Seq(top, t.post)};
    case Form::kTopTop:
      return {Term::Seq(top, Term::Seq(t.pre, t.prog)), Relation::kLeq,
              Term::Seq(top, t.post)};
    default:
      break;
  }
  Term reached = Term::Seq(top, Term::Seq(t.pre, t.prog));
  if (reached.ContainsFail() || t.code == ErrorCode::kEr) {
    reached = Split(reached).component(t.code);
  }
  switch (form) {
    case Form::kF1:
      return {reached, Relation::kGeq, Term::Seq(top, t.post)};
    case Form::kF2:
      return {reached, Relation::kGeq, t.post};
    default:
      return {Term::Seq(reached, t.post), Relation::kEq, Term::Seq(top, t.post)};
  }
}

Verdict DecideClaim(const Claim& c, const Alphabet& alphabet) {
  switch (c.rel) {
    case Relation::kEq:
      return DecideEqual(c.lhs, c.rhs, alphabet);
    case Relation::kLeq:
      return DecideLeq(c.lhs, c.rhs, alphabet);
    case Relation::kGeq:
      return DecideLeq(c.rhs, c.lhs, alphabet);
  }
  return {};
}

TripleVerdict CheckTripleEquational(const Triple& t, Form form,
                                    const Alphabet& alphabet) {
  TripleVerdict out;
  out.encoding = EncodeTriple(t, form);
  out.verdict = DecideClaim(out.encoding, alphabet);
  out.valid = out.verdict.equal;
  return out;
}

bool HoldsSemantically(const RelationalModel& m, const Triple& t) {
  return CompiledTriple(t, m.alphabet()).Holds(m);
}

CompiledTriple::CompiledTriple(const Triple& t, const Alphabet& alphabet)
    : style_(t.style),
      code_(t.code),
      run_((ValidateTriple(t), Term::Seq(t.pre, t.prog)), alphabet),
      post_(t.post, alphabet) {}

StateMask CompiledTriple::Reached(const RelationalModel& m) const {
  return run_.Eval(m).component(code_).Codomain();
}

bool CompiledTriple::Holds(const RelationalModel& m) const {
  StateMask reached = Reached(m);
  StateMask post = post_.EvalTestSet(m);
  if (style_ == TripleStyle::kHoare) return (reached & ~post) == 0;
  return (post & ~reached) == 0;
}

}  // namespace topkat
