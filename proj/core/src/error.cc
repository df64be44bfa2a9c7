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

#include "topkat/error.h"

#include <string>

namespace topkat {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
      return "syntax error";
    case ErrorKind::kUndeclaredSymbol:
      return "undeclared symbol";
    case ErrorKind::kNegationOverAction:
      return "negation over non-test subterm";
    case ErrorKind::kStarOverTest:
      return "star over test";
    case ErrorKind::kDisallowedConstant:
      return "constant not allowed in this mode";
    case ErrorKind::kInvalidAlphabet:
      return "invalid alphabet";
    case ErrorKind::kCapExceeded:
      return "cap exceeded";
    case ErrorKind::kInvalidArgument:
      return "invalid argument";
    case ErrorKind::kUnsupported:
      return "unsupported";
  }
  return "error";
}

namespace {

std::string Decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> position) {
  std::string out(ErrorKindName(kind));
  if (position.has_value()) {
    out += " at offset " + std::to_string(*position);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(Decorate(kind, message, position)),
      kind_(kind),
      position_(position) {}

}  // namespace topkat
