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

#ifndef TOPKAT_ERROR_H_
#define TOPKAT_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topkat {

enum class ErrorKind {
  kSyntax,
  kUndeclaredSymbol,
  kNegationOverAction,
  kStarOverTest,
  // `top` or `fail` used in a mode that does not admit it.
  kDisallowedConstant,
  kInvalidAlphabet,
  kCapExceeded,
  kInvalidArgument,
  kUnsupported,
};

std::string_view ErrorKindName(ErrorKind kind);

// The single exception type thrown by the library. Syntax errors carry the
// byte offset into the parsed text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const { return kind_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace topkat

#endif  // TOPKAT_ERROR_H_
