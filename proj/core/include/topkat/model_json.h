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

#ifndef TOPKAT_MODEL_JSON_H_
#define TOPKAT_MODEL_JSON_H_

#include <string>
#include <string_view>

#include "topkat/alphabet.h"
#include "topkat/relational_model.h"

namespace topkat {

// {"states": n, "top": "full" | [[i,j],...],
//  "actions": {"p": [[i,j],...]}, "tests": {"b": [i,...]}}
//
// Without an alphabet, the model's alphabet is the sorted action and test
// names of the document. With one, the document may only interpret declared
// symbols, and undeclared ones are missing (empty).
RelationalModel ModelFromJson(std::string_view text);
RelationalModel ModelFromJson(std::string_view text, const Alphabet& alphabet);

// Compact single-line JSON in the format above; keys are sorted.
std::string ModelToJson(const RelationalModel& m);

}  // namespace topkat

#endif  // TOPKAT_MODEL_JSON_H_
