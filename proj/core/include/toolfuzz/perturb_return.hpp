// Copyright 2026 The toolfuzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "toolfuzz/corpus.hpp"
#include "toolfuzz/perturbation.hpp"

namespace toolfuzz::return_ops {

// Object keys and array indices from the root to one location.
using KeyPath = std::vector<std::variant<std::string, std::size_t>>;

Json to_json(const KeyPath& path);

// Follows `path` from `root`; nullptr if any step does not resolve.
const Json* resolve(const Json& root, const KeyPath& path);

struct ReturnOpOptions {
  // Transform keys at every depth. When false, only the outermost objects
  // (the root, or objects directly inside a root array) are touched.
  bool recursive = true;
  // AP: keys whose values count as IDs (full match).
  std::string id_key_pattern = "(?:[Ii][Dd])|.*_id|.*Id|.*ID";
  // AP: also prefix UUID-shaped string values under non-ID keys.
  bool detect_id_values = false;
};

// Splits a key on '_', '-', lower->upper humps, acronym ends ("HTTPServer"
// -> HTTP, Server) and letter<->digit boundaries.
std::vector<std::string> tokenize_key(std::string_view key);
std::string camel_case(std::string_view key);
std::string snake_case(std::string_view key);

// Keys become Object_1..Object_n per object, in document order.
Perturbed<ToolReturn> fk(const ToolReturn& ret, const ReturnOpOptions& options = {});
// ID-type values become "ID_" + stringified value.
Perturbed<ToolReturn> ap(const ToolReturn& ret, const ReturnOpOptions& options = {});
Perturbed<ToolReturn> ck(const ToolReturn& ret, const ReturnOpOptions& options = {});
Perturbed<ToolReturn> uk(const ToolReturn& ret, const ReturnOpOptions& options = {});
// Raw text: compact serialization minus its last code point, plus "...".
Perturbed<ToolReturn> cf(const ToolReturn& ret);

// Dispatches on a return operator id.
Perturbed<ToolReturn> apply(OperatorId op, const ToolReturn& ret, const ReturnOpOptions& options = {});

}  // namespace toolfuzz::return_ops
