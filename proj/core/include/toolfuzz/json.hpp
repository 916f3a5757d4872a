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

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace toolfuzz {

// Insertion-ordered JSON. Key order matters for tool returns (FK numbers keys
// in document order) and for round-tripping corpora.
using Json = nlohmann::ordered_json;

// Recursively sorts object keys and turns integral floats into integers, so
// that 5 and 5.0 (and {"a":1,"b":2} vs {"b":2,"a":1}) canonicalize the same.
Json canonicalize(const Json& value);

// Compact, sorted-key serialization of canonicalize(value).
std::string canonical_dump(const Json& value);

bool canonical_equal(const Json& a, const Json& b);

// FNV-1a 64-bit.
std::uint64_t fnv1a64(std::string_view bytes);

// 16 lowercase hex digits.
std::string hex64(std::uint64_t value);

// Hash of canonical_dump(arguments); the lookup key for scripted returns.
std::string canonical_args_hash(const Json& arguments);

// A string value's text as-is; anything else as its compact serialization.
std::string stringify(const Json& value);

}  // namespace toolfuzz
