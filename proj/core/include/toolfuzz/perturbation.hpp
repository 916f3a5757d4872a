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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "toolfuzz/json.hpp"

namespace toolfuzz {

// The fifteen operators, in report column order.
enum class OperatorId { RD, RE, WD, SD, CO, WT, RPF, RPL, CP, AN, FK, AP, CK, UK, CF };

inline constexpr std::array<OperatorId, 15> kAllOperators = {
    OperatorId::RD,  OperatorId::RE,  OperatorId::WD, OperatorId::SD, OperatorId::CO,
    OperatorId::WT,  OperatorId::RPF, OperatorId::RPL, OperatorId::CP, OperatorId::AN,
    OperatorId::FK,  OperatorId::AP,  OperatorId::CK, OperatorId::UK, OperatorId::CF};

enum class InputSource { Document, Query, Return };

std::string_view to_string(OperatorId op);
std::string_view to_string(InputSource source);
// Accepts the column ids ("RPF") and the subscript spellings ("RP_F"),
// case-insensitively.
std::optional<OperatorId> parse_operator_id(std::string_view name);
InputSource source_of(OperatorId op);

// Everything needed to replay one operator application.
struct PerturbationRecord {
  std::string op;
  std::uint64_t seed = 0;
  std::string target;            // tool name, "query", or "return"
  Json details = Json::object();  // permutation, pair, donors, key paths, ...
  bool skipped = false;
  std::string skip_reason;

  Json to_json() const;
  static PerturbationRecord from_json(const Json& j);
};

template <typename T>
struct Perturbed {
  T value;
  PerturbationRecord record;
};

}  // namespace toolfuzz
