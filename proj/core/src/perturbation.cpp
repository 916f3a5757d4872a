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

#include "toolfuzz/perturbation.hpp"

#include <algorithm>
#include <cctype>

namespace toolfuzz {

std::string_view to_string(OperatorId op) {
  switch (op) {
    case OperatorId::RD: return "RD";
    case OperatorId::RE: return "RE";
    case OperatorId::WD: return "WD";
    case OperatorId::SD: return "SD";
    case OperatorId::CO: return "CO";
    case OperatorId::WT: return "WT";
    case OperatorId::RPF: return "RPF";
    case OperatorId::RPL: return "RPL";
    case OperatorId::CP: return "CP";
    case OperatorId::AN: return "AN";
    case OperatorId::FK: return "FK";
    case OperatorId::AP: return "AP";
    case OperatorId::CK: return "CK";
    case OperatorId::UK: return "UK";
    case OperatorId::CF: return "CF";
  }
  return "?";
}

std::string_view to_string(InputSource source) {
  switch (source) {
    case InputSource::Document: return "document";
    case InputSource::Query: return "query";
    case InputSource::Return: return "return";
  }
  return "?";
}

std::optional<OperatorId> parse_operator_id(std::string_view name) {
  std::string norm;
  for (char c : name) {
    if (c == '_') continue;
    norm.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (OperatorId op : kAllOperators) {
    if (to_string(op) == norm) return op;
  }
  return std::nullopt;
}

InputSource source_of(OperatorId op) {
  switch (op) {
    case OperatorId::RD:
    case OperatorId::RE:
    case OperatorId::WD:
    case OperatorId::SD:
    case OperatorId::CO:
    case OperatorId::WT:
      return InputSource::Document;
    case OperatorId::RPF:
    case OperatorId::RPL:
    case OperatorId::CP:
    case OperatorId::AN:
      return InputSource::Query;
    default:
      return InputSource::Return;
  }
}

Json PerturbationRecord::to_json() const {
  Json j = Json::object();
  j["operator"] = op;
  j["seed"] = seed;
  j["target"] = target;
  j["details"] = details;
  if (skipped) {
    j["skipped"] = true;
    j["skip_reason"] = skip_reason;
  }
  return j;
}

PerturbationRecord PerturbationRecord::from_json(const Json& j) {
  PerturbationRecord r;
  r.op = j.value("operator", "");
  r.seed = j.value("seed", std::uint64_t{0});
  r.target = j.value("target", "");
  r.details = j.value("details", Json::object());
  r.skipped = j.value("skipped", false);
  r.skip_reason = j.value("skip_reason", "");
  return r;
}

}  // namespace toolfuzz
