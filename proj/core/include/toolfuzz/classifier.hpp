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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toolfuzz/corpus.hpp"
#include "toolfuzz/json.hpp"

namespace toolfuzz {

inline constexpr std::string_view kClassifierVersion = "classifier-v1";

// Report row order.
enum class FailureCategory {
  TaskDeviation,
  SpecificationMismatch,
  HallucinationName,
  MissingInformation,
  RedundantInformation,
};

inline constexpr std::size_t kCategoryCount = 5;
inline constexpr std::array<FailureCategory, kCategoryCount> kAllCategories = {
    FailureCategory::TaskDeviation, FailureCategory::SpecificationMismatch,
    FailureCategory::HallucinationName, FailureCategory::MissingInformation,
    FailureCategory::RedundantInformation};

std::string_view to_string(FailureCategory c);    // "task_deviation"
std::string_view short_name(FailureCategory c);   // "TD"
std::string_view display_name(FailureCategory c); // "Task Deviation"
std::optional<FailureCategory> parse_category(std::string_view name);

struct ObservedInvocation {
  std::string tool_name;
  Json arguments = Json::object();
  std::string raw_text;
  // Set when raw_text could not be parsed into `arguments`.
  std::optional<std::string> parse_error;

  Json to_json() const;
  static ObservedInvocation from_json(const Json& j);
};

// Best-effort: malformed argument text yields empty arguments plus parse_error.
ObservedInvocation parse_invocation(std::string tool_name, std::string raw_arguments);

struct Evidence {
  std::string param_name;
  Json observed;  // null when absent
  Json expected;  // null when absent
  std::string rule;
  std::optional<double> rouge;

  Json to_json() const;
  static Evidence from_json(const Json& j);
};

struct DetectorResult {
  bool flag = false;
  std::vector<Evidence> evidence;
  std::optional<double> rouge;  // mean over evidence scores, when any
};

struct FailureLabel {
  std::string tool_name;
  std::optional<std::size_t> observed_index;
  std::optional<std::size_t> oracle_index;
  // Counted labels decide case_pass and feed the metrics; retries and calls
  // to tools outside the oracle are kept for audit only.
  bool counted = true;
  std::array<bool, kCategoryCount> flags{};
  std::array<std::vector<Evidence>, kCategoryCount> evidence;
  std::optional<double> rouge_td;
  std::optional<double> rouge_sm;
  std::vector<std::string> notes;

  bool has(FailureCategory c) const { return flags[static_cast<std::size_t>(c)]; }
  const std::vector<Evidence>& evidence_for(FailureCategory c) const {
    return evidence[static_cast<std::size_t>(c)];
  }
  bool pass() const;
  void merge(FailureCategory c, DetectorResult result);

  Json to_json() const;
  static FailureLabel from_json(const Json& j);
};

DetectorResult detect_hallucination_name(const ObservedInvocation& obs, const ToolDocument& doc);
DetectorResult detect_missing(const ObservedInvocation& obs, const OracleInvocation& oracle,
                              const ToolDocument& doc);
DetectorResult detect_redundant(const ObservedInvocation& obs, const OracleInvocation& oracle,
                                const ToolDocument& doc);
// `oracle`, when given, supplies the reference text for rouge_sm.
DetectorResult detect_spec_mismatch(const ObservedInvocation& obs, const ToolDocument& doc,
                                    const OracleInvocation* oracle = nullptr);
DetectorResult detect_task_deviation(const ObservedInvocation& obs, const OracleInvocation& oracle);

// Runs all five detectors. Throws ToolMismatch when the three tool names differ.
FailureLabel classify_invocation(const ObservedInvocation& obs, const OracleInvocation& oracle,
                                 const ToolDocument& doc);

struct TrajectoryClassification {
  std::vector<FailureLabel> labels;
  bool case_pass = false;

  Json to_json() const;
  static TrajectoryClassification from_json(const Json& j);
};

// Aligns the k-th oracle call of a tool with the k-th observed call of that
// tool. Unattempted oracle calls produce a counted Missing Information label.
TrajectoryClassification classify_trajectory(std::span<const ObservedInvocation> trajectory,
                                             std::span<const OracleInvocation> oracle,
                                             std::span<const ToolDocument> tools);

}  // namespace toolfuzz
