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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toolfuzz/agent.hpp"
#include "toolfuzz/campaign.hpp"
#include "toolfuzz/classifier.hpp"
#include "toolfuzz/json.hpp"

namespace toolfuzz {

inline constexpr double kRougeThreshold = 0.8;

// One classified enhanced trajectory.
struct CaseOutcome {
  std::string op;
  std::string case_id;
  std::uint64_t seed = 0;
  TrajectoryStatus status = TrajectoryStatus::Completed;
  bool perturbed = true;
  bool case_pass = false;
  std::vector<FailureLabel> labels;

  // Enters N_total: the operator perturbed something and the agent ran
  // (step-limit runs count as failures; skips and transport errors do not).
  bool counts() const;

  static CaseOutcome from_labels_event(const Json& event);
};

struct CampaignResult {
  std::optional<CampaignMetadata> metadata;
  std::vector<CaseOutcome> outcomes;  // log order

  // Uses the newest labels event of the current classifier version per
  // (operator, case, seed).
  static CampaignResult from_log(std::span<const Json> events);

  std::vector<CaseOutcome> for_operator(std::string_view op) const;
};

// hits / total as an exact fraction (failures, or scores above a threshold).
struct Rate {
  std::size_t hits = 0;
  std::size_t total = 0;

  std::optional<double> value() const;
  // Percentage rounded half-up to two decimals with integer arithmetic
  // ("15.00"); "n/a" when total is 0.
  std::string percent() const;
};

// FR = 1 - N_pass / N_total. Throws EmptyCampaign when N_total is 0.
Rate failure_rate(std::span<const CaseOutcome> outcomes);

// Per category: a case fails when any of its counted labels has the flag.
std::array<Rate, kCategoryCount> category_rates(std::span<const CaseOutcome> outcomes);

// Among counted labels flagged TD (resp. SM) that carry a Rouge-L score,
// the share scoring >= threshold. `joint` pools both.
struct RougeExceedance {
  Rate td;
  Rate sm;
  Rate joint;
};
RougeExceedance rouge_exceedance(std::span<const CaseOutcome> outcomes,
                                 double threshold = kRougeThreshold);

struct InvocationCounts {
  std::size_t invocations = 0;
  std::size_t failing = 0;
  std::array<std::size_t, kCategoryCount> per_category{};
};
InvocationCounts invocation_counts(std::span<const CaseOutcome> outcomes);

struct TransferMatrix {
  // counts[a][b]: failing counted invocations flagged with both a and b.
  std::array<std::array<std::size_t, kCategoryCount>, kCategoryCount> counts{};

  // counts[a][b] / counts[a][a]; nullopt where counts[a][a] is 0.
  std::array<std::array<std::optional<double>, kCategoryCount>, kCategoryCount> normalized() const;
};
TransferMatrix transfer_matrix(std::span<const CaseOutcome> outcomes);

}  // namespace toolfuzz
