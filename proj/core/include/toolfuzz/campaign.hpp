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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toolfuzz/agent.hpp"
#include "toolfuzz/corpus.hpp"
#include "toolfuzz/json.hpp"
#include "toolfuzz/perturbation.hpp"

namespace toolfuzz {

inline constexpr std::string_view kLogFileName = "trajectories.jsonl";

struct CampaignMetadata {
  std::string corpus_hash;
  std::string template_version{kPromptTemplateVersion};
  std::string driver;
  std::uint64_t seed = 0;
  std::vector<std::string> operators;
  std::size_t step_limit = kDefaultStepLimit;
  std::size_t max_observation_length = kDefaultMaxObservationLength;
  std::vector<std::string> case_ids;

  Json to_json() const;  // the "campaign" log event
  static CampaignMetadata from_json(const Json& j);
};

struct CampaignPlan {
  std::vector<TestCase> cases;  // already filtered
  std::vector<OperatorId> operators{kAllOperators.begin(), kAllOperators.end()};
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  RunOptions options;
  std::string corpus_hash;
};

struct RunSummary {
  std::size_t planned = 0;
  std::size_t written = 0;
  std::size_t resumed = 0;  // already present in the log
};

std::string corpus_hash(std::string_view corpus_bytes);

// Parses a JSON-lines log. A truncated final line (interrupted writer) is
// ignored; any other bad line throws MalformedInput naming the line.
std::vector<Json> read_log(const std::filesystem::path& path);

// Runs operators x cases (operator-major order) on a bounded worker pool.
// Lines are appended in plan order as soon as their predecessors finish, so
// the log is identical for any worker count. (operator, case, seed) tuples
// already logged, other than driver errors, are skipped.
RunSummary run_campaign(const CampaignPlan& plan, const DriverFactory& factory,
                        const std::filesystem::path& log_path);

// Appends one "labels" event per trajectory not yet labeled by this
// classifier version. Returns the number appended.
std::size_t classify_log(const std::filesystem::path& log_path, const std::vector<TestCase>& cases);

}  // namespace toolfuzz
