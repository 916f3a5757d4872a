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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toolfuzz/classifier.hpp"
#include "toolfuzz/corpus.hpp"
#include "toolfuzz/perturb_doc.hpp"
#include "toolfuzz/perturb_query.hpp"
#include "toolfuzz/perturb_return.hpp"
#include "toolfuzz/perturbation.hpp"

namespace toolfuzz {

inline constexpr std::size_t kDefaultStepLimit = 8;
inline constexpr std::size_t kDefaultMaxObservationLength = 1024;

// Bump the version whenever the wording changes; failure rates are only
// comparable within one template version.
inline constexpr std::string_view kPromptTemplateVersion = "react-v1";
std::string_view system_prompt();

struct TruncationEvent {
  std::size_t step = 0;
  std::size_t original_length = 0;   // code points
  std::size_t truncated_length = 0;  // code points

  Json to_json() const;
  static TruncationEvent from_json(const Json& j);
};

struct AgentStep {
  std::string thought;
  ObservedInvocation invocation;
  std::string observation;  // as shown to the driver, after truncation

  Json to_json() const;
  static AgentStep from_json(const Json& j);
};

struct AgentContext {
  std::string query;
  std::vector<ToolDocument> tools;
  std::vector<AgentStep> steps;
  std::size_t max_observation_length = kDefaultMaxObservationLength;
};

// What a driver produces for one turn: a tool call or a final answer.
struct DriverStep {
  bool final = false;
  std::string thought;
  ObservedInvocation invocation;
  std::string answer;
};

class AgentDriver {
 public:
  virtual ~AgentDriver() = default;
  virtual std::string id() const = 0;
  // Transport failures surface as Error{Transport, AuthFailure, RateLimited}.
  virtual DriverStep next_step(const AgentContext& context) = 0;
};

// Emits a fixed script, one step per turn, regardless of what it is shown.
// After the script runs out it keeps answering with the last final answer.
class ReplayDriver final : public AgentDriver {
 public:
  explicit ReplayDriver(ScriptedBehavior script);

  // The case's script for `op` if present, else its "default" script, else
  // the oracle invocations followed by a final answer.
  static ScriptedBehavior script_for(const TestCase& tc, std::optional<OperatorId> op);

  std::string id() const override { return "replay"; }
  DriverStep next_step(const AgentContext& context) override;

 private:
  ScriptedBehavior script_;
};

// OpenAI-style "tools" array. Every document field is rendered verbatim,
// including perturbed ones; usage examples are appended to the description.
Json render_function_declarations(std::span<const ToolDocument> tools);

enum class TrajectoryStatus { Completed, Skipped, StepLimitExceeded, DriverError };

std::string_view to_string(TrajectoryStatus status);
std::optional<TrajectoryStatus> parse_trajectory_status(std::string_view name);

// One enhanced trajectory: a (case, operator) run over perturbed inputs.
struct Trajectory {
  std::string case_id;
  std::string op;  // operator id, or "NONE" for an unperturbed run
  std::uint64_t seed = 0;
  std::string driver_id;
  std::string template_version{kPromptTemplateVersion};
  TrajectoryStatus status = TrajectoryStatus::Completed;
  // False when the operator found nothing to perturb anywhere in the case.
  bool perturbed = true;
  std::string query;  // as shown to the driver
  std::vector<PerturbationRecord> perturbations;
  std::vector<AgentStep> steps;
  std::vector<TruncationEvent> truncations;
  std::string final_answer;
  std::string error;

  std::vector<ObservedInvocation> invocations() const;

  Json to_json() const;
  static Trajectory from_json(const Json& j);
};

struct RunOptions {
  std::size_t step_limit = kDefaultStepLimit;
  std::size_t max_observation_length = kDefaultMaxObservationLength;
  return_ops::ReturnOpOptions return_options;
  query_ops::Rewriter complicate = query_ops::default_complicate();
  query_ops::Rewriter noise = query_ops::default_noise();
  // WD donors; tools belonging to the case itself are ignored.
  std::vector<ToolDocument> donor_pool;
};

// Truncates to `budget` code points without splitting a combining sequence.
// Returns the event when anything was cut.
std::optional<TruncationEvent> truncate_observation(std::string& observation, std::size_t budget,
                                                    std::size_t step);

// Observation text for a call: the scripted return (if any) as rendered JSON
// or raw text, or an error string naming the unknown call.
ToolReturn lookup_observation(const TestCase& tc, const ObservedInvocation& call);

// Applies `op` to its input source and runs the driver loop.
Trajectory run_case(const TestCase& tc, std::optional<OperatorId> op, std::uint64_t seed,
                    AgentDriver& driver, const RunOptions& options = {});

using DriverFactory =
    std::function<std::unique_ptr<AgentDriver>(const TestCase&, std::optional<OperatorId>)>;

DriverFactory replay_driver_factory();

}  // namespace toolfuzz
