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

#include "toolfuzz/agent.hpp"

#include <set>

#include "toolfuzz/error.hpp"
#include "toolfuzz/rng.hpp"
#include "toolfuzz/utf8.hpp"

namespace toolfuzz {
namespace {

constexpr std::string_view kSystemPrompt =
    "You are a tool-using assistant. Solve the user's request by calling the "
    "provided functions.\n"
    "At each step, first think briefly about what you know and what you still "
    "need (Thought), then either call exactly one function with JSON "
    "arguments that follow its declared parameters (Action), or, when the "
    "observations are sufficient, reply with the final answer and no function "
    "call.\n"
    "After each function call you will receive its output (Observation). Use "
    "only parameter values supported by the user request, the function "
    "documentation, or earlier observations.";

PerturbationRecord skip_record(OperatorId op, std::string target, const Error& e,
                               std::uint64_t seed = 0) {
  PerturbationRecord r;
  r.op = std::string(to_string(op));
  r.seed = seed;
  r.target = std::move(target);
  r.skipped = true;
  r.skip_reason = std::string(to_string(e.code()));
  return r;
}

}  // namespace

std::string_view system_prompt() { return kSystemPrompt; }

Json TruncationEvent::to_json() const {
  return {{"step", step}, {"original_length", original_length}, {"truncated_length", truncated_length}};
}

TruncationEvent TruncationEvent::from_json(const Json& j) {
  return {j.at("step").get<std::size_t>(), j.at("original_length").get<std::size_t>(),
          j.at("truncated_length").get<std::size_t>()};
}

Json AgentStep::to_json() const {
  return {{"thought", thought}, {"invocation", invocation.to_json()}, {"observation", observation}};
}

AgentStep AgentStep::from_json(const Json& j) {
  AgentStep s;
  s.thought = j.value("thought", "");
  s.invocation = ObservedInvocation::from_json(j.at("invocation"));
  s.observation = j.value("observation", "");
  return s;
}

// ---------------------------------------------------------------------------

ReplayDriver::ReplayDriver(ScriptedBehavior script) : script_(std::move(script)) {
  if (script_.empty() || script_.back().kind != ScriptStep::Kind::Final) {
    ScriptStep done;
    done.kind = ScriptStep::Kind::Final;
    script_.push_back(std::move(done));
  }
}

ScriptedBehavior ReplayDriver::script_for(const TestCase& tc, std::optional<OperatorId> op) {
  if (op) {
    if (auto it = tc.replay_scripts.find(std::string(to_string(*op))); it != tc.replay_scripts.end()) {
      return it->second;
    }
  }
  if (auto it = tc.replay_scripts.find("default"); it != tc.replay_scripts.end()) return it->second;
  ScriptedBehavior script;
  for (const auto& inv : tc.oracle) {
    ScriptStep step;
    step.kind = ScriptStep::Kind::Invoke;
    step.tool_name = inv.tool_name;
    step.arguments = inv.arguments;
    script.push_back(std::move(step));
  }
  ScriptStep done;
  done.kind = ScriptStep::Kind::Final;
  done.answer = "Done.";
  script.push_back(std::move(done));
  return script;
}

DriverStep ReplayDriver::next_step(const AgentContext& context) {
  const std::size_t index = std::min(context.steps.size(), script_.size() - 1);
  const ScriptStep& s = script_[index];
  DriverStep out;
  out.thought = s.thought;
  switch (s.kind) {
    case ScriptStep::Kind::Final:
      out.final = true;
      out.answer = s.answer;
      break;
    case ScriptStep::Kind::Invoke:
      out.invocation.tool_name = s.tool_name;
      out.invocation.arguments = s.arguments;
      out.invocation.raw_text = s.arguments.dump();
      break;
    case ScriptStep::Kind::Faulty:
      out.invocation = parse_invocation(s.tool_name, s.raw_text);
      break;
  }
  return out;
}

DriverFactory replay_driver_factory() {
  return [](const TestCase& tc, std::optional<OperatorId> op) -> std::unique_ptr<AgentDriver> {
    return std::make_unique<ReplayDriver>(ReplayDriver::script_for(tc, op));
  };
}

// ---------------------------------------------------------------------------

Json render_function_declarations(std::span<const ToolDocument> tools) {
  Json out = Json::array();
  for (const auto& tool : tools) {
    Json properties = Json::object();
    Json required = Json::array();
    for (const auto& p : tool.parameters) {
      Json prop = Json::object();
      prop["type"] = std::string(to_string(p.type));
      prop["description"] = p.description;
      if (p.enum_values) prop["enum"] = Json(*p.enum_values);
      if (p.format) prop["pattern"] = *p.format;
      if (p.range) {
        prop["minimum"] = p.range->min;
        prop["maximum"] = p.range->max;
      }
      if (p.example) prop["examples"] = Json::array({*p.example});
      properties[p.name] = std::move(prop);
      if (p.required) required.push_back(p.name);
    }
    std::string description = tool.description;
    if (!tool.usage_examples.empty()) {
      description += "\nExamples:";
      for (const auto& ex : tool.usage_examples) description += "\n- " + ex;
    }
    Json fn = Json::object();
    fn["name"] = tool.tool_name;
    fn["description"] = description;
    fn["parameters"] = {{"type", "object"}, {"properties", std::move(properties)}, {"required", std::move(required)}};
    out.push_back({{"type", "function"}, {"function", std::move(fn)}});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::Completed: return "completed";
    case TrajectoryStatus::Skipped: return "skipped";
    case TrajectoryStatus::StepLimitExceeded: return "step_limit_exceeded";
    case TrajectoryStatus::DriverError: return "driver_error";
  }
  return "?";
}

std::optional<TrajectoryStatus> parse_trajectory_status(std::string_view name) {
  for (auto s : {TrajectoryStatus::Completed, TrajectoryStatus::Skipped,
                 TrajectoryStatus::StepLimitExceeded, TrajectoryStatus::DriverError}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<ObservedInvocation> Trajectory::invocations() const {
  std::vector<ObservedInvocation> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.invocation);
  return out;
}

Json Trajectory::to_json() const {
  Json j = Json::object();
  j["event"] = "trajectory";
  j["operator"] = op;
  j["case_id"] = case_id;
  j["seed"] = seed;
  j["driver"] = driver_id;
  j["template_version"] = template_version;
  j["status"] = std::string(to_string(status));
  j["perturbed"] = perturbed;
  j["query"] = query;
  j["perturbations"] = Json::array();
  for (const auto& p : perturbations) j["perturbations"].push_back(p.to_json());
  j["steps"] = Json::array();
  for (const auto& s : steps) j["steps"].push_back(s.to_json());
  j["truncations"] = Json::array();
  for (const auto& t : truncations) j["truncations"].push_back(t.to_json());
  j["final_answer"] = final_answer;
  if (!error.empty()) j["error"] = error;
  return j;
}

Trajectory Trajectory::from_json(const Json& j) {
  Trajectory t;
  t.op = j.at("operator").get<std::string>();
  t.case_id = j.at("case_id").get<std::string>();
  t.seed = j.value("seed", std::uint64_t{0});
  t.driver_id = j.value("driver", "");
  t.template_version = j.value("template_version", "");
  const auto status = parse_trajectory_status(j.value("status", ""));
  if (!status) throw Error(ErrorCode::MalformedInput, "unknown trajectory status");
  t.status = *status;
  t.perturbed = j.value("perturbed", true);
  t.query = j.value("query", "");
  for (const auto& p : j.value("perturbations", Json::array())) {
    t.perturbations.push_back(PerturbationRecord::from_json(p));
  }
  for (const auto& s : j.value("steps", Json::array())) t.steps.push_back(AgentStep::from_json(s));
  for (const auto& e : j.value("truncations", Json::array())) {
    t.truncations.push_back(TruncationEvent::from_json(e));
  }
  t.final_answer = j.value("final_answer", "");
  t.error = j.value("error", "");
  return t;
}

// ---------------------------------------------------------------------------

std::optional<TruncationEvent> truncate_observation(std::string& observation, std::size_t budget,
                                                    std::size_t step) {
  const std::size_t length = utf8::length(observation);
  if (length <= budget) return std::nullopt;
  const std::u32string cps = utf8::decode(observation);
  const std::size_t cut = utf8::safe_cut(cps, budget);
  observation = utf8::encode(std::u32string_view(cps).substr(0, cut));
  return TruncationEvent{step, length, cut};
}

ToolReturn lookup_observation(const TestCase& tc, const ObservedInvocation& call) {
  if (const ToolReturn* r = tc.lookup_return(call.tool_name, call.arguments)) return *r;
  if (tc.find_tool(call.tool_name) == nullptr) {
    return ToolReturn::from_raw("Error: unknown tool '" + call.tool_name + "'.");
  }
  return ToolReturn::from_raw("Error: " + call.tool_name + " rejected arguments " +
                              canonical_dump(call.arguments) + ".");
}

Trajectory run_case(const TestCase& tc, std::optional<OperatorId> op, std::uint64_t seed,
                    AgentDriver& driver, const RunOptions& options) {
  Trajectory traj;
  traj.case_id = tc.case_id;
  traj.op = op ? std::string(to_string(*op)) : "NONE";
  traj.seed = seed;
  traj.driver_id = driver.id();

  AgentContext ctx;
  ctx.query = tc.query.text;
  ctx.tools = tc.tools;
  ctx.max_observation_length = options.max_observation_length;

  const InputSource source = op ? source_of(*op) : InputSource::Return;
  if (op && source == InputSource::Document) {
    std::vector<ToolDocument> donors;
    for (const auto& d : options.donor_pool) {
      if (tc.find_tool(d.tool_name) == nullptr) donors.push_back(d);
    }
    bool any = false;
    for (auto& tool : ctx.tools) {
      doc_ops::DocPerturbSpec spec;
      spec.op = *op;
      spec.seed = derive_seed(seed, "tool", tool.tool_name);
      spec.donor_pool = donors;
      try {
        auto result = doc_ops::apply(tool, spec);
        tool = std::move(result.value);
        traj.perturbations.push_back(std::move(result.record));
        any = true;
      } catch (const Error& e) {
        if (!e.skip()) throw;
        traj.perturbations.push_back(skip_record(*op, tool.tool_name, e, spec.seed));
      }
    }
    if (!any) {
      traj.status = TrajectoryStatus::Skipped;
      traj.perturbed = false;
      traj.query = ctx.query;
      return traj;
    }
  } else if (op && source == InputSource::Query) {
    try {
      Perturbed<AnnotatedQuery> result = [&] {
        switch (*op) {
          case OperatorId::RPF: return query_ops::rp_first(tc.query);
          case OperatorId::RPL: return query_ops::rp_last(tc.query);
          case OperatorId::CP: return query_ops::cp(tc.query, options.complicate);
          default: return query_ops::an(tc.query, options.noise);
        }
      }();
      result.record.seed = seed;
      ctx.query = result.value.text;
      traj.perturbations.push_back(std::move(result.record));
    } catch (const Error& e) {
      if (!e.skip()) throw;
      traj.perturbations.push_back(skip_record(*op, "query", e, seed));
      traj.status = TrajectoryStatus::Skipped;
      traj.perturbed = false;
      traj.query = ctx.query;
      return traj;
    }
  }
  traj.query = ctx.query;

  const bool perturb_returns = op && source == InputSource::Return;
  bool any_return_perturbed = false;
  traj.status = TrajectoryStatus::StepLimitExceeded;
  try {
    for (std::size_t step = 0; step < options.step_limit; ++step) {
      DriverStep next = driver.next_step(ctx);
      if (next.final) {
        traj.final_answer = next.answer;
        traj.status = TrajectoryStatus::Completed;
        break;
      }
      ToolReturn observation = lookup_observation(tc, next.invocation);
      if (perturb_returns) {
        try {
          auto result = return_ops::apply(*op, observation, options.return_options);
          result.record.seed = seed;
          result.record.details["step"] = step;
          observation = std::move(result.value);
          traj.perturbations.push_back(std::move(result.record));
          any_return_perturbed = true;
        } catch (const Error& e) {
          if (!e.skip()) throw;
          auto record = skip_record(*op, "return", e, seed);
          record.details["step"] = step;
          traj.perturbations.push_back(std::move(record));
        }
      }
      std::string text = observation.render();
      if (auto event = truncate_observation(text, options.max_observation_length, step)) {
        traj.truncations.push_back(*event);
      }
      AgentStep record{next.thought, std::move(next.invocation), std::move(text)};
      traj.steps.push_back(record);
      ctx.steps.push_back(std::move(record));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Transport && e.code() != ErrorCode::AuthFailure &&
        e.code() != ErrorCode::RateLimited) {
      throw;
    }
    traj.status = TrajectoryStatus::DriverError;
    traj.error = e.what();
  }
  if (perturb_returns && !any_return_perturbed) traj.perturbed = false;
  return traj;
}

}  // namespace toolfuzz
