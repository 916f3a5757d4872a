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

#include "toolfuzz/http_driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "toolfuzz/error.hpp"

namespace toolfuzz {

std::chrono::milliseconds RetryPolicy::delay_for(int retry) const {
  const double scaled = static_cast<double>(initial_backoff.count()) * std::pow(multiplier, retry);
  const double capped = std::min(scaled, static_cast<double>(max_backoff.count()));
  return std::chrono::milliseconds(static_cast<long long>(capped));
}

EndpointConfig EndpointConfig::from_json(const Json& j) {
  EndpointConfig c;
  c.base_url = j.value("base_url", c.base_url);
  c.model = j.value("model", c.model);
  c.temperature = j.value("temperature", c.temperature);
  c.max_steps = j.value("max_steps", c.max_steps);
  c.workers = j.value("workers", c.workers);
  c.rate_per_minute = j.value("rate_per_minute", c.rate_per_minute);
  c.api_key_env = j.value("api_key_env", c.api_key_env);
  c.timeout_seconds = j.value("timeout_seconds", c.timeout_seconds);
  if (j.contains("retry")) {
    const Json& r = j["retry"];
    c.retry.max_attempts = r.value("max_attempts", c.retry.max_attempts);
    c.retry.initial_backoff =
        std::chrono::milliseconds(r.value("initial_backoff_ms", c.retry.initial_backoff.count()));
    c.retry.multiplier = r.value("multiplier", c.retry.multiplier);
    c.retry.max_backoff =
        std::chrono::milliseconds(r.value("max_backoff_ms", c.retry.max_backoff.count()));
  }
  if (c.rate_per_minute <= 0) throw Error(ErrorCode::InvalidArgument, "rate_per_minute must be > 0");
  if (c.retry.max_attempts < 1) throw Error(ErrorCode::InvalidArgument, "retry.max_attempts must be >= 1");
  return c;
}

Json EndpointConfig::to_json() const {
  return {{"base_url", base_url},
          {"model", model},
          {"temperature", temperature},
          {"max_steps", max_steps},
          {"workers", workers},
          {"rate_per_minute", rate_per_minute},
          {"api_key_env", api_key_env},
          {"timeout_seconds", timeout_seconds},
          {"retry",
           {{"max_attempts", retry.max_attempts},
            {"initial_backoff_ms", retry.initial_backoff.count()},
            {"multiplier", retry.multiplier},
            {"max_backoff_ms", retry.max_backoff.count()}}}};
}

RateLimiter::RateLimiter(double rate_per_minute)
    : interval_(std::chrono::duration_cast<Clock::duration>(
          std::chrono::duration<double>(60.0 / rate_per_minute))),
      next_(Clock::now()) {}

void RateLimiter::acquire() {
  Clock::time_point slot;
  {
    std::lock_guard lock(mutex_);
    const auto now = Clock::now();
    slot = std::max(now, next_);
    next_ = slot + interval_;
  }
  std::this_thread::sleep_until(slot);
}

// ---------------------------------------------------------------------------

ChatClient::ChatClient(EndpointConfig config, std::string api_key,
                       std::shared_ptr<RateLimiter> limiter, Sleeper sleeper)
    : config_(std::move(config)),
      api_key_(std::move(api_key)),
      limiter_(std::move(limiter)),
      sleeper_(std::move(sleeper)) {
  if (!sleeper_) sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  const auto scheme = config_.base_url.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "base_url needs a scheme: " + config_.base_url);
  }
  const auto slash = config_.base_url.find('/', scheme + 3);
  scheme_host_port_ = config_.base_url.substr(0, slash);
  std::string prefix = slash == std::string::npos ? "" : config_.base_url.substr(slash);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  path_ = prefix + "/chat/completions";
}

Json ChatClient::post_once(const std::string& body) const {
  if (limiter_) limiter_->acquire();
  httplib::Client cli(scheme_host_port_);
  cli.set_connection_timeout(config_.timeout_seconds, 0);
  cli.set_read_timeout(config_.timeout_seconds, 0);
  cli.set_write_timeout(config_.timeout_seconds, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  auto res = cli.Post(path_, headers, body, "application/json");
  if (!res) {
    throw Error(ErrorCode::Transport, "request failed: " + httplib::to_string(res.error()));
  }
  if (res->status == 401 || res->status == 403) {
    throw Error(ErrorCode::AuthFailure, "HTTP " + std::to_string(res->status));
  }
  if (res->status == 429) throw Error(ErrorCode::RateLimited, "HTTP 429");
  if (res->status < 200 || res->status >= 300) {
    throw Error(ErrorCode::Transport, "HTTP " + std::to_string(res->status) + ": " + res->body);
  }
  try {
    return Json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Transport, std::string("unparseable response body: ") + e.what());
  }
}

Json ChatClient::complete(const Json& request) const {
  const std::string body = request.dump();
  for (int attempt = 0;; ++attempt) {
    try {
      return post_once(body);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AuthFailure) throw;
      if (attempt + 1 >= config_.retry.max_attempts) throw;
      sleeper_(config_.retry.delay_for(attempt));
    }
  }
}

// ---------------------------------------------------------------------------

HttpDriver::HttpDriver(std::shared_ptr<const ChatClient> client) : client_(std::move(client)) {}

std::string HttpDriver::id() const { return "http:" + client_->config().model; }

Json HttpDriver::build_request(const AgentContext& context) const {
  Json messages = Json::array();
  messages.push_back({{"role", "system"}, {"content", std::string(system_prompt())}});
  messages.push_back({{"role", "user"}, {"content", context.query}});
  for (std::size_t i = 0; i < context.steps.size(); ++i) {
    const AgentStep& step = context.steps[i];
    const std::string call_id = "call_" + std::to_string(i);
    Json call = {{"id", call_id},
                 {"type", "function"},
                 {"function",
                  {{"name", step.invocation.tool_name}, {"arguments", step.invocation.raw_text}}}};
    messages.push_back({{"role", "assistant"},
                        {"content", step.thought.empty() ? Json(nullptr) : Json(step.thought)},
                        {"tool_calls", Json::array({std::move(call)})}});
    messages.push_back({{"role", "tool"}, {"tool_call_id", call_id}, {"content", step.observation}});
  }
  Json request = Json::object();
  request["model"] = client_->config().model;
  request["temperature"] = client_->config().temperature;
  request["messages"] = std::move(messages);
  if (!context.tools.empty()) request["tools"] = render_function_declarations(context.tools);
  return request;
}

DriverStep HttpDriver::parse_response(const Json& body) {
  if (!body.contains("choices") || !body["choices"].is_array() || body["choices"].empty()) {
    throw Error(ErrorCode::Transport, "response has no choices");
  }
  const Json& message = body["choices"][0].value("message", Json::object());
  DriverStep step;
  const Json content = message.value("content", Json(nullptr));
  const std::string text = content.is_string() ? content.get<std::string>() : "";
  const Json calls = message.value("tool_calls", Json::array());
  if (calls.is_array() && !calls.empty()) {
    const Json fn = calls[0].value("function", Json::object());
    const std::string name = fn.value("name", "");
    const Json args = fn.value("arguments", Json(""));
    step.invocation = parse_invocation(name, args.is_string() ? args.get<std::string>() : args.dump());
    step.thought = text;
    return step;
  }
  step.final = true;
  step.answer = text;
  return step;
}

DriverStep HttpDriver::next_step(const AgentContext& context) {
  return parse_response(client_->complete(build_request(context)));
}

std::string api_key_from_env(const EndpointConfig& config) {
  if (config.api_key_env.empty()) return {};
  const char* value = std::getenv(config.api_key_env.c_str());
  return value != nullptr ? value : "";
}

DriverFactory http_driver_factory(std::shared_ptr<const ChatClient> client) {
  return [client](const TestCase&, std::optional<OperatorId>) -> std::unique_ptr<AgentDriver> {
    return std::make_unique<HttpDriver>(client);
  };
}

query_ops::Rewriter llm_rewriter(std::shared_ptr<const ChatClient> client, query_ops::RewriterKind kind) {
  const std::string instruction =
      kind == query_ops::RewriterKind::Complicate
          ? "Rewrite the following parameter value as a longer, indirect descriptive phrase that "
            "still identifies it. Reply with the phrase only."
          : "Write a short distractor value that looks similar to the following parameter value "
            "but is different. Reply with the value only.";
  query_ops::Rewriter rewriter;
  rewriter.kind = kind;
  rewriter.name = "llm:" + client->config().model;
  rewriter.fn = [client, instruction](std::string_view value) {
    Json request = {{"model", client->config().model},
                    {"temperature", client->config().temperature},
                    {"messages", Json::array({{{"role", "system"}, {"content", instruction}},
                                              {{"role", "user"}, {"content", std::string(value)}}})}};
    DriverStep step = HttpDriver::parse_response(client->complete(request));
    return step.answer;
  };
  return rewriter;
}

}  // namespace toolfuzz
