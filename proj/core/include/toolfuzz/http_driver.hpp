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

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "toolfuzz/agent.hpp"
#include "toolfuzz/json.hpp"
#include "toolfuzz/perturb_query.hpp"

namespace toolfuzz {

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{30000};

  // Delay before retry number `retry` (0-based): initial * multiplier^retry,
  // capped at max_backoff.
  std::chrono::milliseconds delay_for(int retry) const;
};

// Endpoint config file: {base_url, model, temperature, max_steps, workers,
// rate_per_minute, api_key_env, timeout_seconds, retry:{...}}.
struct EndpointConfig {
  std::string base_url;  // e.g. "https://api.openai.com/v1"
  std::string model;
  double temperature = 0.0;
  std::size_t max_steps = kDefaultStepLimit;
  std::size_t workers = 1;
  double rate_per_minute = 60.0;
  std::string api_key_env = "OPENAI_API_KEY";
  int timeout_seconds = 60;
  RetryPolicy retry;

  static EndpointConfig from_json(const Json& j);
  Json to_json() const;
};

// Spaces calls at least 60/rate_per_minute seconds apart across all threads.
class RateLimiter {
 public:
  using Clock = std::chrono::steady_clock;

  explicit RateLimiter(double rate_per_minute);
  void acquire();

 private:
  std::mutex mutex_;
  Clock::duration interval_;
  Clock::time_point next_;
};

// POSTs chat-completions requests with retry and rate limiting. Thread-safe:
// each call opens its own connection.
class ChatClient {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  ChatClient(EndpointConfig config, std::string api_key,
             std::shared_ptr<RateLimiter> limiter = nullptr, Sleeper sleeper = nullptr);

  // Returns the parsed response body. Throws Error{AuthFailure} on 401/403
  // without retrying; Transport and RateLimited after retries run out.
  Json complete(const Json& request) const;

  const EndpointConfig& config() const { return config_; }

 private:
  Json post_once(const std::string& body) const;

  EndpointConfig config_;
  std::string api_key_;
  std::shared_ptr<RateLimiter> limiter_;
  Sleeper sleeper_;
  std::string scheme_host_port_;
  std::string path_;
};

class HttpDriver final : public AgentDriver {
 public:
  explicit HttpDriver(std::shared_ptr<const ChatClient> client);

  std::string id() const override;
  DriverStep next_step(const AgentContext& context) override;

  Json build_request(const AgentContext& context) const;
  // First tool call, else the message content as the final answer.
  static DriverStep parse_response(const Json& body);

 private:
  std::shared_ptr<const ChatClient> client_;
};

// Reads the API key from the configured environment variable (empty if unset).
std::string api_key_from_env(const EndpointConfig& config);

DriverFactory http_driver_factory(std::shared_ptr<const ChatClient> client);

// Rewriter backed by the chat endpoint, for CP/AN fidelity studies. Only
// deterministic when the endpoint is (temperature 0, fixed model).
query_ops::Rewriter llm_rewriter(std::shared_ptr<const ChatClient> client, query_ops::RewriterKind kind);

}  // namespace toolfuzz
