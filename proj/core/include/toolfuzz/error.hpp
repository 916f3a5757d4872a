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

#include <stdexcept>
#include <string>
#include <string_view>

namespace toolfuzz {

enum class ErrorCode {
  // corpus
  MalformedInput,
  SchemaViolation,
  SpanMismatch,
  // operator preconditions; all of these mean "unperturbable"
  NoRequiredParams,
  NoExamples,
  NoDonor,
  TooFewParams,
  NoDistinctPair,
  NoMentions,
  NotJson,
  NoObjects,
  NoIdFields,
  // classifier
  ToolMismatch,
  // driver
  Transport,
  AuthFailure,
  RateLimited,
  // metrics / io
  EmptyCampaign,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// True for the precondition failures an operator reports when the input
// offers nothing to perturb. Campaigns record these as skipped cases.
bool is_skip(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool skip() const noexcept { return is_skip(code_); }

 private:
  ErrorCode code_;
};

}  // namespace toolfuzz
