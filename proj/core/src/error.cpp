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

#include "toolfuzz/error.hpp"

namespace toolfuzz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::SpanMismatch: return "SpanMismatch";
    case ErrorCode::NoRequiredParams: return "NoRequiredParams";
    case ErrorCode::NoExamples: return "NoExamples";
    case ErrorCode::NoDonor: return "NoDonor";
    case ErrorCode::TooFewParams: return "TooFewParams";
    case ErrorCode::NoDistinctPair: return "NoDistinctPair";
    case ErrorCode::NoMentions: return "NoMentions";
    case ErrorCode::NotJson: return "NotJson";
    case ErrorCode::NoObjects: return "NoObjects";
    case ErrorCode::NoIdFields: return "NoIdFields";
    case ErrorCode::ToolMismatch: return "ToolMismatch";
    case ErrorCode::Transport: return "Transport";
    case ErrorCode::AuthFailure: return "AuthFailure";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::EmptyCampaign: return "EmptyCampaign";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_skip(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoRequiredParams:
    case ErrorCode::NoExamples:
    case ErrorCode::NoDonor:
    case ErrorCode::TooFewParams:
    case ErrorCode::NoDistinctPair:
    case ErrorCode::NoMentions:
    case ErrorCode::NotJson:
    case ErrorCode::NoObjects:
    case ErrorCode::NoIdFields:
      return true;
    default:
      return false;
  }
}

}  // namespace toolfuzz
