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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "toolfuzz/json.hpp"

namespace toolfuzz {

inline constexpr int kCorpusSchemaVersion = 1;

enum class ParamType { String, Integer, Number, Boolean, Array, Object };

std::string_view to_string(ParamType type);
std::optional<ParamType> parse_param_type(std::string_view name);

struct NumericRange {
  double min = 0.0;
  double max = 0.0;
};

struct ParameterSpec {
  std::string name;
  ParamType type = ParamType::String;
  std::string description;
  bool required = false;
  std::optional<std::vector<Json>> enum_values;
  std::optional<std::string> format;  // ECMAScript regex, full match
  std::optional<NumericRange> range;
  std::optional<Json> example;

  friend bool operator==(const ParameterSpec&, const ParameterSpec&);
};

struct ToolDocument {
  std::string tool_name;
  std::string description;
  std::vector<ParameterSpec> parameters;  // order is significant
  std::vector<std::string> usage_examples;

  const ParameterSpec* find(std::string_view name) const;
  bool has_parameter(std::string_view name) const { return find(name) != nullptr; }

  friend bool operator==(const ToolDocument&, const ToolDocument&);
};

// Half-open [start, end) span in Unicode code points.
struct Mention {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string param_name;
  std::string tool_name;
  std::string value_text;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct AnnotatedQuery {
  std::string text;
  std::vector<Mention> mentions;  // sorted, non-overlapping; info_1..info_n

  friend bool operator==(const AnnotatedQuery&, const AnnotatedQuery&) = default;
};

// A tool observation: parsed JSON, or raw text (always raw after CF).
class ToolReturn {
 public:
  ToolReturn() : payload_(Json(nullptr)) {}
  static ToolReturn from_json(Json value) { return ToolReturn(std::move(value)); }
  static ToolReturn from_raw(std::string text) { return ToolReturn(std::move(text)); }

  bool is_json() const { return std::holds_alternative<Json>(payload_); }
  const Json& json() const { return std::get<Json>(payload_); }
  const std::string& raw() const { return std::get<std::string>(payload_); }

  // What the agent sees: compact JSON (document key order) or the raw text.
  std::string render() const;

  friend bool operator==(const ToolReturn& a, const ToolReturn& b);

 private:
  explicit ToolReturn(Json value) : payload_(std::move(value)) {}
  explicit ToolReturn(std::string text) : payload_(std::move(text)) {}

  std::variant<Json, std::string> payload_;
};

struct OracleInvocation {
  std::string tool_name;
  Json arguments = Json::object();
  std::set<std::string> needed_params;

  friend bool operator==(const OracleInvocation& a, const OracleInvocation& b);
};

struct ScriptedReturn {
  std::string tool_name;
  Json arguments = Json::object();
  ToolReturn result;
};

// One step the replay driver emits.
struct ScriptStep {
  enum class Kind { Invoke, Faulty, Final };
  Kind kind = Kind::Final;
  std::string thought;
  std::string tool_name;
  Json arguments = Json::object();  // Invoke
  std::string raw_text;             // Faulty: the malformed call text
  std::string answer;               // Final
};

using ScriptedBehavior = std::vector<ScriptStep>;

struct TestCase {
  std::string case_id;
  AnnotatedQuery query;
  std::vector<ToolDocument> tools;
  std::vector<OracleInvocation> oracle;
  std::vector<ScriptedReturn> scripted_returns;
  bool solvable = true;
  // Replay scripts keyed by operator id, plus "default". When no script
  // applies, the replay driver replays the oracle.
  std::map<std::string, ScriptedBehavior> replay_scripts;

  const ToolDocument* find_tool(std::string_view name) const;
  // Lookup keyed on (tool_name, canonical_args_hash(arguments)).
  const ToolReturn* lookup_return(std::string_view tool_name, const Json& arguments) const;
};

// Parses a corpus document. Throws Error with MalformedInput (carrying the
// byte offset), SchemaViolation, or SpanMismatch.
std::vector<TestCase> parse_corpus(std::string_view raw);
std::string serialize_corpus(const std::vector<TestCase>& cases);

Json to_json(const ParameterSpec& spec);
Json to_json(const ToolDocument& doc);
Json to_json(const AnnotatedQuery& query);
Json to_json(const ToolReturn& ret);
Json to_json(const OracleInvocation& inv);
Json to_json(const ScriptStep& step);
Json to_json(const TestCase& tc);

ToolDocument tool_document_from_json(const Json& j, const std::string& where = "tool");
AnnotatedQuery annotated_query_from_json(const Json& j, const std::string& where = "query");
ToolReturn tool_return_from_json(const Json& j, const std::string& where = "return");
ScriptStep script_step_from_json(const Json& j, const std::string& where = "step");
TestCase test_case_from_json(const Json& j);

// Type invariants of each value; throw SchemaViolation / SpanMismatch.
void validate(const ToolDocument& doc);
void validate(const AnnotatedQuery& query);
void validate(const TestCase& tc);

// Drops unsolvable cases and cases whose tools all take zero parameters.
std::vector<TestCase> filter_cases(const std::vector<TestCase>& cases);

struct LintFinding {
  enum class Kind { UncoveredMention, DuplicateParamName, OracleViolatesSpec };
  Kind kind;
  std::string case_id;
  std::string message;
};

std::string_view to_string(LintFinding::Kind kind);

std::vector<LintFinding> lint_case(const TestCase& tc);

// Returns the name of the violated rule ("type", "enum", "format", "range"),
// or nullopt when the value satisfies the spec.
std::optional<std::string> spec_violation(const ParameterSpec& spec, const Json& value);

}  // namespace toolfuzz
