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

#include "toolfuzz/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <unordered_map>

#include "toolfuzz/error.hpp"
#include "toolfuzz/utf8.hpp"

namespace toolfuzz {
namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, where + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) schema_error(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string optional_string(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) schema_error(where, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

bool optional_bool(const Json& j, const char* key, bool fallback, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) schema_error(where, std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

const Json& optional_array(const Json& j, const char* key, const std::string& where) {
  static const Json kEmpty = Json::array();
  auto it = j.find(key);
  if (it == j.end()) return kEmpty;
  if (!it->is_array()) schema_error(where, std::string("field '") + key + "' must be an array");
  return *it;
}

std::size_t span_bound(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    schema_error(where, "span bounds must be non-negative integers");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

bool is_integral(const Json& v) {
  if (v.is_number_integer()) return true;
  if (!v.is_number_float()) return false;
  const double d = v.get<double>();
  return std::isfinite(d) && std::trunc(d) == d;
}

ParameterSpec parameter_from_json(const Json& j, const std::string& where) {
  ParameterSpec p;
  p.name = require_string(j, "name", where);
  const std::string ptype = require_string(j, "ptype", where);
  auto type = parse_param_type(ptype);
  if (!type) schema_error(where, "unknown ptype '" + ptype + "'");
  p.type = *type;
  p.description = optional_string(j, "description", where);
  p.required = optional_bool(j, "required", false, where);
  if (auto it = j.find("enum_values"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) schema_error(where, "enum_values must be an array");
    p.enum_values = std::vector<Json>(it->begin(), it->end());
  }
  if (auto it = j.find("format"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) schema_error(where, "format must be a string");
    p.format = it->get<std::string>();
  }
  if (auto it = j.find("range"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
      schema_error(where, "range must be [min, max]");
    }
    p.range = NumericRange{(*it)[0].get<double>(), (*it)[1].get<double>()};
  }
  if (auto it = j.find("example"); it != j.end() && !it->is_null()) p.example = *it;
  return p;
}

ScriptedReturn scripted_return_from_json(const Json& j, const std::string& where) {
  ScriptedReturn r;
  r.tool_name = require_string(j, "tool_name", where);
  r.arguments = require(j, "arguments", where);
  if (!r.arguments.is_object()) schema_error(where, "arguments must be an object");
  r.result = tool_return_from_json(require(j, "return", where), where + ".return");
  return r;
}

OracleInvocation oracle_from_json(const Json& j, const std::string& where) {
  OracleInvocation inv;
  inv.tool_name = require_string(j, "tool_name", where);
  inv.arguments = require(j, "arguments", where);
  if (!inv.arguments.is_object()) schema_error(where, "arguments must be an object");
  if (auto it = j.find("needed_params"); it != j.end()) {
    if (!it->is_array()) schema_error(where, "needed_params must be an array");
    for (const auto& n : *it) {
      if (!n.is_string()) schema_error(where, "needed_params entries must be strings");
      inv.needed_params.insert(n.get<std::string>());
    }
  } else {
    for (auto it2 = inv.arguments.begin(); it2 != inv.arguments.end(); ++it2) {
      inv.needed_params.insert(it2.key());
    }
  }
  return inv;
}

}  // namespace

std::string_view to_string(ParamType type) {
  switch (type) {
    case ParamType::String: return "string";
    case ParamType::Integer: return "integer";
    case ParamType::Number: return "number";
    case ParamType::Boolean: return "boolean";
    case ParamType::Array: return "array";
    case ParamType::Object: return "object";
  }
  return "string";
}

std::optional<ParamType> parse_param_type(std::string_view name) {
  if (name == "string") return ParamType::String;
  if (name == "integer") return ParamType::Integer;
  if (name == "number") return ParamType::Number;
  if (name == "boolean") return ParamType::Boolean;
  if (name == "array") return ParamType::Array;
  if (name == "object") return ParamType::Object;
  return std::nullopt;
}

bool operator==(const ParameterSpec& a, const ParameterSpec& b) {
  return canonical_equal(to_json(a), to_json(b));
}

bool operator==(const ToolDocument& a, const ToolDocument& b) {
  return to_json(a) == to_json(b);
}

const ParameterSpec* ToolDocument::find(std::string_view name) const {
  for (const auto& p : parameters) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string ToolReturn::render() const {
  if (is_json()) return json().dump();
  return raw();
}

bool operator==(const ToolReturn& a, const ToolReturn& b) {
  if (a.is_json() != b.is_json()) return false;
  return a.is_json() ? a.json() == b.json() : a.raw() == b.raw();
}

bool operator==(const OracleInvocation& a, const OracleInvocation& b) {
  return a.tool_name == b.tool_name && canonical_equal(a.arguments, b.arguments) &&
         a.needed_params == b.needed_params;
}

const ToolDocument* TestCase::find_tool(std::string_view name) const {
  for (const auto& t : tools) {
    if (t.tool_name == name) return &t;
  }
  return nullptr;
}

const ToolReturn* TestCase::lookup_return(std::string_view tool_name,
                                          const Json& arguments) const {
  const std::string key = canonical_args_hash(arguments);
  for (const auto& r : scripted_returns) {
    if (r.tool_name == tool_name && canonical_args_hash(r.arguments) == key) return &r.result;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// serialization

Json to_json(const ParameterSpec& spec) {
  Json j = Json::object();
  j["name"] = spec.name;
  j["ptype"] = std::string(to_string(spec.type));
  j["description"] = spec.description;
  j["required"] = spec.required;
  if (spec.enum_values) {
    j["enum_values"] = Json::array();
    for (const auto& v : *spec.enum_values) j["enum_values"].push_back(v);
  }
  if (spec.format) j["format"] = *spec.format;
  if (spec.range) j["range"] = Json::array({spec.range->min, spec.range->max});
  if (spec.example) j["example"] = *spec.example;
  return j;
}

Json to_json(const ToolDocument& doc) {
  Json j = Json::object();
  j["tool_name"] = doc.tool_name;
  j["description"] = doc.description;
  j["parameters"] = Json::array();
  for (const auto& p : doc.parameters) j["parameters"].push_back(to_json(p));
  j["usage_examples"] = doc.usage_examples;
  return j;
}

Json to_json(const AnnotatedQuery& query) {
  Json j = Json::object();
  j["text"] = query.text;
  j["mentions"] = Json::array();
  for (const auto& m : query.mentions) {
    j["mentions"].push_back({{"span", Json::array({m.start, m.end})},
                             {"param_name", m.param_name},
                             {"tool_name", m.tool_name},
                             {"value_text", m.value_text}});
  }
  return j;
}

Json to_json(const ToolReturn& ret) {
  if (ret.is_json()) return Json{{"payload", ret.json()}};
  return Json{{"raw", ret.raw()}};
}

Json to_json(const OracleInvocation& inv) {
  Json j = Json::object();
  j["tool_name"] = inv.tool_name;
  j["arguments"] = inv.arguments;
  j["needed_params"] = Json(std::vector<std::string>(inv.needed_params.begin(),
                                                     inv.needed_params.end()));
  return j;
}

Json to_json(const ScriptStep& step) {
  Json j = Json::object();
  if (!step.thought.empty()) j["thought"] = step.thought;
  switch (step.kind) {
    case ScriptStep::Kind::Invoke:
      j["invoke"] = {{"tool_name", step.tool_name}, {"arguments", step.arguments}};
      break;
    case ScriptStep::Kind::Faulty:
      j["faulty"] = {{"tool_name", step.tool_name}, {"raw_text", step.raw_text}};
      break;
    case ScriptStep::Kind::Final:
      j["final"] = step.answer;
      break;
  }
  return j;
}

Json to_json(const TestCase& tc) {
  Json j = Json::object();
  j["case_id"] = tc.case_id;
  j["query"] = to_json(tc.query);
  j["tools"] = Json::array();
  for (const auto& t : tc.tools) j["tools"].push_back(to_json(t));
  j["oracle"] = Json::array();
  for (const auto& o : tc.oracle) j["oracle"].push_back(to_json(o));
  j["scripted_returns"] = Json::array();
  for (const auto& r : tc.scripted_returns) {
    j["scripted_returns"].push_back(
        {{"tool_name", r.tool_name}, {"arguments", r.arguments}, {"return", to_json(r.result)}});
  }
  j["solvable"] = tc.solvable;
  if (!tc.replay_scripts.empty()) {
    Json scripts = Json::object();
    for (const auto& [key, steps] : tc.replay_scripts) {
      Json arr = Json::array();
      for (const auto& s : steps) arr.push_back(to_json(s));
      scripts[key] = std::move(arr);
    }
    j["replay_scripts"] = std::move(scripts);
  }
  return j;
}

ToolDocument tool_document_from_json(const Json& j, const std::string& where) {
  ToolDocument doc;
  doc.tool_name = require_string(j, "tool_name", where);
  doc.description = optional_string(j, "description", where);
  const Json& params = optional_array(j, "parameters", where);
  for (std::size_t i = 0; i < params.size(); ++i) {
    doc.parameters.push_back(
        parameter_from_json(params[i], where + ".parameters[" + std::to_string(i) + "]"));
  }
  for (const auto& ex : optional_array(j, "usage_examples", where)) {
    if (!ex.is_string()) schema_error(where, "usage_examples entries must be strings");
    doc.usage_examples.push_back(ex.get<std::string>());
  }
  return doc;
}

AnnotatedQuery annotated_query_from_json(const Json& j, const std::string& where) {
  AnnotatedQuery q;
  q.text = require_string(j, "text", where);
  const Json& mentions = optional_array(j, "mentions", where);
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    const std::string mw = where + ".mentions[" + std::to_string(i) + "]";
    const Json& span = require(mentions[i], "span", mw);
    if (!span.is_array() || span.size() != 2) schema_error(mw, "span must be [start, end]");
    Mention m;
    m.start = span_bound(span[0], mw);
    m.end = span_bound(span[1], mw);
    m.param_name = require_string(mentions[i], "param_name", mw);
    m.tool_name = require_string(mentions[i], "tool_name", mw);
    m.value_text = require_string(mentions[i], "value_text", mw);
    q.mentions.push_back(std::move(m));
  }
  return q;
}

ToolReturn tool_return_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected {\"payload\": ...} or {\"raw\": ...}");
  if (auto it = j.find("payload"); it != j.end()) return ToolReturn::from_json(*it);
  if (auto it = j.find("raw"); it != j.end()) {
    if (!it->is_string()) schema_error(where, "raw must be a string");
    return ToolReturn::from_raw(it->get<std::string>());
  }
  schema_error(where, "expected {\"payload\": ...} or {\"raw\": ...}");
}

ScriptStep script_step_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  ScriptStep step;
  step.thought = optional_string(j, "thought", where);
  if (auto it = j.find("invoke"); it != j.end()) {
    step.kind = ScriptStep::Kind::Invoke;
    step.tool_name = require_string(*it, "tool_name", where + ".invoke");
    step.arguments = require(*it, "arguments", where + ".invoke");
    if (!step.arguments.is_object()) schema_error(where, "invoke.arguments must be an object");
  } else if (auto it2 = j.find("faulty"); it2 != j.end()) {
    step.kind = ScriptStep::Kind::Faulty;
    step.tool_name = require_string(*it2, "tool_name", where + ".faulty");
    step.raw_text = require_string(*it2, "raw_text", where + ".faulty");
  } else if (auto it3 = j.find("final"); it3 != j.end()) {
    step.kind = ScriptStep::Kind::Final;
    if (!it3->is_string()) schema_error(where, "final must be a string");
    step.answer = it3->get<std::string>();
  } else {
    schema_error(where, "step needs one of invoke, faulty, final");
  }
  return step;
}

TestCase test_case_from_json(const Json& j) {
  if (!j.is_object()) schema_error("case", "expected an object");
  TestCase tc;
  tc.case_id = require_string(j, "case_id", "case");
  const std::string where = "case '" + tc.case_id + "'";
  tc.query = annotated_query_from_json(require(j, "query", where), where + ".query");
  const Json& tools = optional_array(j, "tools", where);
  for (std::size_t i = 0; i < tools.size(); ++i) {
    tc.tools.push_back(
        tool_document_from_json(tools[i], where + ".tools[" + std::to_string(i) + "]"));
  }
  const Json& oracle = optional_array(j, "oracle", where);
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    tc.oracle.push_back(oracle_from_json(oracle[i], where + ".oracle[" + std::to_string(i) + "]"));
  }
  const Json& returns = optional_array(j, "scripted_returns", where);
  for (std::size_t i = 0; i < returns.size(); ++i) {
    tc.scripted_returns.push_back(scripted_return_from_json(
        returns[i], where + ".scripted_returns[" + std::to_string(i) + "]"));
  }
  tc.solvable = optional_bool(j, "solvable", true, where);
  if (auto it = j.find("replay_scripts"); it != j.end()) {
    if (!it->is_object()) schema_error(where, "replay_scripts must be an object");
    for (auto s = it->begin(); s != it->end(); ++s) {
      if (!s.value().is_array()) schema_error(where, "replay script must be an array");
      ScriptedBehavior steps;
      for (std::size_t i = 0; i < s.value().size(); ++i) {
        steps.push_back(script_step_from_json(
            s.value()[i], where + ".replay_scripts." + s.key() + "[" + std::to_string(i) + "]"));
      }
      tc.replay_scripts.emplace(s.key(), std::move(steps));
    }
  }
  return tc;
}

// ---------------------------------------------------------------------------
// validation

void validate(const ToolDocument& doc) {
  const std::string where = "tool '" + doc.tool_name + "'";
  if (doc.tool_name.empty()) schema_error(where, "tool_name is empty");
  std::set<std::string> seen;
  for (const auto& p : doc.parameters) {
    if (p.name.empty()) schema_error(where, "parameter name is empty");
    if (!seen.insert(p.name).second) schema_error(where, "duplicate parameter '" + p.name + "'");
    if (p.enum_values && p.example) {
      const bool member = std::any_of(p.enum_values->begin(), p.enum_values->end(),
                                      [&](const Json& e) { return canonical_equal(e, *p.example); });
      if (!member) schema_error(where, "example of '" + p.name + "' is not in enum_values");
    }
    if (p.range) {
      if (p.type != ParamType::Integer && p.type != ParamType::Number) {
        schema_error(where, "range on non-numeric parameter '" + p.name + "'");
      }
      if (p.range->min > p.range->max) schema_error(where, "range min > max for '" + p.name + "'");
    }
    if (p.format) {
      try {
        std::regex re(*p.format);
      } catch (const std::regex_error&) {
        schema_error(where, "invalid format regex for '" + p.name + "'");
      }
    }
  }
}

void validate(const AnnotatedQuery& query) {
  const std::u32string text = utf8::decode(query.text);
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < query.mentions.size(); ++i) {
    const Mention& m = query.mentions[i];
    const std::string where = "mention " + std::to_string(i) + " [" + std::to_string(m.start) +
                              "," + std::to_string(m.end) + ")";
    if (m.start >= m.end) throw Error(ErrorCode::SpanMismatch, where + ": empty or inverted span");
    if (m.end > text.size()) throw Error(ErrorCode::SpanMismatch, where + ": span past end of text");
    if (i > 0 && m.start < prev_end) {
      throw Error(ErrorCode::SpanMismatch, where + ": spans overlap or are not sorted");
    }
    const std::string covered =
        utf8::encode(std::u32string_view(text).substr(m.start, m.end - m.start));
    if (covered != m.value_text) {
      throw Error(ErrorCode::SpanMismatch,
                  where + ": text is '" + covered + "', value_text is '" + m.value_text + "'");
    }
    prev_end = m.end;
  }
}

void validate(const TestCase& tc) {
  const std::string where = "case '" + tc.case_id + "'";
  if (tc.case_id.empty()) schema_error("case", "case_id is empty");
  std::set<std::string> names;
  for (const auto& t : tc.tools) {
    validate(t);
    if (!names.insert(t.tool_name).second) {
      schema_error(where, "duplicate tool '" + t.tool_name + "'");
    }
  }
  try {
    validate(tc.query);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SpanMismatch) {
      throw Error(ErrorCode::SpanMismatch, where + ": " + e.what());
    }
    throw;
  }
  for (const auto& m : tc.query.mentions) {
    const ToolDocument* tool = tc.find_tool(m.tool_name);
    if (tool == nullptr) schema_error(where, "mention references unknown tool '" + m.tool_name + "'");
    if (!tool->has_parameter(m.param_name)) {
      schema_error(where, "mention references unknown parameter '" + m.param_name + "'");
    }
  }
  for (const auto& inv : tc.oracle) {
    const ToolDocument* tool = tc.find_tool(inv.tool_name);
    if (tool == nullptr) schema_error(where, "oracle references unknown tool '" + inv.tool_name + "'");
    for (auto it = inv.arguments.begin(); it != inv.arguments.end(); ++it) {
      if (!tool->has_parameter(it.key())) {
        schema_error(where, "oracle argument '" + it.key() + "' not in schema of '" +
                                inv.tool_name + "'");
      }
    }
    for (const auto& n : inv.needed_params) {
      if (!tool->has_parameter(n)) {
        schema_error(where, "needed param '" + n + "' not in schema of '" + inv.tool_name + "'");
      }
    }
    for (const auto& p : tool->parameters) {
      if (p.required && inv.arguments.contains(p.name) && !inv.needed_params.count(p.name)) {
        schema_error(where, "needed_params must include required argument '" + p.name + "'");
      }
    }
  }
  for (const auto& [key, steps] : tc.replay_scripts) {
    if (steps.empty()) schema_error(where, "replay script '" + key + "' is empty");
    if (steps.back().kind != ScriptStep::Kind::Final) {
      schema_error(where, "replay script '" + key + "' must end with a final answer");
    }
  }
}

std::vector<TestCase> parse_corpus(std::string_view raw) {
  Json doc;
  try {
    doc = Json::parse(raw.begin(), raw.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput,
                "JSON parse failure at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("corpus", "top level must be an object");
  if (auto it = doc.find("schema_version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kCorpusSchemaVersion) {
      schema_error("corpus", "unsupported schema_version");
    }
  }
  const Json& cases = require(doc, "cases", "corpus");
  if (!cases.is_array()) schema_error("corpus", "cases must be an array");

  std::vector<TestCase> out;
  out.reserve(cases.size());
  std::set<std::string> ids;
  std::unordered_map<std::string, Json> tool_defs;
  for (const auto& jc : cases) {
    TestCase tc = test_case_from_json(jc);
    validate(tc);
    if (!ids.insert(tc.case_id).second) schema_error("corpus", "duplicate case_id '" + tc.case_id + "'");
    // One definition per tool name across the corpus.
    for (const auto& t : tc.tools) {
      Json def = to_json(t);
      auto [it, inserted] = tool_defs.emplace(t.tool_name, def);
      if (!inserted && !canonical_equal(it->second, def)) {
        schema_error("case '" + tc.case_id + "'",
                     "tool '" + t.tool_name + "' redefined differently from an earlier case");
      }
    }
    out.push_back(std::move(tc));
  }
  return out;
}

std::string serialize_corpus(const std::vector<TestCase>& cases) {
  Json doc = Json::object();
  doc["schema_version"] = kCorpusSchemaVersion;
  doc["cases"] = Json::array();
  for (const auto& tc : cases) doc["cases"].push_back(to_json(tc));
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// filter and lint

std::vector<TestCase> filter_cases(const std::vector<TestCase>& cases) {
  std::vector<TestCase> out;
  for (const auto& tc : cases) {
    if (!tc.solvable) continue;
    const bool any_params = std::any_of(tc.tools.begin(), tc.tools.end(),
                                        [](const ToolDocument& t) { return !t.parameters.empty(); });
    if (!any_params) continue;
    out.push_back(tc);
  }
  return out;
}

std::string_view to_string(LintFinding::Kind kind) {
  switch (kind) {
    case LintFinding::Kind::UncoveredMention: return "UncoveredMention";
    case LintFinding::Kind::DuplicateParamName: return "DuplicateParamName";
    case LintFinding::Kind::OracleViolatesSpec: return "OracleViolatesSpec";
  }
  return "Unknown";
}

std::optional<std::string> spec_violation(const ParameterSpec& spec, const Json& value) {
  bool type_ok = false;
  switch (spec.type) {
    case ParamType::String: type_ok = value.is_string(); break;
    case ParamType::Integer: type_ok = is_integral(value); break;
    case ParamType::Number: type_ok = value.is_number(); break;
    case ParamType::Boolean: type_ok = value.is_boolean(); break;
    case ParamType::Array: type_ok = value.is_array(); break;
    case ParamType::Object: type_ok = value.is_object(); break;
  }
  if (!type_ok) return "type";
  if (spec.enum_values) {
    const bool member = std::any_of(spec.enum_values->begin(), spec.enum_values->end(),
                                    [&](const Json& e) { return canonical_equal(e, value); });
    if (!member) return "enum";
  }
  if (spec.format && value.is_string()) {
    try {
      if (!std::regex_match(value.get<std::string>(), std::regex(*spec.format))) return "format";
    } catch (const std::regex_error&) {
      return "format";
    }
  }
  if (spec.range && value.is_number()) {
    const double v = value.get<double>();
    if (v < spec.range->min || v > spec.range->max) return "range";
  }
  return std::nullopt;
}

std::vector<LintFinding> lint_case(const TestCase& tc) {
  std::vector<LintFinding> findings;
  for (const auto& tool : tc.tools) {
    std::set<std::string> seen;
    for (const auto& p : tool.parameters) {
      if (!seen.insert(p.name).second) {
        findings.push_back({LintFinding::Kind::DuplicateParamName, tc.case_id,
                            "tool '" + tool.tool_name + "' declares '" + p.name + "' twice"});
      }
    }
  }
  for (const auto& inv : tc.oracle) {
    const ToolDocument* tool = tc.find_tool(inv.tool_name);
    for (auto it = inv.arguments.begin(); it != inv.arguments.end(); ++it) {
      const std::string& name = it.key();
      const Json& value = it.value();
      if (value.is_string() || value.is_number()) {
        const std::string literal = stringify(value);
        if (!literal.empty() && tc.query.text.find(literal) != std::string::npos) {
          const bool covered = std::any_of(
              tc.query.mentions.begin(), tc.query.mentions.end(), [&](const Mention& m) {
                return m.tool_name == inv.tool_name && m.param_name == name &&
                       m.value_text.find(literal) != std::string::npos;
              });
          if (!covered) {
            findings.push_back({LintFinding::Kind::UncoveredMention, tc.case_id,
                                "value '" + literal + "' of " + inv.tool_name + "." + name +
                                    " appears in the query but is not annotated"});
          }
        }
      }
      if (tool == nullptr) continue;
      if (const ParameterSpec* spec = tool->find(name)) {
        if (auto rule = spec_violation(*spec, value)) {
          findings.push_back({LintFinding::Kind::OracleViolatesSpec, tc.case_id,
                              inv.tool_name + "." + name + " = " + stringify(value) +
                                  " violates its " + *rule + " rule"});
        }
      }
    }
  }
  return findings;
}

}  // namespace toolfuzz
