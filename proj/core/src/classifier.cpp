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

#include "toolfuzz/classifier.hpp"

#include <map>
#include <numeric>

#include "toolfuzz/error.hpp"
#include "toolfuzz/rouge.hpp"

namespace toolfuzz {
namespace {

std::size_t idx(FailureCategory c) { return static_cast<std::size_t>(c); }

std::optional<double> mean_rouge(const std::vector<Evidence>& evidence) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& e : evidence) {
    if (e.rouge) {
      sum += *e.rouge;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

double value_rouge(const Json& observed, const Json& expected) {
  return rouge_l(stringify(observed), stringify(expected));
}

void check_tool(const ObservedInvocation& obs, const std::string& expected, const char* what) {
  if (obs.tool_name != expected) {
    throw Error(ErrorCode::ToolMismatch, "observed '" + obs.tool_name + "' vs " + what + " '" +
                                             expected + "'");
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string_view to_string(FailureCategory c) {
  switch (c) {
    case FailureCategory::TaskDeviation: return "task_deviation";
    case FailureCategory::SpecificationMismatch: return "specification_mismatch";
    case FailureCategory::HallucinationName: return "hallucination_name";
    case FailureCategory::MissingInformation: return "missing_information";
    case FailureCategory::RedundantInformation: return "redundant_information";
  }
  return "?";
}

std::string_view short_name(FailureCategory c) {
  switch (c) {
    case FailureCategory::TaskDeviation: return "TD";
    case FailureCategory::SpecificationMismatch: return "SM";
    case FailureCategory::HallucinationName: return "HN";
    case FailureCategory::MissingInformation: return "MI";
    case FailureCategory::RedundantInformation: return "RI";
  }
  return "?";
}

std::string_view display_name(FailureCategory c) {
  switch (c) {
    case FailureCategory::TaskDeviation: return "Task Deviation";
    case FailureCategory::SpecificationMismatch: return "Specification Mismatch";
    case FailureCategory::HallucinationName: return "Hallucination Name";
    case FailureCategory::MissingInformation: return "Missing Information";
    case FailureCategory::RedundantInformation: return "Redundant Information";
  }
  return "?";
}

std::optional<FailureCategory> parse_category(std::string_view name) {
  for (FailureCategory c : kAllCategories) {
    if (name == to_string(c) || name == short_name(c) || name == display_name(c)) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Json ObservedInvocation::to_json() const {
  Json j = {{"tool_name", tool_name}, {"arguments", arguments}, {"raw_text", raw_text}};
  if (parse_error) j["parse_error"] = *parse_error;
  return j;
}

ObservedInvocation ObservedInvocation::from_json(const Json& j) {
  ObservedInvocation obs;
  obs.tool_name = j.at("tool_name").get<std::string>();
  obs.arguments = j.value("arguments", Json::object());
  obs.raw_text = j.value("raw_text", "");
  if (j.contains("parse_error")) obs.parse_error = j.at("parse_error").get<std::string>();
  return obs;
}

ObservedInvocation parse_invocation(std::string tool_name, std::string raw_arguments) {
  ObservedInvocation obs;
  obs.tool_name = std::move(tool_name);
  obs.raw_text = std::move(raw_arguments);
  std::string_view text = obs.raw_text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) return obs;
  try {
    Json parsed = Json::parse(text);
    if (parsed.is_object()) {
      obs.arguments = std::move(parsed);
    } else {
      obs.parse_error = "arguments are not a JSON object";
    }
  } catch (const nlohmann::json::parse_error& e) {
    obs.parse_error = std::string("malformed arguments at byte ") + std::to_string(e.byte);
  }
  return obs;
}

Json Evidence::to_json() const {
  Json j = {{"param_name", param_name}, {"observed", observed}, {"expected", expected}, {"rule", rule}};
  if (rouge) j["rouge"] = *rouge;
  return j;
}

Evidence Evidence::from_json(const Json& j) {
  Evidence e;
  e.param_name = j.value("param_name", "");
  e.observed = j.value("observed", Json(nullptr));
  e.expected = j.value("expected", Json(nullptr));
  e.rule = j.value("rule", "");
  if (j.contains("rouge") && j.at("rouge").is_number()) e.rouge = j.at("rouge").get<double>();
  return e;
}

bool FailureLabel::pass() const {
  return std::none_of(flags.begin(), flags.end(), [](bool f) { return f; });
}

void FailureLabel::merge(FailureCategory c, DetectorResult result) {
  if (!result.flag) return;
  flags[idx(c)] = true;
  auto& bucket = evidence[idx(c)];
  bucket.insert(bucket.end(), result.evidence.begin(), result.evidence.end());
  if (c == FailureCategory::TaskDeviation) rouge_td = mean_rouge(bucket);
  if (c == FailureCategory::SpecificationMismatch) rouge_sm = mean_rouge(bucket);
}

Json FailureLabel::to_json() const {
  Json j = Json::object();
  j["tool_name"] = tool_name;
  j["observed_index"] = observed_index ? Json(*observed_index) : Json(nullptr);
  j["oracle_index"] = oracle_index ? Json(*oracle_index) : Json(nullptr);
  j["counted"] = counted;
  j["pass"] = pass();
  Json flag_obj = Json::object();
  Json evidence_obj = Json::object();
  for (FailureCategory c : kAllCategories) {
    flag_obj[std::string(to_string(c))] = has(c);
    if (has(c)) {
      Json list = Json::array();
      for (const auto& e : evidence_for(c)) list.push_back(e.to_json());
      evidence_obj[std::string(to_string(c))] = std::move(list);
    }
  }
  j["flags"] = std::move(flag_obj);
  j["evidence"] = std::move(evidence_obj);
  j["rouge_td"] = optional_number(rouge_td);
  j["rouge_sm"] = optional_number(rouge_sm);
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

FailureLabel FailureLabel::from_json(const Json& j) {
  FailureLabel label;
  label.tool_name = j.value("tool_name", "");
  if (j.contains("observed_index") && !j["observed_index"].is_null()) {
    label.observed_index = j["observed_index"].get<std::size_t>();
  }
  if (j.contains("oracle_index") && !j["oracle_index"].is_null()) {
    label.oracle_index = j["oracle_index"].get<std::size_t>();
  }
  label.counted = j.value("counted", true);
  const Json flags = j.value("flags", Json::object());
  const Json evidence = j.value("evidence", Json::object());
  for (FailureCategory c : kAllCategories) {
    const std::string key(to_string(c));
    label.flags[idx(c)] = flags.value(key, false);
    if (evidence.contains(key)) {
      for (const auto& e : evidence[key]) label.evidence[idx(c)].push_back(Evidence::from_json(e));
    }
  }
  if (j.contains("rouge_td") && j["rouge_td"].is_number()) label.rouge_td = j["rouge_td"].get<double>();
  if (j.contains("rouge_sm") && j["rouge_sm"].is_number()) label.rouge_sm = j["rouge_sm"].get<double>();
  if (j.contains("notes")) label.notes = j["notes"].get<std::vector<std::string>>();
  return label;
}

// ---------------------------------------------------------------------------
// detectors

DetectorResult detect_hallucination_name(const ObservedInvocation& obs, const ToolDocument& doc) {
  check_tool(obs, doc.tool_name, "document");
  DetectorResult r;
  for (auto it = obs.arguments.begin(); it != obs.arguments.end(); ++it) {
    if (!doc.has_parameter(it.key())) {
      r.evidence.push_back({it.key(), it.value(), Json(nullptr), "name_not_in_schema", std::nullopt});
    }
  }
  r.flag = !r.evidence.empty();
  return r;
}

DetectorResult detect_missing(const ObservedInvocation& obs, const OracleInvocation& oracle,
                              const ToolDocument& doc) {
  check_tool(obs, oracle.tool_name, "oracle");
  check_tool(obs, doc.tool_name, "document");
  DetectorResult r;
  for (const auto& name : oracle.needed_params) {
    if (obs.arguments.contains(name)) continue;
    const ParameterSpec* spec = doc.find(name);
    const Json expected = oracle.arguments.contains(name) ? oracle.arguments.at(name) : Json(nullptr);
    r.evidence.push_back({name, Json(nullptr), expected,
                          spec != nullptr && spec->required ? "schema_required" : "task_needed",
                          std::nullopt});
  }
  r.flag = !r.evidence.empty();
  return r;
}

DetectorResult detect_redundant(const ObservedInvocation& obs, const OracleInvocation& oracle,
                                const ToolDocument& doc) {
  check_tool(obs, oracle.tool_name, "oracle");
  check_tool(obs, doc.tool_name, "document");
  DetectorResult r;
  for (auto it = obs.arguments.begin(); it != obs.arguments.end(); ++it) {
    if (doc.has_parameter(it.key()) && !oracle.arguments.contains(it.key())) {
      r.evidence.push_back({it.key(), it.value(), Json(nullptr), "not_in_oracle", std::nullopt});
    }
  }
  r.flag = !r.evidence.empty();
  return r;
}

DetectorResult detect_spec_mismatch(const ObservedInvocation& obs, const ToolDocument& doc,
                                    const OracleInvocation* oracle) {
  check_tool(obs, doc.tool_name, "document");
  DetectorResult r;
  for (auto it = obs.arguments.begin(); it != obs.arguments.end(); ++it) {
    const ParameterSpec* spec = doc.find(it.key());
    if (spec == nullptr) continue;  // hallucination, not mismatch
    auto rule = spec_violation(*spec, it.value());
    if (!rule) continue;
    Evidence e{it.key(), it.value(), Json(nullptr), *rule, std::nullopt};
    if (oracle != nullptr && oracle->arguments.contains(it.key())) {
      e.expected = oracle->arguments.at(it.key());
      e.rouge = value_rouge(it.value(), e.expected);
    }
    r.evidence.push_back(std::move(e));
  }
  r.flag = !r.evidence.empty();
  r.rouge = mean_rouge(r.evidence);
  return r;
}

DetectorResult detect_task_deviation(const ObservedInvocation& obs, const OracleInvocation& oracle) {
  check_tool(obs, oracle.tool_name, "oracle");
  DetectorResult r;
  for (auto it = obs.arguments.begin(); it != obs.arguments.end(); ++it) {
    if (!oracle.arguments.contains(it.key())) continue;
    const Json& expected = oracle.arguments.at(it.key());
    if (canonical_equal(it.value(), expected)) continue;
    r.evidence.push_back(
        {it.key(), it.value(), expected, "value_differs", value_rouge(it.value(), expected)});
  }
  r.flag = !r.evidence.empty();
  r.rouge = mean_rouge(r.evidence);
  return r;
}

FailureLabel classify_invocation(const ObservedInvocation& obs, const OracleInvocation& oracle,
                                 const ToolDocument& doc) {
  check_tool(obs, oracle.tool_name, "oracle");
  check_tool(obs, doc.tool_name, "document");
  FailureLabel label;
  label.tool_name = obs.tool_name;
  label.merge(FailureCategory::TaskDeviation, detect_task_deviation(obs, oracle));
  label.merge(FailureCategory::SpecificationMismatch, detect_spec_mismatch(obs, doc, &oracle));
  label.merge(FailureCategory::HallucinationName, detect_hallucination_name(obs, doc));
  label.merge(FailureCategory::MissingInformation, detect_missing(obs, oracle, doc));
  label.merge(FailureCategory::RedundantInformation, detect_redundant(obs, oracle, doc));
  if (obs.parse_error) label.notes.push_back("parse_error: " + *obs.parse_error);
  return label;
}

// ---------------------------------------------------------------------------

Json TrajectoryClassification::to_json() const {
  Json labels_json = Json::array();
  for (const auto& l : labels) labels_json.push_back(l.to_json());
  return {{"case_pass", case_pass}, {"labels", std::move(labels_json)}};
}

TrajectoryClassification TrajectoryClassification::from_json(const Json& j) {
  TrajectoryClassification t;
  t.case_pass = j.value("case_pass", false);
  for (const auto& l : j.value("labels", Json::array())) t.labels.push_back(FailureLabel::from_json(l));
  return t;
}

TrajectoryClassification classify_trajectory(std::span<const ObservedInvocation> trajectory,
                                             std::span<const OracleInvocation> oracle,
                                             std::span<const ToolDocument> tools) {
  auto find_tool = [&](const std::string& name) -> const ToolDocument* {
    for (const auto& t : tools) {
      if (t.tool_name == name) return &t;
    }
    return nullptr;
  };

  // Oracle indices per tool, in order.
  std::map<std::string, std::vector<std::size_t>> oracle_by_tool;
  for (std::size_t k = 0; k < oracle.size(); ++k) oracle_by_tool[oracle[k].tool_name].push_back(k);

  std::map<std::string, std::size_t> seen;
  std::vector<bool> attempted(oracle.size(), false);
  TrajectoryClassification out;

  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const ObservedInvocation& obs = trajectory[i];
    const ToolDocument* doc = find_tool(obs.tool_name);
    FailureLabel label;
    label.tool_name = obs.tool_name;
    label.observed_index = i;

    if (doc == nullptr) {
      label.counted = false;
      label.flags[idx(FailureCategory::HallucinationName)] = true;
      label.evidence[idx(FailureCategory::HallucinationName)].push_back(
          {"", Json(obs.tool_name), Json(nullptr), "unknown_tool", std::nullopt});
      out.labels.push_back(std::move(label));
      continue;
    }

    const std::size_t occurrence = seen[obs.tool_name]++;
    auto slot = oracle_by_tool.find(obs.tool_name);
    if (slot == oracle_by_tool.end()) {
      // A known tool the oracle never calls: schema checks only.
      label.counted = false;
      label.merge(FailureCategory::SpecificationMismatch, detect_spec_mismatch(obs, *doc));
      label.merge(FailureCategory::HallucinationName, detect_hallucination_name(obs, *doc));
      label.notes.push_back("tool not in oracle");
      out.labels.push_back(std::move(label));
      continue;
    }

    const auto& indices = slot->second;
    const bool aligned = occurrence < indices.size();
    const std::size_t k = aligned ? indices[occurrence] : indices.back();
    FailureLabel classified = classify_invocation(obs, oracle[k], *doc);
    classified.observed_index = i;
    classified.oracle_index = k;
    classified.counted = aligned;
    if (aligned) {
      attempted[k] = true;
    } else {
      classified.notes.push_back("repeat call beyond oracle count");
    }
    out.labels.push_back(std::move(classified));
  }

  for (std::size_t k = 0; k < oracle.size(); ++k) {
    if (attempted[k]) continue;
    FailureLabel label;
    label.tool_name = oracle[k].tool_name;
    label.oracle_index = k;
    DetectorResult missing;
    missing.flag = true;
    std::set<std::string> names = oracle[k].needed_params;
    for (auto it = oracle[k].arguments.begin(); it != oracle[k].arguments.end(); ++it) {
      names.insert(it.key());
    }
    if (names.empty()) names.insert("");
    for (const auto& n : names) {
      const Json expected = oracle[k].arguments.contains(n) ? oracle[k].arguments.at(n) : Json(nullptr);
      missing.evidence.push_back({n, Json(nullptr), expected, "invocation_not_attempted", std::nullopt});
    }
    label.merge(FailureCategory::MissingInformation, std::move(missing));
    out.labels.push_back(std::move(label));
  }

  out.case_pass = std::all_of(out.labels.begin(), out.labels.end(),
                              [](const FailureLabel& l) { return !l.counted || l.pass(); });
  return out;
}

}  // namespace toolfuzz
