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

#include "toolfuzz/demo.hpp"

#include <ostream>

#include "toolfuzz/agent.hpp"
#include "toolfuzz/error.hpp"
#include "toolfuzz/utf8.hpp"

namespace toolfuzz {
namespace {

ParameterSpec param(std::string name, ParamType type, std::string description, bool required) {
  ParameterSpec p;
  p.name = std::move(name);
  p.type = type;
  p.description = std::move(description);
  p.required = required;
  return p;
}

// Locates `value` in `text` and records it as a code-point span.
Mention mention(const std::string& text, const std::string& value, std::string param,
                std::string tool) {
  const auto at = text.find(value);
  if (at == std::string::npos) throw Error(ErrorCode::SpanMismatch, "demo mention not found: " + value);
  Mention m;
  m.start = utf8::length(text.substr(0, at));
  m.end = m.start + utf8::length(value);
  m.param_name = std::move(param);
  m.tool_name = std::move(tool);
  m.value_text = value;
  return m;
}

ScriptStep invoke(std::string thought, std::string tool, Json args) {
  ScriptStep s;
  s.kind = ScriptStep::Kind::Invoke;
  s.thought = std::move(thought);
  s.tool_name = std::move(tool);
  s.arguments = std::move(args);
  return s;
}

ScriptStep final_answer(std::string answer) {
  ScriptStep s;
  s.kind = ScriptStep::Kind::Final;
  s.answer = std::move(answer);
  return s;
}

ToolDocument trends_tool() {
  ToolDocument doc;
  doc.tool_name = "google_trends_search";
  doc.description = "Related queries for a search term from Google Trends.";
  doc.parameters.push_back(param("query", ParamType::String, "Search term.", true));
  auto region = param("region", ParamType::String,
                      "Two-letter country code; omit for worldwide results.", false);
  region.enum_values = std::vector<Json>{"US", "GB", "AU", "JP", "DE", "FR", "IN", "BR"};
  doc.parameters.push_back(std::move(region));
  return doc;
}

DemoFixture hallucination_name() {
  TestCase tc;
  tc.case_id = "demo_hallucination_name";
  tc.query.text = "Can I get a summarized list of all threads on the 'mu' board from page number 5?";
  ToolDocument doc;
  doc.tool_name = "get_threads";
  doc.description = "Summarized list of all threads on a 4chan board.";
  doc.parameters.push_back(param("board", ParamType::String, "Board short name, e.g. 'po'.", true));
  tc.tools.push_back(doc);
  tc.query.mentions = {mention(tc.query.text, "mu", "board", "get_threads")};
  tc.oracle.push_back({"get_threads", {{"board", "mu"}}, {"board"}});
  const Json bad = {{"board", "mu"}, {"page_size", "5"}};
  tc.scripted_returns.push_back(
      {"get_threads", bad,
       ToolReturn::from_raw("get_threads() got an unexpected keyword argument 'page_size'")});
  tc.replay_scripts["default"] = {
      invoke("Retrieve the threads on the 'mu' board from page 5.", "get_threads", bad),
      final_answer("The summarized list of threads is not available at the moment.")};
  return {std::move(tc), FailureCategory::HallucinationName};
}

DemoFixture specification_mismatch() {
  TestCase tc;
  tc.case_id = "demo_specification_mismatch";
  tc.query.text = "Can you provide the top five related queries for \"Bitcoin\" worldwide?";
  tc.tools.push_back(trends_tool());
  tc.query.mentions = {mention(tc.query.text, "Bitcoin", "query", "google_trends_search")};
  tc.oracle.push_back({"google_trends_search", {{"query", "Bitcoin"}}, {"query"}});
  const Json bad = {{"query", "Bitcoin"}, {"region", "world"}};
  tc.scripted_returns.push_back(
      {"google_trends_search", bad, ToolReturn::from_raw("Unsupported `world` region parameter.")});
  tc.replay_scripts["default"] = {
      invoke("Query related searches for Bitcoin with region world.", "google_trends_search", bad),
      final_answer("I couldn't retrieve the related queries for 'Bitcoin' worldwide.")};
  return {std::move(tc), FailureCategory::SpecificationMismatch};
}

DemoFixture task_deviation() {
  TestCase tc;
  tc.case_id = "demo_task_deviation";
  tc.query.text = "What are the top related queries for \"Bitcoin\" in Australia?";
  tc.tools.push_back(trends_tool());
  tc.query.mentions = {mention(tc.query.text, "Bitcoin", "query", "google_trends_search"),
                       mention(tc.query.text, "Australia", "region", "google_trends_search")};
  tc.oracle.push_back(
      {"google_trends_search", {{"query", "Bitcoin"}, {"region", "AU"}}, {"query", "region"}});
  const Json bad = {{"query", "Bitcoin"}, {"region", "US"}};
  tc.scripted_returns.push_back(
      {"google_trends_search", bad,
       ToolReturn::from_json({{"related_queries", Json::array({"bitcoin price", "btc usd"})}})});
  tc.replay_scripts["default"] = {
      invoke("Query related searches for Bitcoin.", "google_trends_search", bad),
      final_answer("Top related queries: bitcoin price, btc usd.")};
  return {std::move(tc), FailureCategory::TaskDeviation};
}

DemoFixture missing_information() {
  TestCase tc;
  tc.case_id = "demo_missing_information";
  tc.query.text =
      "We are trying to determine the gender of someone named Alex from the United States, can you help?";
  ToolDocument doc;
  doc.tool_name = "predict_gender";
  doc.description = "Best guess of gender for a first name.";
  doc.parameters.push_back(param("names", ParamType::String, "First name to classify.", true));
  auto country = param("country_id", ParamType::String,
                       "ISO 3166-1 alpha-2 code scoping the prediction to one country.", false);
  country.format = "[A-Z]{2}";
  doc.parameters.push_back(std::move(country));
  tc.tools.push_back(doc);
  tc.query.mentions = {mention(tc.query.text, "Alex", "names", "predict_gender"),
                       mention(tc.query.text, "United States", "country_id", "predict_gender")};
  tc.oracle.push_back(
      {"predict_gender", {{"names", "Alex"}, {"country_id", "US"}}, {"names", "country_id"}});
  const Json bad = {{"names", "Alex"}};
  tc.scripted_returns.push_back(
      {"predict_gender", bad,
       ToolReturn::from_json(Json::array(
           {{{"count", 1665200}, {"name", "Alex"}, {"gender", "male"}, {"probability", 0.95}}}))});
  tc.replay_scripts["default"] = {
      invoke("Predict the gender for the name Alex.", "predict_gender", bad),
      final_answer("The gender prediction for Alex is male with a probability of 0.95.")};
  return {std::move(tc), FailureCategory::MissingInformation};
}

DemoFixture redundant_information() {
  TestCase tc;
  tc.case_id = "demo_redundant_information";
  tc.query.text =
      "I have experience as a project manager and am looking to transition into the tech industry. "
      "Can you provide some job options that might be suitable for me?";
  ToolDocument doc;
  doc.tool_name = "google_jobs_search";
  doc.description = "Job listings from Google Jobs.";
  doc.parameters.push_back(param("query", ParamType::String, "Job search terms.", true));
  doc.parameters.push_back(
      param("gl", ParamType::String, "Two-letter country code restricting the search.", false));
  tc.tools.push_back(doc);
  tc.query.mentions = {mention(tc.query.text, "tech industry", "query", "google_jobs_search")};
  tc.oracle.push_back({"google_jobs_search", {{"query", "tech industry"}}, {"query"}});
  const Json bad = {{"query", "tech industry"}, {"gl", "us"}};
  tc.scripted_returns.push_back(
      {"google_jobs_search", bad,
       ToolReturn::from_json(Json::array({{{"title", "Technology Director"}, {"company", "Bullhorn"}}}))});
  tc.replay_scripts["default"] = {
      invoke("Search tech industry jobs in the us.", "google_jobs_search", bad),
      final_answer("1. Technology Director at Bullhorn.")};
  return {std::move(tc), FailureCategory::RedundantInformation};
}

}  // namespace

std::vector<DemoFixture> demo_fixtures() {
  std::vector<DemoFixture> fixtures;
  fixtures.push_back(hallucination_name());
  fixtures.push_back(specification_mismatch());
  fixtures.push_back(task_deviation());
  fixtures.push_back(missing_information());
  fixtures.push_back(redundant_information());
  for (const auto& f : fixtures) validate(f.test_case);
  return fixtures;
}

std::vector<DemoOutcome> run_demo(std::ostream& out) {
  std::vector<DemoOutcome> outcomes;
  for (const auto& fixture : demo_fixtures()) {
    const TestCase& tc = fixture.test_case;
    ReplayDriver driver(ReplayDriver::script_for(tc, std::nullopt));
    const Trajectory traj = run_case(tc, std::nullopt, 0, driver);
    const auto calls = traj.invocations();
    const auto result = classify_trajectory(calls, tc.oracle, tc.tools);

    DemoOutcome o{tc.case_id, fixture.intended, false, {}};
    for (const auto& label : result.labels) {
      if (label.counted && label.has(fixture.intended) && !label.evidence_for(fixture.intended).empty()) {
        o.detected = true;
        o.label = label;
        break;
      }
    }

    out << (o.detected ? "ok   " : "FAIL ") << tc.case_id << "  expected "
        << short_name(fixture.intended) << "  flags";
    bool any = false;
    for (const auto& label : result.labels) {
      for (FailureCategory c : kAllCategories) {
        if (label.has(c)) {
          out << ' ' << short_name(c);
          any = true;
        }
      }
    }
    if (!any) out << " -";
    if (o.detected) {
      const Evidence& e = o.label.evidence_for(fixture.intended).front();
      out << "  [" << e.rule << " on '" << e.param_name << "']";
    }
    out << '\n';
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace toolfuzz
