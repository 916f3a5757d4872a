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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "toolfuzz/classifier.hpp"
#include "toolfuzz/error.hpp"

namespace toolfuzz {
namespace {

using C = FailureCategory;

ObservedInvocation obs(const std::string& tool, const char* args) {
  return {tool, Json::parse(args), args, std::nullopt};
}

OracleInvocation oracle(const std::string& tool, const char* args) {
  OracleInvocation o{tool, Json::parse(args), {}};
  for (auto it = o.arguments.begin(); it != o.arguments.end(); ++it) o.needed_params.insert(it.key());
  return o;
}

ToolDocument threads_doc() {
  ToolDocument d;
  d.tool_name = "get_threads";
  d.parameters.push_back({"board", ParamType::String, "board", true, {}, {}, {}, {}});
  return d;
}

std::vector<C> flags_of(const FailureLabel& l) {
  std::vector<C> out;
  for (C c : kAllCategories) {
    if (l.has(c)) out.push_back(c);
  }
  return out;
}

const ToolDocument& trends() {
  static const ToolDocument doc = testgen::trends_case().tools[0];
  return doc;
}

TEST(Hallucination, NameOutsideSchema) {
  const auto r = detect_hallucination_name(obs("get_threads", R"({"board":"mu","page_size":"5"})"), threads_doc());
  EXPECT_TRUE(r.flag);
  ASSERT_EQ(r.evidence.size(), 1u);
  EXPECT_EQ(r.evidence[0].param_name, "page_size");
  EXPECT_FALSE(detect_hallucination_name(obs("get_threads", R"({"board":"mu"})"), threads_doc()).flag);
  // names are case-sensitive
  EXPECT_TRUE(detect_hallucination_name(obs("get_threads", R"({"Board":"mu"})"), threads_doc()).flag);
}

TEST(Missing, NeededParamAbsent) {
  ToolDocument d;
  d.tool_name = "predict_gender";
  d.parameters = {{"names", ParamType::String, "", true, {}, {}, {}, {}},
                  {"country_id", ParamType::String, "", false, {}, {}, {}, {}}};
  const auto o = oracle("predict_gender", R"({"names":"Alex","country_id":"US"})");
  const auto r = detect_missing(obs("predict_gender", R"({"names":"Alex"})"), o, d);
  EXPECT_TRUE(r.flag);
  EXPECT_EQ(r.evidence[0].rule, "task_needed");
  EXPECT_FALSE(detect_missing(obs("predict_gender", R"({"names":"Alex","country_id":"US"})"), o, d).flag);
  OracleInvocation none = o;
  none.needed_params.clear();
  EXPECT_FALSE(detect_missing(obs("predict_gender", "{}"), none, d).flag);
  EXPECT_EQ(detect_missing(obs("predict_gender", R"({"country_id":"US"})"), o, d).evidence[0].rule,
            "schema_required");
}

TEST(Redundant, InSchemaExtraOnly) {
  ToolDocument d;
  d.tool_name = "google_jobs_search";
  d.parameters = {{"query", ParamType::String, "", true, {}, {}, {}, {}},
                  {"gl", ParamType::String, "", false, {}, {}, {}, {}}};
  const auto o = oracle("google_jobs_search", R"({"query":"tech industry"})");
  EXPECT_TRUE(detect_redundant(obs("google_jobs_search", R"({"query":"tech industry","gl":"us"})"), o, d).flag);
  EXPECT_FALSE(detect_redundant(obs("google_jobs_search", R"({"query":"x"})"), o, d).flag);
  // out-of-schema extras belong to hallucination
  const auto label = classify_invocation(obs("google_jobs_search", R"({"query":"tech industry","hl":"en"})"), o, d);
  EXPECT_EQ(flags_of(label), (std::vector<C>{C::HallucinationName}));
}

TEST(SpecMismatch, Rules) {
  EXPECT_TRUE(detect_spec_mismatch(obs("google_trends_search", R"({"query":"Bitcoin","region":"world"})"), trends()).flag);
  EXPECT_FALSE(detect_spec_mismatch(obs("google_trends_search", R"({"query":"b","limit":5})"), trends()).flag);
  const auto r = detect_spec_mismatch(obs("google_trends_search", R"({"query":"b","limit":"5"})"), trends());
  EXPECT_TRUE(r.flag);
  EXPECT_EQ(r.evidence[0].rule, "type");
}

TEST(TaskDeviation, ValueDiffers) {
  const auto o = oracle("google_trends_search", R"({"query":"Bitcoin","region":"AU"})");
  const auto r = detect_task_deviation(obs("google_trends_search", R"({"query":"Bitcoin","region":"US"})"), o);
  EXPECT_TRUE(r.flag);
  ASSERT_EQ(r.evidence.size(), 1u);
  EXPECT_EQ(r.evidence[0].param_name, "region");
  ASSERT_TRUE(r.rouge.has_value());
  EXPECT_EQ(*r.rouge, 0.0);
  EXPECT_FALSE(detect_task_deviation(obs("google_trends_search", R"({"query":"Bitcoin","region":"AU"})"), o).flag);
  const auto n = oracle("t", R"({"n":5})");
  EXPECT_FALSE(detect_task_deviation(obs("t", R"({"n":5.0})"), n).flag);
}

TEST(ClassifyInvocation, Reflexive) {
  const auto o = oracle("google_trends_search", R"({"query":"Bitcoin","region":"AU"})");
  const auto label = classify_invocation(obs("google_trends_search", R"({"query":"Bitcoin","region":"AU"})"), o, trends());
  EXPECT_TRUE(label.pass());
  EXPECT_TRUE(flags_of(label).empty());
}

TEST(ClassifyInvocation, ThreadsPageSizeIsHallucinationOnly) {
  const auto label = classify_invocation(obs("get_threads", R"({"board":"mu","page_size":"5"})"),
                                         oracle("get_threads", R"({"board":"mu"})"), threads_doc());
  EXPECT_EQ(flags_of(label), (std::vector<C>{C::HallucinationName}));
}

TEST(ClassifyInvocation, PlantedMultiFailure) {
  const auto o = oracle("google_trends_search", R"({"query":"Bitcoin","region":"AU"})");
  const auto label =
      classify_invocation(obs("google_trends_search", R"({"query":"Bitcoin","region":"US","limit":10})"), o, trends());
  EXPECT_EQ(flags_of(label), (std::vector<C>{C::TaskDeviation, C::RedundantInformation}));
}

TEST(ClassifyInvocation, AddingInSchemaExtraFlipsOnlyRedundant) {
  const auto o = oracle("google_trends_search", R"({"query":"Bitcoin"})");
  const auto base = classify_invocation(obs("google_trends_search", R"({"query":"Bitcoin"})"), o, trends());
  const auto more = classify_invocation(obs("google_trends_search", R"({"query":"Bitcoin","limit":3})"), o, trends());
  EXPECT_TRUE(base.pass());
  EXPECT_EQ(flags_of(more), (std::vector<C>{C::RedundantInformation}));
}

TEST(ClassifyInvocation, ToolMismatchThrows) {
  try {
    classify_invocation(obs("a", "{}"), oracle("b", "{}"), threads_doc());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ToolMismatch);
  }
}

TEST(ClassifyTrajectory, AlignmentRules) {
  const std::vector<ToolDocument> tools = {trends(), threads_doc()};
  const std::vector<OracleInvocation> orc = {oracle("google_trends_search", R"({"query":"Bitcoin","region":"AU"})"),
                                             oracle("get_threads", R"({"board":"mu"})")};
  // a retry, an unknown tool, and a missing second oracle call
  const std::vector<ObservedInvocation> traj = {
      obs("google_trends_search", R"({"query":"Bitcoin","region":"US"})"),
      obs("google_trends_search", R"({"query":"Bitcoin","region":"AU"})"),
      obs("made_up", R"({})"),
  };
  const auto result = classify_trajectory(traj, orc, tools);
  EXPECT_FALSE(result.case_pass);
  ASSERT_EQ(result.labels.size(), 4u);
  EXPECT_TRUE(result.labels[0].counted);
  EXPECT_TRUE(result.labels[0].has(C::TaskDeviation));
  EXPECT_FALSE(result.labels[1].counted);
  EXPECT_TRUE(result.labels[1].pass());
  EXPECT_FALSE(result.labels[2].counted);
  EXPECT_TRUE(result.labels[2].has(C::HallucinationName));
  EXPECT_TRUE(result.labels[3].counted);
  EXPECT_TRUE(result.labels[3].has(C::MissingInformation));
  EXPECT_EQ(result.labels[3].evidence_for(C::MissingInformation)[0].rule, "invocation_not_attempted");
}

TEST(ClassifyTrajectory, PassingTrajectory) {
  const std::vector<ToolDocument> tools = {trends()};
  const std::vector<OracleInvocation> orc = {oracle("google_trends_search", R"({"query":"Bitcoin"})")};
  const std::vector<ObservedInvocation> traj = {obs("google_trends_search", R"({"query":"Bitcoin"})")};
  EXPECT_TRUE(classify_trajectory(traj, orc, tools).case_pass);
}

TEST(FailureLabel, JsonRoundTrip) {
  const auto o = oracle("google_trends_search", R"({"query":"Bitcoin","region":"AU"})");
  auto label = classify_invocation(obs("google_trends_search", R"({"query":"Bit","region":"world"})"), o, trends());
  label.observed_index = 2;
  label.oracle_index = 0;
  const auto back = FailureLabel::from_json(label.to_json());
  EXPECT_EQ(back.to_json(), label.to_json());
  EXPECT_EQ(back.flags, label.flags);
  EXPECT_EQ(back.rouge_td, label.rouge_td);
}

TEST(ParseInvocation, MalformedArgumentsKeepRawText) {
  const auto inv = parse_invocation("t", "{\"a\": ");
  EXPECT_TRUE(inv.parse_error.has_value());
  EXPECT_TRUE(inv.arguments.empty());
  EXPECT_EQ(inv.raw_text, "{\"a\": ");
  EXPECT_FALSE(parse_invocation("t", R"({"a":1})").parse_error.has_value());
}

}  // namespace
}  // namespace toolfuzz
