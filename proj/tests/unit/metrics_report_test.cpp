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

#include "toolfuzz/error.hpp"
#include "toolfuzz/metrics.hpp"
#include "toolfuzz/report.hpp"

namespace toolfuzz {
namespace {

FailureLabel label(std::initializer_list<FailureCategory> flags) {
  FailureLabel l;
  l.tool_name = "t";
  for (FailureCategory c : flags) l.flags[static_cast<std::size_t>(c)] = true;
  return l;
}

CaseOutcome outcome(std::string id, std::vector<FailureLabel> labels, std::string op = "RD") {
  CaseOutcome o;
  o.op = std::move(op);
  o.case_id = std::move(id);
  o.labels = std::move(labels);
  o.case_pass = true;
  for (const auto& l : o.labels) o.case_pass = o.case_pass && (!l.counted || l.pass());
  return o;
}

std::vector<CaseOutcome> passes_and_fails(std::size_t pass, std::size_t fail) {
  std::vector<CaseOutcome> out;
  for (std::size_t i = 0; i < pass; ++i) out.push_back(outcome("p" + std::to_string(i), {label({})}));
  for (std::size_t i = 0; i < fail; ++i) {
    out.push_back(outcome("f" + std::to_string(i), {label({FailureCategory::MissingInformation})}));
  }
  return out;
}

TEST(Rate, PercentRoundsHalfUp) {
  EXPECT_EQ((Rate{3, 20}).percent(), "15.00");
  EXPECT_EQ((Rate{1, 3}).percent(), "33.33");
  EXPECT_EQ((Rate{2, 3}).percent(), "66.67");
  EXPECT_EQ((Rate{1, 8}).percent(), "12.50");
  EXPECT_EQ((Rate{1, 80000}).percent(), "0.00");
  EXPECT_EQ((Rate{1, 20000}).percent(), "0.01");  // exactly half a hundredth
  EXPECT_EQ((Rate{0, 0}).percent(), "n/a");
  EXPECT_FALSE((Rate{0, 0}).value().has_value());
}

TEST(FailureRate, SeventeenOfTwenty) {
  const auto o = passes_and_fails(17, 3);
  const Rate fr = failure_rate(o);
  EXPECT_EQ(fr.hits, 3u);
  EXPECT_EQ(fr.total, 20u);
  EXPECT_EQ(fr.percent(), "15.00");
}

TEST(FailureRate, Extremes) {
  EXPECT_EQ(*failure_rate(passes_and_fails(5, 0)).value(), 0.0);
  EXPECT_EQ(*failure_rate(passes_and_fails(0, 5)).value(), 1.0);
}

TEST(FailureRate, EmptyCampaignThrows) {
  std::vector<CaseOutcome> none;
  try {
    failure_rate(none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyCampaign);
  }
  auto skipped = passes_and_fails(2, 0);
  for (auto& o : skipped) o.perturbed = false;
  EXPECT_THROW(failure_rate(skipped), Error);
}

TEST(FailureRate, ExcludedRuns) {
  auto o = passes_and_fails(2, 2);
  o[0].status = TrajectoryStatus::Skipped;
  o[2].status = TrajectoryStatus::DriverError;
  CaseOutcome limit = outcome("limit", {});
  limit.status = TrajectoryStatus::StepLimitExceeded;
  limit.case_pass = false;
  o.push_back(limit);
  const Rate fr = failure_rate(o);
  EXPECT_EQ(fr.total, 3u);
  EXPECT_EQ(fr.hits, 2u);
}

TEST(CategoryRates, CaseCountsOncePerCategory) {
  std::vector<CaseOutcome> o = {
      outcome("a", {label({FailureCategory::TaskDeviation}), label({FailureCategory::TaskDeviation})}),
      outcome("b", {label({FailureCategory::TaskDeviation, FailureCategory::RedundantInformation})}),
      outcome("c", {label({})}),
      outcome("d", {label({})}),
  };
  const auto rates = category_rates(o);
  EXPECT_EQ(rates[0].percent(), "50.00");
  EXPECT_EQ(rates[4].percent(), "25.00");
  EXPECT_EQ(rates[2].percent(), "0.00");
}

TEST(CategoryRates, UncountedLabelsIgnored) {
  FailureLabel retry = label({FailureCategory::HallucinationName});
  retry.counted = false;
  std::vector<CaseOutcome> o = {outcome("a", {label({}), retry})};
  EXPECT_TRUE(o[0].case_pass);
  EXPECT_EQ(category_rates(o)[2].hits, 0u);
  EXPECT_EQ(failure_rate(o).hits, 0u);
}

TEST(Rouge, ExceedanceShare) {
  FailureLabel hi = label({FailureCategory::TaskDeviation});
  hi.rouge_td = 0.9;
  FailureLabel lo = label({FailureCategory::TaskDeviation});
  lo.rouge_td = 0.7;
  std::vector<CaseOutcome> o = {outcome("a", {hi}), outcome("b", {lo})};
  const auto r = rouge_exceedance(o);
  EXPECT_EQ(r.td.percent(), "50.00");
  EXPECT_EQ(r.sm.percent(), "n/a");
  EXPECT_EQ(r.joint.percent(), "50.00");
  FailureLabel edge = label({FailureCategory::TaskDeviation});
  edge.rouge_td = 0.8;
  std::vector<CaseOutcome> e = {outcome("e", {edge})};
  EXPECT_EQ(rouge_exceedance(e).td.percent(), "100.00");
}

TEST(Rouge, NoScoresIsNotApplicable) {
  std::vector<CaseOutcome> o = {outcome("a", {label({FailureCategory::MissingInformation})})};
  const auto r = rouge_exceedance(o);
  EXPECT_EQ(r.td.percent(), "n/a");
  EXPECT_EQ(r.joint.percent(), "n/a");
}

TEST(TransferMatrix, SmallExample) {
  std::vector<CaseOutcome> o = {
      outcome("a", {label({FailureCategory::TaskDeviation, FailureCategory::RedundantInformation})}),
      outcome("b", {label({FailureCategory::TaskDeviation})}),
  };
  const TransferMatrix m = transfer_matrix(o);
  EXPECT_EQ(m.counts[0][0], 2u);
  EXPECT_EQ(m.counts[0][4], 1u);
  EXPECT_EQ(m.counts[4][0], 1u);
  EXPECT_EQ(m.counts[4][4], 1u);
  EXPECT_EQ(m.counts[1][1], 0u);
  const auto n = m.normalized();
  EXPECT_DOUBLE_EQ(*n[0][4], 0.5);
  EXPECT_DOUBLE_EQ(*n[4][0], 1.0);
  EXPECT_FALSE(n[1][0].has_value());
  const InvocationCounts ic = invocation_counts(o);
  EXPECT_EQ(ic.invocations, 2u);
  EXPECT_EQ(ic.failing, 2u);
  EXPECT_EQ(ic.per_category[0], 2u);
}

CampaignResult sample_result() {
  CampaignResult r;
  CampaignMetadata meta;
  meta.corpus_hash = "abc";
  meta.driver = "replay";
  meta.operators = {"RD", "CF"};
  meta.case_ids = {"a", "b"};
  r.metadata = meta;
  FailureLabel td = label({FailureCategory::TaskDeviation});
  td.rouge_td = 0.85;
  r.outcomes = {outcome("a", {td}, "RD"), outcome("b", {label({})}, "RD"),
                outcome("a", {label({})}, "CF"), outcome("b", {label({})}, "CF")};
  r.outcomes[3].perturbed = false;
  return r;
}

TEST(Report, CsvLayout) {
  const std::string csv = build_report_csv(sample_result());
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(header, "category,RD,RE,WD,SD,CO,WT,RPF,RPL,CP,AN,FK,AP,CK,UK,CF");
  EXPECT_NE(csv.find("\nTD,50.00,n/a,"), std::string::npos);
  EXPECT_NE(csv.find("\nFR,50.00,"), std::string::npos);
  EXPECT_NE(csv.find("\nRougeL>=0.8,100.00,"), std::string::npos);
}

TEST(Report, JsonCountsAndRegeneration) {
  const CampaignResult r = sample_result();
  const Json j = build_report_json(r);
  EXPECT_EQ(j["operators"]["RD"]["n_total"], 2);
  EXPECT_EQ(j["operators"]["RD"]["n_pass"], 1);
  EXPECT_EQ(j["operators"]["CF"]["n_total"], 1);
  EXPECT_EQ(j["operators"]["CF"]["not_counted"], 1);
  EXPECT_EQ(build_report_json(r).dump(), j.dump());
  EXPECT_EQ(build_report_markdown(r), build_report_markdown(sample_result()));
}

TEST(Report, EmitWritesThreeFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "toolfuzz_report_test";
  std::filesystem::remove_all(dir);
  emit_report(sample_result(), dir);
  EXPECT_TRUE(std::filesystem::exists(dir / kReportJson));
  EXPECT_TRUE(std::filesystem::exists(dir / kReportCsv));
  EXPECT_TRUE(std::filesystem::exists(dir / kReportMarkdown));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace toolfuzz
