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

#include <fstream>
#include <sstream>

#include "toolfuzz/campaign.hpp"
#include "toolfuzz/error.hpp"
#include "toolfuzz/metrics.hpp"

namespace toolfuzz {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CampaignTest : public ::testing::Test {
 protected:
  void SetUp() override {
    raw_ = slurp(fs::path(TOOLFUZZ_TEST_DATA_DIR) / "mock_corpus.json");
    cases_ = filter_cases(parse_corpus(raw_));
    dir_ = fs::temp_directory_path() /
           ("toolfuzz_campaign_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CampaignPlan plan(std::size_t workers, std::vector<OperatorId> ops) const {
    CampaignPlan p;
    p.cases = cases_;
    p.operators = std::move(ops);
    p.seed = 11;
    p.workers = workers;
    p.corpus_hash = corpus_hash(raw_);
    return p;
  }

  std::string raw_;
  std::vector<TestCase> cases_;
  fs::path dir_;
};

TEST_F(CampaignTest, FilteringKeepsTwentyCases) { EXPECT_EQ(cases_.size(), 20u); }

TEST_F(CampaignTest, LogIsIdenticalForAnyWorkerCount) {
  const std::vector<OperatorId> ops = {OperatorId::RD, OperatorId::CO, OperatorId::CF};
  const fs::path one = dir_ / "one.jsonl";
  const fs::path four = dir_ / "four.jsonl";
  const RunSummary s1 = run_campaign(plan(1, ops), replay_driver_factory(), one);
  run_campaign(plan(4, ops), replay_driver_factory(), four);
  EXPECT_EQ(s1.planned, 60u);
  EXPECT_EQ(s1.written, 60u);
  EXPECT_EQ(slurp(one), slurp(four));
  const auto events = read_log(one);
  ASSERT_EQ(events.size(), 61u);
  EXPECT_EQ(events[0]["event"], "campaign");
  EXPECT_EQ(events[1]["operator"], "RD");
  EXPECT_EQ(events[1]["case_id"], "c00");
  EXPECT_EQ(events[60]["operator"], "CF");
}

TEST_F(CampaignTest, ResumeSkipsFinishedRuns) {
  const fs::path log = dir_ / "log.jsonl";
  run_campaign(plan(2, {OperatorId::RD}), replay_driver_factory(), log);
  const std::string first = slurp(log);
  const RunSummary again = run_campaign(plan(2, {OperatorId::RD}), replay_driver_factory(), log);
  EXPECT_EQ(again.resumed, 20u);
  EXPECT_EQ(again.written, 0u);
  EXPECT_EQ(slurp(log), first);
  const RunSummary more = run_campaign(plan(2, {OperatorId::RD, OperatorId::RE}), replay_driver_factory(), log);
  EXPECT_EQ(more.resumed, 20u);
  EXPECT_EQ(more.written, 20u);
}

TEST_F(CampaignTest, ResumeRejectsADifferentCorpus) {
  const fs::path log = dir_ / "log.jsonl";
  run_campaign(plan(1, {OperatorId::RD}), replay_driver_factory(), log);
  CampaignPlan other = plan(1, {OperatorId::RD});
  other.corpus_hash = "different";
  EXPECT_THROW(run_campaign(other, replay_driver_factory(), log), Error);
}

TEST_F(CampaignTest, TruncatedFinalLineIsIgnored) {
  const fs::path log = dir_ / "log.jsonl";
  run_campaign(plan(1, {OperatorId::RD}), replay_driver_factory(), log);
  {
    std::ofstream out(log, std::ios::app);
    out << R"({"event":"trajectory","operator":"RE","ca)";
  }
  EXPECT_EQ(read_log(log).size(), 21u);
  {
    std::ofstream out(log, std::ios::app);
    out << "\n{\"event\":\"campaign\"}\n";
  }
  EXPECT_THROW(read_log(log), Error);
}

TEST_F(CampaignTest, ClassifyIsIdempotent) {
  const fs::path log = dir_ / "log.jsonl";
  run_campaign(plan(1, {OperatorId::RD}), replay_driver_factory(), log);
  EXPECT_EQ(classify_log(log, cases_), 20u);
  EXPECT_EQ(classify_log(log, cases_), 0u);
  const auto events = read_log(log);
  const CampaignResult result = CampaignResult::from_log(events);
  ASSERT_EQ(result.outcomes.size(), 20u);
  const Rate fr = failure_rate(result.for_operator("RD"));
  EXPECT_EQ(fr.percent(), "15.00");
}

TEST_F(CampaignTest, CorpusHashIsStable) {
  EXPECT_EQ(corpus_hash(raw_), corpus_hash(raw_));
  EXPECT_NE(corpus_hash(raw_), corpus_hash(raw_ + " "));
}

}  // namespace
}  // namespace toolfuzz
