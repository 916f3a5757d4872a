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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toolfuzz/campaign.hpp"
#include "toolfuzz/metrics.hpp"
#include "toolfuzz/report.hpp"

namespace {

using namespace toolfuzz;
namespace fs = std::filesystem;

std::string mock_corpus() {
  std::ifstream in(fs::path(TOOLFUZZ_TEST_DATA_DIR) / "mock_corpus.json", std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Full 20 x 15 replay campaign plus classification, per worker count.
void BM_MockCampaign(benchmark::State& state) {
  const std::string raw = mock_corpus();
  CampaignPlan plan;
  plan.cases = filter_cases(parse_corpus(raw));
  plan.workers = static_cast<std::size_t>(state.range(0));
  plan.corpus_hash = corpus_hash(raw);
  const fs::path log = fs::temp_directory_path() / "toolfuzz_bench_campaign.jsonl";
  for (auto _ : state) {
    fs::remove(log);
    run_campaign(plan, replay_driver_factory(), log);
    classify_log(log, plan.cases);
    const auto events = read_log(log);
    benchmark::DoNotOptimize(build_report_json(CampaignResult::from_log(events)));
  }
  fs::remove(log);
}
BENCHMARK(BM_MockCampaign)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
