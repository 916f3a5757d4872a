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

#include "toolfuzz/rng.hpp"
#include "toolfuzz/rouge.hpp"

namespace {

toolfuzz::TokenSequence random_tokens(toolfuzz::SplitMix64& rng, std::size_t n) {
  static const char* vocab[] = {"alpha", "beta", "gamma", "delta", "eps", "zeta", "eta", "theta"};
  toolfuzz::TokenSequence out(n);
  for (auto& t : out) t = vocab[rng.below(8)];
  return out;
}

void BM_RougeL(benchmark::State& state) {
  toolfuzz::SplitMix64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_tokens(rng, n);
  const auto b = random_tokens(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(toolfuzz::rouge_l(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RougeL)->RangeMultiplier(4)->Range(4, 1024)->Complexity(benchmark::oNSquared);

void BM_Tokenize(benchmark::State& state) {
  const std::string text = "Find the latest news about offshore wind turbine blade recycling in Japan.";
  for (auto _ : state) benchmark::DoNotOptimize(toolfuzz::tokenize(text));
}
BENCHMARK(BM_Tokenize);

}  // namespace
BENCHMARK_MAIN();
