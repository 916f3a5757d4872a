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

#include "fixtures.hpp"
#include "generators.hpp"
#include "toolfuzz/error.hpp"
#include "toolfuzz/perturb_doc.hpp"
#include "toolfuzz/perturb_query.hpp"
#include "toolfuzz/perturb_return.hpp"

namespace {

using namespace toolfuzz;

std::vector<ToolDocument> docs(std::size_t n) {
  SplitMix64 rng(7);
  testgen::DocShape shape;
  shape.force_required = true;
  std::vector<ToolDocument> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(testgen::random_doc(rng, shape));
  return out;
}

void BM_DocCo(benchmark::State& state) {
  const auto pool = docs(64);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(doc_ops::co(pool[seed % pool.size()], seed));
    } catch (const Error&) {
    }
    ++seed;
  }
}
BENCHMARK(BM_DocCo);

void BM_DocWt(benchmark::State& state) {
  const auto pool = docs(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(doc_ops::wt(pool[i++ % pool.size()]));
}
BENCHMARK(BM_DocWt);

void BM_QueryNoise(benchmark::State& state) {
  const AnnotatedQuery q = testgen::trends_case().query;
  for (auto _ : state) benchmark::DoNotOptimize(query_ops::an(q));
}
BENCHMARK(BM_QueryNoise);

std::vector<ToolReturn> returns(std::size_t n, int depth) {
  SplitMix64 rng(11);
  std::vector<ToolReturn> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ToolReturn::from_json(testgen::random_container(rng, depth)));
  return out;
}

template <OperatorId Op>
void BM_Return(benchmark::State& state) {
  const auto pool = returns(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(return_ops::apply(Op, pool[i++ % pool.size()]));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_Return<OperatorId::FK>)->Arg(2)->Arg(4);
BENCHMARK(BM_Return<OperatorId::CK>)->Arg(2)->Arg(4);
BENCHMARK(BM_Return<OperatorId::CF>)->Arg(2)->Arg(4);

}  // namespace
