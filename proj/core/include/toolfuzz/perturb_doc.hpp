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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toolfuzz/corpus.hpp"
#include "toolfuzz/perturbation.hpp"

// Tool-document operators. Each is a pure function of its inputs; the ones
// that draw randomness take an explicit seed. Unperturbable inputs raise a
// skip Error (NoRequiredParams, NoExamples, NoDonor, TooFewParams,
// NoDistinctPair) instead of returning the document unchanged.
namespace toolfuzz::doc_ops {

using IndexPair = std::pair<std::size_t, std::size_t>;

// Fixed derangement of the six parameter types used by WT.
ParamType wrong_type(ParamType type);

// Empties the description of every required parameter.
Perturbed<ToolDocument> rd(const ToolDocument& doc);

// Erases usage examples and per-parameter examples.
Perturbed<ToolDocument> re(const ToolDocument& doc);

// Replaces every parameter description with one drawn from parameters of
// other tools in `donors`. The pool is shuffled with `seed` and walked
// cyclically; a draw equal to the original is skipped when the pool has an
// alternative, otherwise the collision is recorded in details.collisions.
Perturbed<ToolDocument> wd(const ToolDocument& doc, std::span<const ToolDocument> donors,
                           std::uint64_t seed);

// Moves every parameter type one step along wrong_type. Ranges are dropped
// when the new type is not numeric so the document stays valid.
Perturbed<ToolDocument> wt(const ToolDocument& doc);

// Swaps the descriptions at `pair`, or at the first (by index) pair whose
// descriptions differ.
Perturbed<ToolDocument> sd(const ToolDocument& doc, std::optional<IndexPair> pair = {});

// Reassigns descriptions by a seeded non-identity permutation:
// new description[i] = old description[perm[i]].
Perturbed<ToolDocument> co(const ToolDocument& doc, std::uint64_t seed);

struct DocPerturbSpec {
  OperatorId op = OperatorId::RD;
  std::uint64_t seed = 0;
  std::optional<IndexPair> sd_pair;
  std::vector<ToolDocument> donor_pool;
};

// Dispatches on spec.op, which must be a document operator.
Perturbed<ToolDocument> apply(const ToolDocument& doc, const DocPerturbSpec& spec);

}  // namespace toolfuzz::doc_ops
