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

#include <cstdint>
#include <string>
#include <vector>

#include "toolfuzz/corpus.hpp"
#include "toolfuzz/json.hpp"
#include "toolfuzz/rng.hpp"

// Seeded random inputs for property tests.
namespace toolfuzz::testgen {

std::string word(SplitMix64& rng);
std::string phrase(SplitMix64& rng, std::size_t min_words, std::size_t max_words);

struct DocShape {
  std::size_t min_params = 1;
  std::size_t max_params = 6;
  bool distinct_descriptions = false;
  bool force_required = false;  // at least one required parameter
  bool force_examples = false;  // at least one example somewhere
};

ToolDocument random_doc(SplitMix64& rng, const DocShape& shape = {});

// Filler words interleaved with 0..max_mentions annotated values. Some
// values carry non-ASCII letters and combining marks.
AnnotatedQuery random_query(SplitMix64& rng, std::size_t min_mentions, std::size_t max_mentions);

// Nested object/array JSON. Keys within one object never collide under
// camel_case or snake_case, so key rewriting cannot merge siblings.
Json random_json(SplitMix64& rng, int max_depth = 3);
// Root is always an object or array.
Json random_container(SplitMix64& rng, int max_depth = 3);

// Canonical dumps of every scalar leaf, sorted.
std::vector<std::string> leaf_multiset(const Json& j);

// Independent LCS: memoized top-down recursion over the full table.
std::size_t lcs_oracle(const std::vector<std::string>& a, const std::vector<std::string>& b);
// ROUGE-L F1 written directly from its definition.
double rouge_oracle(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

}  // namespace toolfuzz::testgen
