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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toolfuzz {

using TokenSequence = std::vector<std::string>;

// ASCII-lowercases, splits on whitespace and ASCII punctuation, and drops
// the punctuation. Non-ASCII bytes are kept inside tokens.
TokenSequence tokenize(std::string_view text);

// Longest common subsequence length, O(|a|*|b|) time, O(min) memory.
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

// F-measure form of ROUGE-L with beta = 1:
//   P = LCS/|candidate|, R = LCS/|reference|, F = 2PR/(P+R), F = 0 if LCS = 0.
// Symmetric in its arguments.
double rouge_l_from_lcs(std::size_t lcs, std::size_t candidate_len, std::size_t reference_len);
double rouge_l(const TokenSequence& candidate, const TokenSequence& reference);
double rouge_l(std::string_view candidate, std::string_view reference);

}  // namespace toolfuzz
