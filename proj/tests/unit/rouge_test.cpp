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

#include "generators.hpp"
#include "toolfuzz/rouge.hpp"

namespace toolfuzz {
namespace {

TEST(Rouge, WorkedExample) {
  const double f = rouge_l("the cat sat", "the cat ran fast");
  EXPECT_EQ(lcs_length(tokenize("the cat sat"), tokenize("the cat ran fast")), 2u);
  EXPECT_DOUBLE_EQ(f, 4.0 / 7.0);
  EXPECT_NEAR(f, 0.571, 5e-4);
}

TEST(Rouge, IdenticalAndDisjoint) {
  EXPECT_EQ(rouge_l("a b c", "a b c"), 1.0);
  EXPECT_EQ(rouge_l("a b c", "d e f"), 0.0);
  EXPECT_EQ(rouge_l("", "a"), 0.0);
  EXPECT_EQ(rouge_l("", ""), 0.0);
}

TEST(Rouge, TokenizerLowercasesAndDropsPunctuation) {
  EXPECT_EQ(tokenize("Hello, World! it's  fine"),
            (TokenSequence{"hello", "world", "it", "s", "fine"}));
  EXPECT_EQ(tokenize("Zürich-Nord"), (TokenSequence{"zürich", "nord"}));
  EXPECT_EQ(rouge_l("US", "us"), 1.0);
}

TEST(Rouge, SymmetricAndMatchesOracle) {
  SplitMix64 rng(2024);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e"};
  for (int i = 0; i < 300; ++i) {
    TokenSequence x, y;
    const auto nx = rng.below(20), ny = rng.below(20);
    for (std::uint64_t k = 0; k < nx; ++k) x.push_back(vocab[rng.below(vocab.size())]);
    for (std::uint64_t k = 0; k < ny; ++k) y.push_back(vocab[rng.below(vocab.size())]);
    EXPECT_EQ(lcs_length(x, y), testgen::lcs_oracle(x, y));
    EXPECT_EQ(rouge_l(x, y), rouge_l(y, x));
    EXPECT_EQ(rouge_l(x, y), testgen::rouge_oracle(x, y));
  }
}

}  // namespace
}  // namespace toolfuzz
