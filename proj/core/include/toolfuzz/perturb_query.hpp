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

#include <functional>
#include <string>
#include <string_view>

#include "toolfuzz/corpus.hpp"
#include "toolfuzz/perturbation.hpp"

namespace toolfuzz::query_ops {

enum class RewriterKind { Complicate, Noise };

std::string_view to_string(RewriterKind kind);

// Pluggable value rewriter for CP (complicate) and AN (noise). The function
// must be deterministic; an empty result is rejected with InvalidArgument.
struct Rewriter {
  RewriterKind kind = RewriterKind::Complicate;
  std::string name;
  std::function<std::string(std::string_view)> fn;

  std::string operator()(std::string_view value) const;
};

// "the value that would be written as '<value>'"
Rewriter default_complicate();
// See noise_distractor.
Rewriter default_noise();

// Numeric literals move by +1 (keeping the number of fraction digits);
// otherwise the first ASCII letter and the letter at the middle code point
// have their case flipped ("Bitcoin" -> "bitCoin"); values without ASCII
// letters become "not <value>". Never returns `value` itself.
std::string noise_distractor(std::string_view value);

// Excise mentions.front() / mentions.back() and normalize whitespace at the
// seam: one space between words, none before [.,!?;:], none at the ends.
Perturbed<AnnotatedQuery> rp_first(const AnnotatedQuery& q);
Perturbed<AnnotatedQuery> rp_last(const AnnotatedQuery& q);

Perturbed<AnnotatedQuery> cp(const AnnotatedQuery& q, const Rewriter& rewriter = default_complicate());

// Appends one "Unrelated note: <distractor>." sentence per mention.
// The original text is a prefix of the result and the mentions are unchanged.
Perturbed<AnnotatedQuery> an(const AnnotatedQuery& q, const Rewriter& rewriter = default_noise());

}  // namespace toolfuzz::query_ops
