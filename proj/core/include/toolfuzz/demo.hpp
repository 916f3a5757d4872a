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

#include <iosfwd>
#include <string>
#include <vector>

#include "toolfuzz/classifier.hpp"
#include "toolfuzz/corpus.hpp"

namespace toolfuzz {

// A scripted trajectory whose classification is known in advance.
struct DemoFixture {
  TestCase test_case;
  FailureCategory intended;
};

// Five fixtures, one per failure category, transcribing well-known
// parameter-filling failures (hallucinated name, enum mismatch, wrong
// country, dropped scope, unrequested extra argument).
std::vector<DemoFixture> demo_fixtures();

struct DemoOutcome {
  std::string case_id;
  FailureCategory intended;
  bool detected = false;  // intended flag set with non-empty evidence
  FailureLabel label;     // the counted label that carried the flag, if any
};

// Replays and classifies every fixture. Writes one line per fixture to `out`.
std::vector<DemoOutcome> run_demo(std::ostream& out);

}  // namespace toolfuzz
