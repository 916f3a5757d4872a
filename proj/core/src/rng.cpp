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

#include "toolfuzz/rng.hpp"

#include <numeric>
#include <string>

#include "toolfuzz/json.hpp"

namespace toolfuzz {

std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);
  return perm;
}

std::uint64_t derive_seed(std::uint64_t campaign_seed, std::string_view operator_id,
                          std::string_view case_id) {
  std::string key;
  key.append(operator_id);
  key.push_back('\x1f');
  key.append(case_id);
  SplitMix64 mix(campaign_seed ^ fnv1a64(key));
  return mix.next();
}

}  // namespace toolfuzz
