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

#include "toolfuzz/json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace toolfuzz {

Json canonicalize(const Json& value) {
  switch (value.type()) {
    case Json::value_t::object: {
      std::vector<std::pair<std::string, const Json*>> entries;
      entries.reserve(value.size());
      for (auto it = value.begin(); it != value.end(); ++it) {
        entries.emplace_back(it.key(), &it.value());
      }
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      Json out = Json::object();
      for (const auto& [key, child] : entries) out[key] = canonicalize(*child);
      return out;
    }
    case Json::value_t::array: {
      Json out = Json::array();
      for (const auto& child : value) out.push_back(canonicalize(child));
      return out;
    }
    case Json::value_t::number_float: {
      const double d = value.get<double>();
      if (std::isfinite(d) && std::trunc(d) == d &&
          d >= static_cast<double>(std::numeric_limits<std::int64_t>::min()) &&
          d < static_cast<double>(std::numeric_limits<std::int64_t>::max())) {
        return Json(static_cast<std::int64_t>(d));
      }
      return value;
    }
    case Json::value_t::number_unsigned: {
      const auto u = value.get<std::uint64_t>();
      if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        return Json(static_cast<std::int64_t>(u));
      }
      return value;
    }
    default:
      return value;
  }
}

std::string canonical_dump(const Json& value) { return canonicalize(value).dump(); }

bool canonical_equal(const Json& a, const Json& b) {
  return canonical_dump(a) == canonical_dump(b);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
    value >>= 4;
  }
  return out;
}

std::string canonical_args_hash(const Json& arguments) {
  return hex64(fnv1a64(canonical_dump(arguments)));
}

std::string stringify(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return canonical_dump(value);
}

}  // namespace toolfuzz
