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

#include <string>

#include "toolfuzz/corpus.hpp"

namespace toolfuzz::testgen {

// One case in the documented corpus format: a trends search for Bitcoin in
// Australia with both values annotated.
inline std::string trends_corpus_json() {
  return R"json({
  "schema_version": 1,
  "cases": [
    {
      "case_id": "trends_au",
      "query": {
        "text": "Top queries for Bitcoin in Australia",
        "mentions": [
          {"span": [16, 23], "param_name": "query", "tool_name": "google_trends_search", "value_text": "Bitcoin"},
          {"span": [27, 36], "param_name": "region", "tool_name": "google_trends_search", "value_text": "Australia"}
        ]
      },
      "tools": [
        {
          "tool_name": "google_trends_search",
          "description": "Related queries from Google Trends.",
          "parameters": [
            {"name": "query", "ptype": "string", "description": "search term", "required": true, "example": "Ethereum"},
            {"name": "region", "ptype": "string", "description": "two-letter region code", "enum_values": ["US", "AU", "JP"]},
            {"name": "limit", "ptype": "integer", "description": "max items", "range": [1, 50]}
          ],
          "usage_examples": ["google_trends_search(query=\"Ethereum\", region=\"US\")"]
        }
      ],
      "oracle": [
        {"tool_name": "google_trends_search", "arguments": {"query": "Bitcoin", "region": "AU"}}
      ],
      "scripted_returns": [
        {"tool_name": "google_trends_search", "arguments": {"region": "AU", "query": "Bitcoin"},
         "return": {"payload": {"related": [{"query_id": 7, "text": "bitcoin price"}], "total_count": 1}}}
      ]
    }
  ]
})json";
}

inline TestCase trends_case() { return parse_corpus(trends_corpus_json()).front(); }

}  // namespace toolfuzz::testgen
