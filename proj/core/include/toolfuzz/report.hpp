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

#include <filesystem>
#include <string>

#include "toolfuzz/json.hpp"
#include "toolfuzz/metrics.hpp"

namespace toolfuzz {

inline constexpr std::string_view kReportJson = "report.json";
inline constexpr std::string_view kReportCsv = "report_table.csv";
inline constexpr std::string_view kReportMarkdown = "report.md";

// Builders are pure functions of the campaign result, so regenerating a
// report from the same log yields identical bytes.
Json build_report_json(const CampaignResult& result);
std::string build_report_csv(const CampaignResult& result);
std::string build_report_markdown(const CampaignResult& result);

// Writes the three report files into out_dir. Throws IoError.
void emit_report(const CampaignResult& result, const std::filesystem::path& out_dir);

}  // namespace toolfuzz
