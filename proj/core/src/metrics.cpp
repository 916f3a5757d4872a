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

#include "toolfuzz/metrics.hpp"

#include <map>
#include <tuple>

#include "toolfuzz/error.hpp"

namespace toolfuzz {

bool CaseOutcome::counts() const {
  return perturbed &&
         (status == TrajectoryStatus::Completed || status == TrajectoryStatus::StepLimitExceeded);
}

CaseOutcome CaseOutcome::from_labels_event(const Json& event) {
  CaseOutcome o;
  o.op = event.value("operator", "");
  o.case_id = event.value("case_id", "");
  o.seed = event.value("seed", std::uint64_t{0});
  const auto status = parse_trajectory_status(event.value("status", ""));
  if (!status) throw Error(ErrorCode::MalformedInput, "labels event with unknown status");
  o.status = *status;
  o.perturbed = event.value("perturbed", true);
  o.case_pass = event.value("case_pass", false);
  for (const auto& l : event.value("labels", Json::array())) {
    o.labels.push_back(FailureLabel::from_json(l));
  }
  return o;
}

CampaignResult CampaignResult::from_log(std::span<const Json> events) {
  CampaignResult result;
  using Key = std::tuple<std::string, std::string, std::uint64_t>;
  std::map<Key, std::size_t> slot;
  for (const auto& e : events) {
    const std::string kind = e.value("event", "");
    if (kind == "campaign" && !result.metadata) {
      result.metadata = CampaignMetadata::from_json(e);
    } else if (kind == "labels" && e.value("classifier_version", "") == kClassifierVersion) {
      CaseOutcome o = CaseOutcome::from_labels_event(e);
      Key key{o.op, o.case_id, o.seed};
      if (auto it = slot.find(key); it != slot.end()) {
        result.outcomes[it->second] = std::move(o);
      } else {
        slot.emplace(key, result.outcomes.size());
        result.outcomes.push_back(std::move(o));
      }
    }
  }
  return result;
}

std::vector<CaseOutcome> CampaignResult::for_operator(std::string_view op) const {
  std::vector<CaseOutcome> out;
  for (const auto& o : outcomes) {
    if (o.op == op) out.push_back(o);
  }
  return out;
}

std::optional<double> Rate::value() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(total);
}

std::string Rate::percent() const {
  if (total == 0) return "n/a";
  // hundredths of a percent, rounded half-up
  const std::uint64_t hundredths =
      (static_cast<std::uint64_t>(hits) * 20000 + total) / (2 * static_cast<std::uint64_t>(total));
  std::string frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(frac.begin(), '0');
  return std::to_string(hundredths / 100) + "." + frac;
}

Rate failure_rate(std::span<const CaseOutcome> outcomes) {
  Rate r;
  for (const auto& o : outcomes) {
    if (!o.counts()) continue;
    ++r.total;
    if (!(o.case_pass && o.status == TrajectoryStatus::Completed)) ++r.hits;
  }
  if (r.total == 0) throw Error(ErrorCode::EmptyCampaign, "no counted test cases");
  return r;
}

std::array<Rate, kCategoryCount> category_rates(std::span<const CaseOutcome> outcomes) {
  std::array<Rate, kCategoryCount> rates{};
  for (const auto& o : outcomes) {
    if (!o.counts()) continue;
    for (std::size_t c = 0; c < kCategoryCount; ++c) {
      ++rates[c].total;
      const bool flagged = std::any_of(o.labels.begin(), o.labels.end(), [&](const FailureLabel& l) {
        return l.counted && l.flags[c];
      });
      if (flagged) ++rates[c].hits;
    }
  }
  return rates;
}

RougeExceedance rouge_exceedance(std::span<const CaseOutcome> outcomes, double threshold) {
  RougeExceedance r;
  auto tally = [&](Rate& rate, const std::optional<double>& score) {
    if (!score) return;
    ++rate.total;
    ++r.joint.total;
    if (*score >= threshold) {
      ++rate.hits;
      ++r.joint.hits;
    }
  };
  for (const auto& o : outcomes) {
    if (!o.counts()) continue;
    for (const auto& l : o.labels) {
      if (!l.counted) continue;
      if (l.has(FailureCategory::TaskDeviation)) tally(r.td, l.rouge_td);
      if (l.has(FailureCategory::SpecificationMismatch)) tally(r.sm, l.rouge_sm);
    }
  }
  return r;
}

InvocationCounts invocation_counts(std::span<const CaseOutcome> outcomes) {
  InvocationCounts counts;
  for (const auto& o : outcomes) {
    if (!o.counts()) continue;
    for (const auto& l : o.labels) {
      if (!l.counted) continue;
      ++counts.invocations;
      if (!l.pass()) ++counts.failing;
      for (std::size_t c = 0; c < kCategoryCount; ++c) {
        if (l.flags[c]) ++counts.per_category[c];
      }
    }
  }
  return counts;
}

TransferMatrix transfer_matrix(std::span<const CaseOutcome> outcomes) {
  TransferMatrix m;
  for (const auto& o : outcomes) {
    if (!o.counts()) continue;
    for (const auto& l : o.labels) {
      if (!l.counted || l.pass()) continue;
      for (std::size_t a = 0; a < kCategoryCount; ++a) {
        if (!l.flags[a]) continue;
        for (std::size_t b = 0; b < kCategoryCount; ++b) {
          if (l.flags[b]) ++m.counts[a][b];
        }
      }
    }
  }
  return m;
}

std::array<std::array<std::optional<double>, kCategoryCount>, kCategoryCount>
TransferMatrix::normalized() const {
  std::array<std::array<std::optional<double>, kCategoryCount>, kCategoryCount> out{};
  for (std::size_t a = 0; a < kCategoryCount; ++a) {
    if (counts[a][a] == 0) continue;
    for (std::size_t b = 0; b < kCategoryCount; ++b) {
      out[a][b] = static_cast<double>(counts[a][b]) / static_cast<double>(counts[a][a]);
    }
  }
  return out;
}

}  // namespace toolfuzz
