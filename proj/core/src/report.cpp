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

#include "toolfuzz/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "toolfuzz/error.hpp"
#include "toolfuzz/perturbation.hpp"

namespace toolfuzz {
namespace {

// FR cell: "n/a" when the operator has no counted cases.
std::string fr_cell(std::span<const CaseOutcome> outcomes) {
  try {
    return failure_rate(outcomes).percent();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyCampaign) return "n/a";
    throw;
  }
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Json rate_json(const Rate& r) {
  Json j = Json::object();
  j["hits"] = r.hits;
  j["total"] = r.total;
  j["percent"] = r.percent();
  return j;
}

struct OperatorRow {
  std::string op;
  std::vector<CaseOutcome> outcomes;
};

std::vector<OperatorRow> rows_of(const CampaignResult& result) {
  std::vector<OperatorRow> rows;
  for (OperatorId op : kAllOperators) {
    const std::string name(to_string(op));
    rows.push_back({name, result.for_operator(name)});
  }
  return rows;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  out << bytes;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

}  // namespace

Json build_report_json(const CampaignResult& result) {
  Json report = Json::object();
  report["metadata"] = result.metadata ? result.metadata->to_json() : Json(nullptr);
  if (report["metadata"].is_object()) report["metadata"].erase("event");
  report["classifier_version"] = kClassifierVersion;
  report["rouge_threshold"] = kRougeThreshold;

  Json operators = Json::object();
  for (const auto& row : rows_of(result)) {
    Json j = Json::object();
    std::size_t n_total = 0;
    std::size_t n_pass = 0;
    std::size_t skipped = 0;
    for (const auto& o : row.outcomes) {
      if (o.counts()) {
        ++n_total;
        if (o.case_pass && o.status == TrajectoryStatus::Completed) ++n_pass;
      } else {
        ++skipped;
      }
    }
    j["n_total"] = n_total;
    j["n_pass"] = n_pass;
    j["not_counted"] = skipped;
    j["fr"] = fr_cell(row.outcomes);
    Json cats = Json::object();
    const auto rates = category_rates(row.outcomes);
    for (FailureCategory c : kAllCategories) {
      cats[std::string(short_name(c))] = rate_json(rates[static_cast<std::size_t>(c)]);
    }
    j["categories"] = std::move(cats);
    const auto ex = rouge_exceedance(row.outcomes);
    j["rouge_exceedance"] = {{"joint", rate_json(ex.joint)},
                             {"TD", rate_json(ex.td)},
                             {"SM", rate_json(ex.sm)}};
    const auto inv = invocation_counts(row.outcomes);
    Json per_cat = Json::object();
    for (FailureCategory c : kAllCategories) {
      per_cat[std::string(short_name(c))] = inv.per_category[static_cast<std::size_t>(c)];
    }
    j["invocations"] = {{"counted", inv.invocations}, {"failing", inv.failing}, {"per_category", per_cat}};
    operators[row.op] = std::move(j);
  }
  report["operators"] = std::move(operators);

  const TransferMatrix m = transfer_matrix(result.outcomes);
  const auto norm = m.normalized();
  Json labels = Json::array();
  for (FailureCategory c : kAllCategories) labels.push_back(std::string(short_name(c)));
  Json counts = Json::array();
  Json normalized = Json::array();
  for (std::size_t a = 0; a < kCategoryCount; ++a) {
    Json crow = Json::array();
    Json nrow = Json::array();
    for (std::size_t b = 0; b < kCategoryCount; ++b) {
      crow.push_back(m.counts[a][b]);
      nrow.push_back(norm[a][b] ? Json(*norm[a][b]) : Json(nullptr));
    }
    counts.push_back(std::move(crow));
    normalized.push_back(std::move(nrow));
  }
  report["transfer_matrix"] = {{"categories", labels}, {"counts", counts}, {"normalized", normalized}};

  Json cases = Json::array();
  for (const auto& o : result.outcomes) {
    Json c = Json::object();
    c["operator"] = o.op;
    c["case_id"] = o.case_id;
    c["seed"] = o.seed;
    c["status"] = std::string(to_string(o.status));
    c["perturbed"] = o.perturbed;
    c["counted"] = o.counts();
    c["case_pass"] = o.case_pass;
    Json ls = Json::array();
    for (const auto& l : o.labels) ls.push_back(l.to_json());
    c["labels"] = std::move(ls);
    cases.push_back(std::move(c));
  }
  report["cases"] = std::move(cases);
  return report;
}

std::string build_report_csv(const CampaignResult& result) {
  const auto rows = rows_of(result);
  std::ostringstream out;
  out << "category";
  for (const auto& row : rows) out << ',' << row.op;
  out << '\n';

  std::vector<std::array<Rate, kCategoryCount>> rates;
  std::vector<RougeExceedance> ex;
  for (const auto& row : rows) {
    rates.push_back(category_rates(row.outcomes));
    ex.push_back(rouge_exceedance(row.outcomes));
  }
  for (FailureCategory c : kAllCategories) {
    out << short_name(c);
    for (const auto& r : rates) out << ',' << r[static_cast<std::size_t>(c)].percent();
    out << '\n';
  }
  out << "FR";
  for (const auto& row : rows) out << ',' << fr_cell(row.outcomes);
  out << '\n';
  out << "RougeL>=0.8";
  for (const auto& e : ex) out << ',' << e.joint.percent();
  out << '\n';
  out << "RougeL>=0.8 TD";
  for (const auto& e : ex) out << ',' << e.td.percent();
  out << '\n';
  out << "RougeL>=0.8 SM";
  for (const auto& e : ex) out << ',' << e.sm.percent();
  out << '\n';
  return out.str();
}

std::string build_report_markdown(const CampaignResult& result) {
  const auto rows = rows_of(result);
  std::ostringstream out;
  out << "# toolfuzz campaign report\n\n";
  if (result.metadata) {
    const auto& m = *result.metadata;
    out << "- corpus hash: `" << m.corpus_hash << "`\n"
        << "- driver: `" << m.driver << "`\n"
        << "- template: `" << m.template_version << "`\n"
        << "- seed: " << m.seed << "\n"
        << "- cases: " << m.case_ids.size() << "\n";
  }
  out << "- classifier: `" << kClassifierVersion << "`\n\n";

  out << "## Failure rate (%)\n\n| category |";
  for (const auto& row : rows) out << ' ' << row.op << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < rows.size(); ++i) out << "---:|";
  out << '\n';
  for (FailureCategory c : kAllCategories) {
    out << "| " << display_name(c) << " |";
    for (const auto& row : rows) {
      out << ' ' << category_rates(row.outcomes)[static_cast<std::size_t>(c)].percent() << " |";
    }
    out << '\n';
  }
  out << "| **Overall** |";
  for (const auto& row : rows) out << ' ' << fr_cell(row.outcomes) << " |";
  out << "\n| Rouge-L >= 0.8 |";
  for (const auto& row : rows) out << ' ' << rouge_exceedance(row.outcomes).joint.percent() << " |";
  out << "\n\n";

  const TransferMatrix m = transfer_matrix(result.outcomes);
  const auto norm = m.normalized();
  out << "## Failure co-occurrence\n\nCounts of failing invocations showing both patterns "
         "(row conditional rate in parentheses).\n\n|   |";
  for (FailureCategory c : kAllCategories) out << ' ' << short_name(c) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < kCategoryCount; ++i) out << "---:|";
  out << '\n';
  for (std::size_t a = 0; a < kCategoryCount; ++a) {
    out << "| " << short_name(kAllCategories[a]) << " |";
    for (std::size_t b = 0; b < kCategoryCount; ++b) {
      out << ' ' << m.counts[a][b];
      if (norm[a][b]) out << " (" << fixed(*norm[a][b], 2) << ")";
      out << " |";
    }
    out << '\n';
  }
  return out.str();
}

void emit_report(const CampaignResult& result, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + out_dir.string() + ": " + ec.message());
  write_file(out_dir / kReportJson, build_report_json(result).dump(2) + "\n");
  write_file(out_dir / kReportCsv, build_report_csv(result));
  write_file(out_dir / kReportMarkdown, build_report_markdown(result));
}

}  // namespace toolfuzz
