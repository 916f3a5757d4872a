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

#include "toolfuzz_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "toolfuzz/agent.hpp"
#include "toolfuzz/campaign.hpp"
#include "toolfuzz/corpus.hpp"
#include "toolfuzz/demo.hpp"
#include "toolfuzz/error.hpp"
#include "toolfuzz/http_driver.hpp"
#include "toolfuzz/metrics.hpp"
#include "toolfuzz/perturb_doc.hpp"
#include "toolfuzz/perturb_query.hpp"
#include "toolfuzz/perturb_return.hpp"
#include "toolfuzz/report.hpp"
#include "toolfuzz/rng.hpp"

namespace toolfuzz::cli {
namespace {

namespace fs = std::filesystem;

// Flag values after merging --config (lower precedence) with the command line.
struct Settings {
  std::string corpus;
  std::string operators = "all";
  std::string driver = "replay";
  std::uint64_t seed = 0;
  std::string out = "toolfuzz-out";
  std::size_t workers = 1;
  std::size_t step_limit = kDefaultStepLimit;
  std::size_t max_obs_len = kDefaultMaxObservationLength;
  std::string config;
  std::string log;
  std::string case_id;
  std::optional<EndpointConfig> endpoint;
  bool llm_rewriters = false;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<OperatorId> parse_operator_list(const std::string& spec) {
  if (spec.empty() || spec == "all") return {kAllOperators.begin(), kAllOperators.end()};
  std::vector<OperatorId> ops;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto op = parse_operator_id(item);
    if (!op) throw Error(ErrorCode::InvalidArgument, "unknown operator '" + item + "'");
    if (std::find(ops.begin(), ops.end(), *op) == ops.end()) ops.push_back(*op);
  }
  if (ops.empty()) throw Error(ErrorCode::InvalidArgument, "no operators selected");
  // Plan order follows the report columns regardless of how they were listed.
  std::vector<OperatorId> ordered;
  for (OperatorId op : kAllOperators) {
    if (std::find(ops.begin(), ops.end(), op) != ops.end()) ordered.push_back(op);
  }
  return ordered;
}

// Config keys mirror the long flag names with '-' replaced by '_'.
void apply_config(Settings& s, const CLI::App& cmd) {
  if (s.config.empty()) return;
  Json cfg;
  try {
    cfg = Json::parse(read_file(s.config));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, s.config + ": " + e.what());
  }
  auto given = [&](const char* flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  if (!given("--corpus")) s.corpus = cfg.value("corpus", s.corpus);
  if (!given("--operators") && cfg.contains("operators")) {
    const Json& ops = cfg["operators"];
    if (ops.is_array()) {
      std::string joined;
      for (const auto& o : ops) joined += (joined.empty() ? "" : ",") + o.get<std::string>();
      s.operators = joined;
    } else {
      s.operators = ops.get<std::string>();
    }
  }
  if (!given("--driver")) s.driver = cfg.value("driver", s.driver);
  if (!given("--seed")) s.seed = cfg.value("seed", s.seed);
  if (!given("--out")) s.out = cfg.value("out", s.out);
  if (!given("--workers")) s.workers = cfg.value("workers", s.workers);
  if (!given("--step-limit")) s.step_limit = cfg.value("step_limit", s.step_limit);
  if (!given("--max-obs-len")) s.max_obs_len = cfg.value("max_obs_len", s.max_obs_len);
  s.llm_rewriters = cfg.value("llm_rewriters", s.llm_rewriters);
  if (cfg.contains("endpoint")) {
    s.endpoint = EndpointConfig::from_json(cfg["endpoint"]);
    if (!given("--workers") && !cfg.contains("workers")) s.workers = s.endpoint->workers;
    if (!given("--step-limit") && !cfg.contains("step_limit")) s.step_limit = s.endpoint->max_steps;
  }
}

fs::path log_path(const Settings& s) {
  return s.log.empty() ? fs::path(s.out) / std::string(kLogFileName) : fs::path(s.log);
}

struct LoadedCorpus {
  std::string bytes;
  std::vector<TestCase> all;
  std::vector<TestCase> filtered;
};

// Parse and schema errors propagate as validation failures.
LoadedCorpus load_corpus(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "--corpus is required");
  LoadedCorpus c;
  c.bytes = read_file(path);
  c.all = parse_corpus(c.bytes);
  for (const auto& tc : c.all) validate(tc);
  c.filtered = filter_cases(c.all);
  return c;
}

bool is_validation_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::MalformedInput:
    case ErrorCode::SchemaViolation:
    case ErrorCode::SpanMismatch:
      return true;
    default:
      return false;
  }
}

std::vector<ToolDocument> donor_pool(const std::vector<TestCase>& cases) {
  std::vector<ToolDocument> pool;
  for (const auto& tc : cases) {
    for (const auto& t : tc.tools) {
      auto same = [&](const ToolDocument& d) { return d.tool_name == t.tool_name; };
      if (std::none_of(pool.begin(), pool.end(), same)) pool.push_back(t);
    }
  }
  return pool;
}

struct Pipeline {
  CampaignPlan plan;
  DriverFactory factory;
};

Pipeline make_pipeline(const Settings& s, const LoadedCorpus& corpus) {
  Pipeline p;
  p.plan.cases = corpus.filtered;
  p.plan.operators = parse_operator_list(s.operators);
  p.plan.seed = s.seed;
  p.plan.workers = std::max<std::size_t>(1, s.workers);
  p.plan.corpus_hash = corpus_hash(corpus.bytes);
  p.plan.options.step_limit = s.step_limit;
  p.plan.options.max_observation_length = s.max_obs_len;
  p.plan.options.donor_pool = donor_pool(corpus.all);

  if (s.driver == "replay") {
    p.factory = replay_driver_factory();
  } else if (s.driver == "http") {
    if (!s.endpoint) throw Error(ErrorCode::InvalidArgument, "--driver http needs an \"endpoint\" in --config");
    auto limiter = std::make_shared<RateLimiter>(s.endpoint->rate_per_minute);
    auto client = std::make_shared<const ChatClient>(*s.endpoint, api_key_from_env(*s.endpoint), limiter);
    p.factory = http_driver_factory(client);
    if (s.llm_rewriters) {
      p.plan.options.complicate = llm_rewriter(client, query_ops::RewriterKind::Complicate);
      p.plan.options.noise = llm_rewriter(client, query_ops::RewriterKind::Noise);
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown driver '" + s.driver + "' (replay|http)");
  }
  if (p.plan.cases.empty()) throw Error(ErrorCode::EmptyCampaign, "no cases survive filtering");
  return p;
}

void report_from_log(const fs::path& log, const fs::path& out_dir) {
  if (!fs::exists(log)) throw Error(ErrorCode::IoError, "no trajectory log at " + log.string());
  const std::vector<Json> events = read_log(log);
  emit_report(CampaignResult::from_log(events), out_dir);
}

int cmd_validate(const Settings& s, std::ostream& out) {
  const LoadedCorpus c = load_corpus(s.corpus);
  std::size_t findings = 0;
  for (const auto& tc : c.all) {
    for (const auto& f : lint_case(tc)) {
      out << "lint " << to_string(f.kind) << " " << f.case_id << ": " << f.message << '\n';
      ++findings;
    }
  }
  out << c.all.size() << " cases, " << c.filtered.size() << " after filtering, " << findings
      << " lint findings\n";
  return kOk;
}

int cmd_perturb(const Settings& s, std::ostream& out) {
  const LoadedCorpus c = load_corpus(s.corpus);
  const auto ops = parse_operator_list(s.operators);
  if (ops.size() != 1) throw Error(ErrorCode::InvalidArgument, "perturb takes exactly one operator");
  const OperatorId op = ops.front();
  const TestCase* tc = nullptr;
  for (const auto& t : c.all) {
    if (s.case_id.empty() || t.case_id == s.case_id) {
      tc = &t;
      break;
    }
  }
  if (tc == nullptr) throw Error(ErrorCode::InvalidArgument, "case '" + s.case_id + "' not found");

  const std::uint64_t seed = derive_seed(s.seed, to_string(op), tc->case_id);
  Json result = Json::object();
  result["case_id"] = tc->case_id;
  result["operator"] = std::string(to_string(op));
  Json items = Json::array();
  auto skipped = [&](const Error& e) {
    out << "skip " << to_string(op) << " " << tc->case_id << ": " << e.what() << '\n';
    return kOk;
  };
  try {
    switch (source_of(op)) {
      case InputSource::Document: {
        for (const auto& doc : tc->tools) {
          doc_ops::DocPerturbSpec spec;
          spec.op = op;
          spec.seed = derive_seed(seed, to_string(op), doc.tool_name);
          for (const auto& d : donor_pool(c.all)) {
            auto own = [&](const ToolDocument& t) { return t.tool_name == d.tool_name; };
            if (std::none_of(tc->tools.begin(), tc->tools.end(), own)) spec.donor_pool.push_back(d);
          }
          try {
            auto p = doc_ops::apply(doc, spec);
            items.push_back({{"record", p.record.to_json()}, {"value", to_json(p.value)}});
          } catch (const Error& e) {
            if (!e.skip()) throw;
            items.push_back({{"tool_name", doc.tool_name}, {"skipped", e.what()}});
          }
        }
        break;
      }
      case InputSource::Query: {
        Perturbed<AnnotatedQuery> p = [&] {
          switch (op) {
            case OperatorId::RPF: return query_ops::rp_first(tc->query);
            case OperatorId::RPL: return query_ops::rp_last(tc->query);
            case OperatorId::CP: return query_ops::cp(tc->query);
            default: return query_ops::an(tc->query);
          }
        }();
        items.push_back({{"record", p.record.to_json()}, {"value", to_json(p.value)}});
        break;
      }
      case InputSource::Return: {
        if (tc->scripted_returns.empty()) {
          throw Error(ErrorCode::InvalidArgument, "case has no scripted returns");
        }
        auto p = return_ops::apply(op, tc->scripted_returns.front().result);
        items.push_back({{"record", p.record.to_json()}, {"value", to_json(p.value)}});
        break;
      }
    }
  } catch (const Error& e) {
    if (e.skip()) return skipped(e);
    throw;
  }
  bool any = std::any_of(items.begin(), items.end(), [](const Json& i) { return i.contains("record"); });
  if (!any) {
    out << "skip " << to_string(op) << " " << tc->case_id << ": no applicable tool\n";
    return kOk;
  }
  result["items"] = std::move(items);
  out << result.dump(2) << '\n';
  return kOk;
}

int cmd_run(const Settings& s, std::ostream& out) {
  const LoadedCorpus c = load_corpus(s.corpus);
  const Pipeline p = make_pipeline(s, c);
  const RunSummary r = run_campaign(p.plan, p.factory, log_path(s));
  out << "planned " << r.planned << ", written " << r.written << ", resumed " << r.resumed << " -> "
      << log_path(s).string() << '\n';
  return kOk;
}

int cmd_classify(const Settings& s, std::ostream& out) {
  const LoadedCorpus c = load_corpus(s.corpus);
  const std::size_t n = classify_log(log_path(s), c.all);
  out << "labeled " << n << " trajectories\n";
  return kOk;
}

int cmd_report(const Settings& s, std::ostream& out) {
  report_from_log(log_path(s), s.out);
  out << "report written to " << s.out << '\n';
  return kOk;
}

int cmd_campaign(const Settings& s, std::ostream& out) {
  cmd_run(s, out);
  cmd_classify(s, out);
  return cmd_report(s, out);
}

int cmd_demo(std::ostream& out) {
  const auto outcomes = run_demo(out);
  const auto hits = std::count_if(outcomes.begin(), outcomes.end(), [](const DemoOutcome& o) { return o.detected; });
  out << hits << "/" << outcomes.size() << " fixtures classified as intended\n";
  return hits == static_cast<long>(outcomes.size()) ? kOk : kDemoFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toolfuzz: perturbation fuzzing for tool-calling agents", "toolfuzz"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", s.config, "JSON file supplying defaults for these flags");
    cmd->add_option("--corpus", s.corpus, "Corpus JSON file");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", s.out, "Output directory")->capture_default_str();
    cmd->add_option("--log", s.log, "Trajectory log (default <out>/trajectories.jsonl)");
  };
  auto add_run = [&](CLI::App* cmd) {
    cmd->add_option("--operators", s.operators, "Comma-separated operator ids or 'all'")
        ->capture_default_str();
    cmd->add_option("--driver", s.driver, "replay or http")->capture_default_str();
    cmd->add_option("--seed", s.seed, "Campaign seed")->capture_default_str();
    cmd->add_option("--workers", s.workers, "Concurrent cases")->capture_default_str();
    cmd->add_option("--step-limit", s.step_limit, "Agent steps per case")->capture_default_str();
    cmd->add_option("--max-obs-len", s.max_obs_len, "Observation budget in code points")
        ->capture_default_str();
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "Parse, validate and lint a corpus");
  add_common(validate_cmd);

  CLI::App* perturb_cmd = app.add_subcommand("perturb", "Apply one operator to one case and print it");
  add_common(perturb_cmd);
  perturb_cmd->add_option("--operators", s.operators, "Operator id")->required();
  perturb_cmd->add_option("--seed", s.seed, "Campaign seed")->capture_default_str();
  perturb_cmd->add_option("--case", s.case_id, "Case id (default: first case)");

  CLI::App* run_cmd = app.add_subcommand("run", "Run a campaign and append trajectories to the log");
  add_common(run_cmd);
  add_out(run_cmd);
  add_run(run_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Label unlabeled trajectories in a log");
  add_common(classify_cmd);
  add_out(classify_cmd);

  CLI::App* report_cmd = app.add_subcommand("report", "Write report.json, report_table.csv, report.md");
  report_cmd->add_option("--config", s.config, "JSON file supplying defaults for these flags");
  add_out(report_cmd);

  CLI::App* campaign_cmd = app.add_subcommand("campaign", "run, classify and report in one go");
  add_common(campaign_cmd);
  add_out(campaign_cmd);
  add_run(campaign_cmd);

  CLI::App* demo_cmd = app.add_subcommand("demo", "Classify the five shipped fixtures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kCampaignError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    apply_config(s, *chosen);
    if (chosen == validate_cmd) return cmd_validate(s, out);
    if (chosen == perturb_cmd) return cmd_perturb(s, out);
    if (chosen == run_cmd) return cmd_run(s, out);
    if (chosen == classify_cmd) return cmd_classify(s, out);
    if (chosen == report_cmd) return cmd_report(s, out);
    if (chosen == campaign_cmd) return cmd_campaign(s, out);
    if (chosen == demo_cmd) return cmd_demo(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (is_validation_error(e)) return kValidationFailure;
    if (chosen == demo_cmd) return kDemoFailure;
    return chosen == validate_cmd ? kValidationFailure : kCampaignError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCampaignError;
  }
  return kCampaignError;
}

}  // namespace toolfuzz::cli
