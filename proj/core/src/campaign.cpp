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

#include "toolfuzz/campaign.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "toolfuzz/classifier.hpp"
#include "toolfuzz/error.hpp"
#include "toolfuzz/rng.hpp"

namespace toolfuzz {
namespace {

using RunKey = std::tuple<std::string, std::string, std::uint64_t>;

RunKey key_of(const Json& event) {
  return {event.value("operator", ""), event.value("case_id", ""),
          event.value("seed", std::uint64_t{0})};
}

// Appends lines strictly in index order; out-of-order completions wait in
// `pending` until their predecessors arrive.
class OrderedWriter {
 public:
  explicit OrderedWriter(const std::filesystem::path& path)
      : out_(path, std::ios::app | std::ios::binary) {
    if (!out_) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }

  void submit(std::size_t index, std::optional<std::string> line) {
    std::lock_guard lock(mutex_);
    pending_[index] = std::move(line);
    while (!pending_.empty() && pending_.begin()->first == next_) {
      if (pending_.begin()->second) {
        out_ << *pending_.begin()->second << '\n';
        ++written_;
      }
      pending_.erase(pending_.begin());
      ++next_;
    }
    out_.flush();
    if (!out_) throw Error(ErrorCode::IoError, "write failed");
  }

  std::size_t written() const { return written_; }

 private:
  std::mutex mutex_;
  std::ofstream out_;
  std::map<std::size_t, std::optional<std::string>> pending_;
  std::size_t next_ = 0;
  std::size_t written_ = 0;
};

void append_line(const std::filesystem::path& path, const std::string& line) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  out << line << '\n';
}

}  // namespace

Json CampaignMetadata::to_json() const {
  Json j = Json::object();
  j["event"] = "campaign";
  j["corpus_hash"] = corpus_hash;
  j["template_version"] = template_version;
  j["driver"] = driver;
  j["seed"] = seed;
  j["operators"] = operators;
  j["step_limit"] = step_limit;
  j["max_observation_length"] = max_observation_length;
  j["case_ids"] = case_ids;
  return j;
}

CampaignMetadata CampaignMetadata::from_json(const Json& j) {
  CampaignMetadata m;
  m.corpus_hash = j.value("corpus_hash", "");
  m.template_version = j.value("template_version", "");
  m.driver = j.value("driver", "");
  m.seed = j.value("seed", std::uint64_t{0});
  m.operators = j.value("operators", std::vector<std::string>{});
  m.step_limit = j.value("step_limit", kDefaultStepLimit);
  m.max_observation_length = j.value("max_observation_length", kDefaultMaxObservationLength);
  m.case_ids = j.value("case_ids", std::vector<std::string>{});
  return m;
}

std::string corpus_hash(std::string_view corpus_bytes) { return hex64(fnv1a64(corpus_bytes)); }

std::vector<Json> read_log(const std::filesystem::path& path) {
  std::vector<Json> events;
  std::ifstream in(path, std::ios::binary);
  if (!in) return events;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      events.push_back(Json::parse(lines[i]));
    } catch (const nlohmann::json::parse_error&) {
      if (i + 1 == lines.size()) break;
      throw Error(ErrorCode::MalformedInput,
                  path.string() + ": line " + std::to_string(i + 1) + " is not JSON");
    }
  }
  return events;
}

RunSummary run_campaign(const CampaignPlan& plan, const DriverFactory& factory,
                        const std::filesystem::path& log_path) {
  if (log_path.has_parent_path()) std::filesystem::create_directories(log_path.parent_path());

  const std::vector<Json> existing = read_log(log_path);
  std::set<RunKey> done;
  bool has_header = false;
  for (const auto& e : existing) {
    const std::string kind = e.value("event", "");
    if (kind == "campaign") {
      has_header = true;
      const auto meta = CampaignMetadata::from_json(e);
      if (meta.corpus_hash != plan.corpus_hash || meta.seed != plan.seed) {
        throw Error(ErrorCode::InvalidArgument,
                    "log " + log_path.string() + " belongs to a different corpus or seed");
      }
    } else if (kind == "trajectory" && e.value("status", "") != "driver_error") {
      done.insert(key_of(e));
    }
  }

  struct Task {
    OperatorId op;
    const TestCase* tc;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (OperatorId op : plan.operators) {
    for (const auto& tc : plan.cases) {
      tasks.push_back({op, &tc, derive_seed(plan.seed, to_string(op), tc.case_id)});
    }
  }

  RunSummary summary;
  summary.planned = tasks.size();

  std::unique_ptr<AgentDriver> probe;
  if (!has_header) {
    CampaignMetadata meta;
    meta.corpus_hash = plan.corpus_hash;
    meta.seed = plan.seed;
    if (!plan.cases.empty()) {
      probe = factory(plan.cases.front(), std::nullopt);
      meta.driver = probe->id();
    }
    for (OperatorId op : plan.operators) meta.operators.emplace_back(to_string(op));
    meta.step_limit = plan.options.step_limit;
    meta.max_observation_length = plan.options.max_observation_length;
    for (const auto& tc : plan.cases) meta.case_ids.push_back(tc.case_id);
    append_line(log_path, meta.to_json().dump());
  }

  OrderedWriter writer(log_path);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> resumed{0};
  std::mutex error_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      try {
        if (done.count({std::string(to_string(task.op)), task.tc->case_id, task.seed})) {
          ++resumed;
          writer.submit(i, std::nullopt);
          continue;
        }
        auto driver = factory(*task.tc, task.op);
        Trajectory traj = run_case(*task.tc, task.op, task.seed, *driver, plan.options);
        writer.submit(i, traj.to_json().dump());
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
        return;
      }
    }
  };

  const std::size_t n_workers = std::max<std::size_t>(1, std::min(plan.workers, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  summary.written = writer.written();
  summary.resumed = resumed;
  return summary;
}

std::size_t classify_log(const std::filesystem::path& log_path, const std::vector<TestCase>& cases) {
  const std::vector<Json> events = read_log(log_path);
  std::map<std::string, const TestCase*> by_id;
  for (const auto& tc : cases) by_id[tc.case_id] = &tc;

  std::set<RunKey> labeled;
  std::map<RunKey, std::size_t> latest;
  std::vector<RunKey> order;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Json& e = events[i];
    const std::string kind = e.value("event", "");
    if (kind == "labels" && e.value("classifier_version", "") == kClassifierVersion) {
      labeled.insert(key_of(e));
    } else if (kind == "trajectory") {
      const RunKey key = key_of(e);
      if (!latest.count(key)) order.push_back(key);
      latest[key] = i;
    }
  }

  std::size_t appended = 0;
  std::ofstream out(log_path, std::ios::app | std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + log_path.string());
  for (const RunKey& key : order) {
    if (labeled.count(key)) continue;
    const Trajectory traj = Trajectory::from_json(events[latest[key]]);
    auto it = by_id.find(traj.case_id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::InvalidArgument, "log case '" + traj.case_id + "' is not in the corpus");
    }
    const TestCase& tc = *it->second;

    Json event = Json::object();
    event["event"] = "labels";
    event["operator"] = traj.op;
    event["case_id"] = traj.case_id;
    event["seed"] = traj.seed;
    event["classifier_version"] = kClassifierVersion;
    event["status"] = std::string(to_string(traj.status));
    event["perturbed"] = traj.perturbed;
    if (traj.status == TrajectoryStatus::Completed ||
        traj.status == TrajectoryStatus::StepLimitExceeded) {
      const auto invocations = traj.invocations();
      TrajectoryClassification result = classify_trajectory(invocations, tc.oracle, tc.tools);
      event["case_pass"] = result.case_pass && traj.status == TrajectoryStatus::Completed;
      event["labels"] = result.to_json()["labels"];
    } else {
      event["case_pass"] = false;
      event["labels"] = Json::array();
    }
    out << event.dump() << '\n';
    ++appended;
  }
  return appended;
}

}  // namespace toolfuzz
