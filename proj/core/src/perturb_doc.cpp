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

#include "toolfuzz/perturb_doc.hpp"

#include <algorithm>
#include <string>

#include "toolfuzz/error.hpp"
#include "toolfuzz/rng.hpp"

namespace toolfuzz::doc_ops {
namespace {

PerturbationRecord make_record(OperatorId op, const ToolDocument& doc, std::uint64_t seed = 0) {
  PerturbationRecord r;
  r.op = std::string(to_string(op));
  r.seed = seed;
  r.target = doc.tool_name;
  return r;
}

}  // namespace

ParamType wrong_type(ParamType type) {
  switch (type) {
    case ParamType::String: return ParamType::Integer;
    case ParamType::Integer: return ParamType::Boolean;
    case ParamType::Number: return ParamType::String;
    case ParamType::Boolean: return ParamType::Array;
    case ParamType::Array: return ParamType::Object;
    case ParamType::Object: return ParamType::String;
  }
  return ParamType::String;
}

Perturbed<ToolDocument> rd(const ToolDocument& doc) {
  Perturbed<ToolDocument> out{doc, make_record(OperatorId::RD, doc)};
  Json emptied = Json::array();
  for (auto& p : out.value.parameters) {
    if (!p.required) continue;
    p.description.clear();
    emptied.push_back(p.name);
  }
  if (emptied.empty()) {
    throw Error(ErrorCode::NoRequiredParams, "tool '" + doc.tool_name + "' has no required parameter");
  }
  out.record.details["emptied"] = std::move(emptied);
  return out;
}

Perturbed<ToolDocument> re(const ToolDocument& doc) {
  Perturbed<ToolDocument> out{doc, make_record(OperatorId::RE, doc)};
  std::size_t erased = out.value.usage_examples.size();
  out.value.usage_examples.clear();
  for (auto& p : out.value.parameters) {
    if (p.example) {
      p.example.reset();
      ++erased;
    }
  }
  if (erased == 0) {
    throw Error(ErrorCode::NoExamples, "tool '" + doc.tool_name + "' has no examples to erase");
  }
  out.record.details["erased"] = erased;
  return out;
}

Perturbed<ToolDocument> wd(const ToolDocument& doc, std::span<const ToolDocument> donors,
                           std::uint64_t seed) {
  struct Donation {
    std::string donor_id;
    std::string description;
  };
  std::vector<Donation> pool;
  for (const auto& donor : donors) {
    if (donor.tool_name == doc.tool_name) continue;
    for (const auto& p : donor.parameters) {
      if (!p.description.empty()) pool.push_back({donor.tool_name + "." + p.name, p.description});
    }
  }
  if (pool.empty()) {
    throw Error(ErrorCode::NoDonor, "no donor descriptions for tool '" + doc.tool_name + "'");
  }
  SplitMix64 rng(seed);
  rng.shuffle(pool);

  Perturbed<ToolDocument> out{doc, make_record(OperatorId::WD, doc, seed)};
  Json assigned = Json::object();
  Json collisions = Json::array();
  for (std::size_t i = 0; i < out.value.parameters.size(); ++i) {
    auto& p = out.value.parameters[i];
    const std::size_t start = i % pool.size();
    std::size_t pick = start;
    bool found = false;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const std::size_t idx = (start + k) % pool.size();
      if (pool[idx].description != p.description) {
        pick = idx;
        found = true;
        break;
      }
    }
    if (!found) collisions.push_back(p.name);
    p.description = pool[pick].description;
    assigned[p.name] = pool[pick].donor_id;
  }
  out.record.details["donors"] = std::move(assigned);
  if (!collisions.empty()) out.record.details["collisions"] = std::move(collisions);
  return out;
}

Perturbed<ToolDocument> wt(const ToolDocument& doc) {
  Perturbed<ToolDocument> out{doc, make_record(OperatorId::WT, doc)};
  Json changes = Json::object();
  Json dropped = Json::array();
  for (auto& p : out.value.parameters) {
    const ParamType next = wrong_type(p.type);
    changes[p.name] = std::string(to_string(p.type)) + "->" + std::string(to_string(next));
    p.type = next;
    // A numeric range on a non-numeric type would make the document invalid.
    if (p.range && next != ParamType::Integer && next != ParamType::Number) {
      p.range.reset();
      dropped.push_back(p.name);
    }
  }
  out.record.details["types"] = std::move(changes);
  if (!dropped.empty()) out.record.details["dropped_ranges"] = std::move(dropped);
  return out;
}

Perturbed<ToolDocument> sd(const ToolDocument& doc, std::optional<IndexPair> pair) {
  const auto& params = doc.parameters;
  if (params.size() < 2) {
    throw Error(ErrorCode::TooFewParams, "SD needs two parameters in '" + doc.tool_name + "'");
  }
  if (pair) {
    if (pair->first == pair->second || pair->first >= params.size() ||
        pair->second >= params.size()) {
      throw Error(ErrorCode::InvalidArgument, "SD pair must be two distinct in-range indices");
    }
  } else {
    for (std::size_t i = 0; i < params.size() && !pair; ++i) {
      for (std::size_t j = i + 1; j < params.size(); ++j) {
        if (params[i].description != params[j].description) {
          pair = IndexPair{i, j};
          break;
        }
      }
    }
    if (!pair) {
      throw Error(ErrorCode::NoDistinctPair,
                  "all parameter descriptions of '" + doc.tool_name + "' are identical");
    }
  }
  Perturbed<ToolDocument> out{doc, make_record(OperatorId::SD, doc)};
  std::swap(out.value.parameters[pair->first].description,
            out.value.parameters[pair->second].description);
  out.record.details["pair"] = Json::array({pair->first, pair->second});
  return out;
}

Perturbed<ToolDocument> co(const ToolDocument& doc, std::uint64_t seed) {
  const std::size_t n = doc.parameters.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewParams, "CO needs two parameters in '" + doc.tool_name + "'");
  }
  SplitMix64 rng(seed);
  std::vector<std::size_t> perm;
  do {
    perm = random_permutation(n, rng);
  } while (std::is_sorted(perm.begin(), perm.end()));

  Perturbed<ToolDocument> out{doc, make_record(OperatorId::CO, doc, seed)};
  for (std::size_t i = 0; i < n; ++i) {
    out.value.parameters[i].description = doc.parameters[perm[i]].description;
  }
  out.record.details["permutation"] = perm;
  return out;
}

Perturbed<ToolDocument> apply(const ToolDocument& doc, const DocPerturbSpec& spec) {
  switch (spec.op) {
    case OperatorId::RD: return rd(doc);
    case OperatorId::RE: return re(doc);
    case OperatorId::WD: return wd(doc, spec.donor_pool, spec.seed);
    case OperatorId::WT: return wt(doc);
    case OperatorId::SD: return sd(doc, spec.sd_pair);
    case OperatorId::CO: return co(doc, spec.seed);
    default:
      throw Error(ErrorCode::InvalidArgument,
                  std::string(to_string(spec.op)) + " is not a document operator");
  }
}

}  // namespace toolfuzz::doc_ops
