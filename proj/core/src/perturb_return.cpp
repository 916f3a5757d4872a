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

#include "toolfuzz/perturb_return.hpp"

#include <functional>
#include <regex>

#include "toolfuzz/error.hpp"
#include "toolfuzz/utf8.hpp"

namespace toolfuzz::return_ops {
namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return is_upper(c) || is_lower(c); }
char lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
char upper(char c) { return is_lower(c) ? static_cast<char>(c - 'a' + 'A') : c; }

PerturbationRecord make_record(OperatorId op) {
  PerturbationRecord r;
  r.op = std::string(to_string(op));
  r.target = "return";
  return r;
}

const Json& require_json(const ToolReturn& ret, OperatorId op) {
  if (!ret.is_json()) {
    throw Error(ErrorCode::NotJson, std::string(to_string(op)) + " needs a JSON tool return");
  }
  return ret.json();
}

KeyPath child(const KeyPath& path, std::variant<std::string, std::size_t> step) {
  KeyPath next = path;
  next.push_back(std::move(step));
  return next;
}

// Rewrites object keys with `rename(key, index_in_object)`. Collisions keep
// the later value and are reported.
struct KeyRewriter {
  std::function<std::string(const std::string&, std::size_t)> rename;
  bool recursive = true;
  Json modified = Json::array();
  Json collisions = Json::array();
  std::size_t objects_seen = 0;

  Json walk(const Json& value, const KeyPath& path, bool inside_object) {
    if (value.is_object()) {
      if (!recursive && inside_object) return value;
      ++objects_seen;
      Json out = Json::object();
      std::size_t index = 0;
      for (auto it = value.begin(); it != value.end(); ++it, ++index) {
        const std::string next_key = rename(it.key(), index);
        const KeyPath here = child(path, it.key());
        if (next_key != it.key()) modified.push_back(to_json(here));
        if (out.contains(next_key)) {
          collisions.push_back({{"path", to_json(path)}, {"key", next_key}, {"later", it.key()}});
        }
        out[next_key] = walk(it.value(), here, true);
      }
      return out;
    }
    if (value.is_array()) {
      Json out = Json::array();
      for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(walk(value[i], child(path, i), inside_object));
      }
      return out;
    }
    return value;
  }
};

Perturbed<ToolReturn> rewrite_keys(OperatorId op, const ToolReturn& ret,
                                   const ReturnOpOptions& options,
                                   std::function<std::string(const std::string&, std::size_t)> rename) {
  const Json& root = require_json(ret, op);
  KeyRewriter rewriter{std::move(rename), options.recursive};
  Json value = rewriter.walk(root, {}, false);
  if (op == OperatorId::FK && rewriter.objects_seen == 0) {
    throw Error(ErrorCode::NoObjects, "FK needs at least one JSON object");
  }
  Perturbed<ToolReturn> out{ToolReturn::from_json(std::move(value)), make_record(op)};
  out.record.details["modified_paths"] = std::move(rewriter.modified);
  if (!rewriter.collisions.empty()) {
    out.record.details["collision_warnings"] = std::move(rewriter.collisions);
  }
  if (!options.recursive) out.record.details["recursive"] = false;
  return out;
}

}  // namespace

Json to_json(const KeyPath& path) {
  Json out = Json::array();
  for (const auto& step : path) {
    if (const auto* key = std::get_if<std::string>(&step)) {
      out.push_back(*key);
    } else {
      out.push_back(std::get<std::size_t>(step));
    }
  }
  return out;
}

const Json* resolve(const Json& root, const KeyPath& path) {
  const Json* node = &root;
  for (const auto& step : path) {
    if (const auto* key = std::get_if<std::string>(&step)) {
      if (!node->is_object()) return nullptr;
      auto it = node->find(*key);
      if (it == node->end()) return nullptr;
      node = &*it;
    } else {
      const std::size_t index = std::get<std::size_t>(step);
      if (!node->is_array() || index >= node->size()) return nullptr;
      node = &(*node)[index];
    }
  }
  return node;
}

std::vector<std::string> tokenize_key(std::string_view key) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < key.size(); ++i) {
    const char c = key[i];
    if (c == '_' || c == '-') {
      flush();
      continue;
    }
    if (!current.empty()) {
      const char prev = current.back();
      const bool next_lower = i + 1 < key.size() && is_lower(key[i + 1]);
      const bool hump = (is_lower(prev) || is_digit(prev)) && is_upper(c);
      const bool acronym_end = is_upper(prev) && is_upper(c) && next_lower;
      const bool digit_edge = (is_alpha(prev) && is_digit(c)) || (is_digit(prev) && is_alpha(c));
      if (hump || acronym_end || digit_edge) flush();
    }
    current.push_back(c);
  }
  flush();
  return tokens;
}

std::string camel_case(std::string_view key) {
  const auto tokens = tokenize_key(key);
  if (tokens.empty()) return std::string(key);
  std::string out;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    for (std::size_t i = 0; i < tokens[t].size(); ++i) {
      const char c = tokens[t][i];
      out.push_back(t > 0 && i == 0 ? upper(c) : lower(c));
    }
  }
  return out;
}

std::string snake_case(std::string_view key) {
  const auto tokens = tokenize_key(key);
  if (tokens.empty()) return std::string(key);
  std::string out;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (t > 0) out.push_back('_');
    for (char c : tokens[t]) out.push_back(lower(c));
  }
  return out;
}

Perturbed<ToolReturn> fk(const ToolReturn& ret, const ReturnOpOptions& options) {
  return rewrite_keys(OperatorId::FK, ret, options, [](const std::string&, std::size_t index) {
    return "Object_" + std::to_string(index + 1);
  });
}

Perturbed<ToolReturn> ck(const ToolReturn& ret, const ReturnOpOptions& options) {
  return rewrite_keys(OperatorId::CK, ret, options,
                      [](const std::string& key, std::size_t) { return camel_case(key); });
}

Perturbed<ToolReturn> uk(const ToolReturn& ret, const ReturnOpOptions& options) {
  return rewrite_keys(OperatorId::UK, ret, options,
                      [](const std::string& key, std::size_t) { return snake_case(key); });
}

Perturbed<ToolReturn> ap(const ToolReturn& ret, const ReturnOpOptions& options) {
  const Json& root = require_json(ret, OperatorId::AP);
  const std::regex id_key(options.id_key_pattern);
  static const std::regex kUuid(
      "[0-9a-fA-F]{8}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{12}");
  Json modified = Json::array();

  std::function<Json(const Json&, const KeyPath&, bool)> walk =
      [&](const Json& value, const KeyPath& path, bool inside_object) -> Json {
    if (value.is_object()) {
      if (!options.recursive && inside_object) return value;
      Json out = Json::object();
      for (auto it = value.begin(); it != value.end(); ++it) {
        const KeyPath here = child(path, it.key());
        const bool id_value =
            std::regex_match(it.key(), id_key) ||
            (options.detect_id_values && it.value().is_string() &&
             std::regex_match(it.value().get<std::string>(), kUuid));
        if (id_value) {
          out[it.key()] = "ID_" + stringify(it.value());
          modified.push_back(to_json(here));
        } else {
          out[it.key()] = walk(it.value(), here, true);
        }
      }
      return out;
    }
    if (value.is_array()) {
      Json out = Json::array();
      for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(walk(value[i], child(path, i), inside_object));
      }
      return out;
    }
    return value;
  };

  Json value = walk(root, {}, false);
  if (modified.empty()) throw Error(ErrorCode::NoIdFields, "AP found no ID-type field");
  Perturbed<ToolReturn> out{ToolReturn::from_json(std::move(value)), make_record(OperatorId::AP)};
  out.record.details["modified_paths"] = std::move(modified);
  return out;
}

Perturbed<ToolReturn> cf(const ToolReturn& ret) {
  const Json& root = require_json(ret, OperatorId::CF);
  std::u32string serialized = utf8::decode(root.dump());
  if (!serialized.empty()) serialized.pop_back();
  Perturbed<ToolReturn> out{ToolReturn::from_raw(utf8::encode(serialized) + "..."),
                            make_record(OperatorId::CF)};
  out.record.details["dropped_code_points"] = 1;
  return out;
}

Perturbed<ToolReturn> apply(OperatorId op, const ToolReturn& ret, const ReturnOpOptions& options) {
  switch (op) {
    case OperatorId::FK: return fk(ret, options);
    case OperatorId::AP: return ap(ret, options);
    case OperatorId::CK: return ck(ret, options);
    case OperatorId::UK: return uk(ret, options);
    case OperatorId::CF: return cf(ret);
    default:
      throw Error(ErrorCode::InvalidArgument,
                  std::string(to_string(op)) + " is not a tool-return operator");
  }
}

}  // namespace toolfuzz::return_ops
