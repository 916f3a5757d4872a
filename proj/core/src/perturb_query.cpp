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

#include "toolfuzz/perturb_query.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <regex>

#include "toolfuzz/error.hpp"
#include "toolfuzz/utf8.hpp"

namespace toolfuzz::query_ops {
namespace {

bool is_space(char32_t c) { return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r'; }

bool is_closing_punct(char32_t c) {
  return c == U'.' || c == U',' || c == U'!' || c == U'?' || c == U';' || c == U':';
}

bool is_ascii_alpha(char32_t c) { return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z'); }

char32_t flip_case(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - U'a' + U'A';
  if (c >= U'A' && c <= U'Z') return c - U'A' + U'a';
  return c;
}

PerturbationRecord make_record(OperatorId op) {
  PerturbationRecord r;
  r.op = std::string(to_string(op));
  r.target = "query";
  return r;
}

void require_mentions(const AnnotatedQuery& q, OperatorId op) {
  if (q.mentions.empty()) {
    throw Error(ErrorCode::NoMentions, std::string(to_string(op)) + " needs an annotated mention");
  }
}

Perturbed<AnnotatedQuery> remove_mention(const AnnotatedQuery& q, std::size_t index,
                                         OperatorId op) {
  require_mentions(q, op);
  const std::u32string text = utf8::decode(q.text);
  const Mention& gone = q.mentions[index];

  // Trimming stops at neighbouring mentions so their spans stay intact.
  const std::size_t left_floor = index > 0 ? q.mentions[index - 1].end : 0;
  const std::size_t right_ceiling =
      index + 1 < q.mentions.size() ? q.mentions[index + 1].start : text.size();

  std::size_t left_end = gone.start;
  while (left_end > left_floor && is_space(text[left_end - 1])) --left_end;
  std::size_t right_begin = gone.end;
  while (right_begin < right_ceiling && is_space(text[right_begin])) ++right_begin;

  const std::u32string_view left = std::u32string_view(text).substr(0, left_end);
  const std::u32string_view right = std::u32string_view(text).substr(right_begin);
  std::u32string joined(left);
  if (!left.empty() && !right.empty() && !is_closing_punct(right.front())) joined.push_back(U' ');
  const std::size_t right_offset = joined.size();
  joined.append(right);

  Perturbed<AnnotatedQuery> out{{utf8::encode(joined), {}}, make_record(op)};
  for (std::size_t i = 0; i < q.mentions.size(); ++i) {
    if (i == index) continue;
    Mention m = q.mentions[i];
    if (i > index) {
      m.start = m.start - right_begin + right_offset;
      m.end = m.end - right_begin + right_offset;
    }
    out.value.mentions.push_back(std::move(m));
  }
  out.record.details["removed"] = {{"param_name", gone.param_name},
                                   {"value_text", gone.value_text},
                                   {"span", Json::array({gone.start, gone.end})}};
  out.record.details["excised_code_points"] = text.size() - joined.size();
  return out;
}

bool parse_integer(std::string_view s, long long& out) {
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string_view to_string(RewriterKind kind) {
  return kind == RewriterKind::Complicate ? "complicate" : "noise";
}

std::string Rewriter::operator()(std::string_view value) const {
  std::string result = fn(value);
  if (result.empty()) {
    throw Error(ErrorCode::InvalidArgument, "rewriter '" + name + "' produced empty text");
  }
  return result;
}

Rewriter default_complicate() {
  return {RewriterKind::Complicate, "default-complicate", [](std::string_view v) {
            return "the value that would be written as '" + std::string(v) + "'";
          }};
}

Rewriter default_noise() {
  return {RewriterKind::Noise, "default-noise",
          [](std::string_view v) { return noise_distractor(v); }};
}

std::string noise_distractor(std::string_view value) {
  long long integer = 0;
  if (parse_integer(value, integer) && integer < std::numeric_limits<long long>::max()) {
    return std::to_string(integer + 1);
  }
  static const std::regex kDecimal(R"([+-]?\d+\.(\d+))");
  std::cmatch m;
  const std::string owned(value);
  if (std::regex_match(owned.c_str(), m, kDecimal)) {
    const int digits = static_cast<int>(m[1].length());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, std::stod(owned) + 1.0);
    if (owned != buf) return buf;
  }

  std::u32string cps = utf8::decode(value);
  std::size_t first_letter = cps.size();
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (is_ascii_alpha(cps[i])) {
      first_letter = i;
      break;
    }
  }
  if (first_letter == cps.size()) return "not " + owned;
  cps[first_letter] = flip_case(cps[first_letter]);
  const std::size_t middle = cps.size() / 2;
  if (middle != first_letter && is_ascii_alpha(cps[middle])) cps[middle] = flip_case(cps[middle]);
  return utf8::encode(cps);
}

Perturbed<AnnotatedQuery> rp_first(const AnnotatedQuery& q) {
  return remove_mention(q, 0, OperatorId::RPF);
}

Perturbed<AnnotatedQuery> rp_last(const AnnotatedQuery& q) {
  require_mentions(q, OperatorId::RPL);
  return remove_mention(q, q.mentions.size() - 1, OperatorId::RPL);
}

Perturbed<AnnotatedQuery> cp(const AnnotatedQuery& q, const Rewriter& rewriter) {
  require_mentions(q, OperatorId::CP);
  const std::u32string text = utf8::decode(q.text);
  std::u32string rebuilt;
  Perturbed<AnnotatedQuery> out{{}, make_record(OperatorId::CP)};
  out.record.details["rewriter"] = {{"kind", std::string(to_string(rewriter.kind))},
                                    {"name", rewriter.name}};
  Json replacements = Json::array();
  std::size_t cursor = 0;
  for (const Mention& m : q.mentions) {
    rebuilt.append(text, cursor, m.start - cursor);
    const std::string replacement = rewriter(m.value_text);
    Mention updated = m;
    updated.start = rebuilt.size();
    rebuilt += utf8::decode(replacement);
    updated.end = rebuilt.size();
    updated.value_text = replacement;
    out.value.mentions.push_back(std::move(updated));
    replacements.push_back({{"param_name", m.param_name}, {"from", m.value_text}, {"to", replacement}});
    cursor = m.end;
  }
  rebuilt.append(text, cursor, std::u32string::npos);
  out.value.text = utf8::encode(rebuilt);
  out.record.details["replacements"] = std::move(replacements);
  return out;
}

Perturbed<AnnotatedQuery> an(const AnnotatedQuery& q, const Rewriter& rewriter) {
  require_mentions(q, OperatorId::AN);
  Perturbed<AnnotatedQuery> out{q, make_record(OperatorId::AN)};
  out.record.details["rewriter"] = {{"kind", std::string(to_string(rewriter.kind))},
                                    {"name", rewriter.name}};
  Json distractors = Json::array();
  std::string& text = out.value.text;
  for (const Mention& m : q.mentions) {
    const std::string noise = rewriter(m.value_text);
    if (!text.empty() && !std::isspace(static_cast<unsigned char>(text.back()))) text.push_back(' ');
    text += "Unrelated note: " + noise + ".";
    distractors.push_back({{"param_name", m.param_name}, {"from", m.value_text}, {"to", noise}});
  }
  out.record.details["distractors"] = std::move(distractors);
  return out;
}

}  // namespace toolfuzz::query_ops
