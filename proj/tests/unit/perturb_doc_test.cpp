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

#include <gtest/gtest.h>

#include "toolfuzz/error.hpp"
#include "toolfuzz/perturb_doc.hpp"

namespace toolfuzz {
namespace {

ParameterSpec p(std::string name, std::string desc, bool required = false,
                ParamType type = ParamType::String) {
  ParameterSpec s;
  s.name = std::move(name);
  s.description = std::move(desc);
  s.required = required;
  s.type = type;
  return s;
}

ToolDocument doc_of(std::vector<ParameterSpec> params, std::string name = "search") {
  ToolDocument d;
  d.tool_name = std::move(name);
  d.parameters = std::move(params);
  return d;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::InvalidArgument;
}

TEST(Rd, EmptiesOnlyRequiredDescriptions) {
  const auto doc = doc_of({p("query", "search term", true), p("limit", "max items")});
  const auto out = doc_ops::rd(doc);
  EXPECT_EQ(out.value.parameters[0].description, "");
  EXPECT_EQ(out.value.parameters[1].description, "max items");
  EXPECT_EQ(out.record.op, "RD");
}

TEST(Rd, TwoRequiredBothEmptied) {
  const auto out = doc_ops::rd(doc_of({p("a", "da", true), p("b", "db", true)})).value;
  EXPECT_EQ(out.parameters[0].description, "");
  EXPECT_EQ(out.parameters[1].description, "");
}

TEST(Rd, OptionalOnlyIsSkipped) {
  EXPECT_EQ(code_of([] { doc_ops::rd(doc_of({p("a", "da")})); }), ErrorCode::NoRequiredParams);
}

TEST(Re, RemovesAllExamples) {
  auto doc = doc_of({p("q", "term")});
  doc.usage_examples = {"search(q=1)", "search(q=2)"};
  doc.parameters[0].example = Json("x");
  const auto out = doc_ops::re(doc);
  EXPECT_TRUE(out.value.usage_examples.empty());
  EXPECT_FALSE(out.value.parameters[0].example.has_value());
  EXPECT_EQ(out.record.details["erased"], 3);
  EXPECT_EQ(out.value.parameters[0].description, "term");
}

TEST(Re, ExampleFreeIsSkipped) {
  EXPECT_EQ(code_of([] { doc_ops::re(doc_of({p("q", "term")})); }), ErrorCode::NoExamples);
}

TEST(Wd, SingleDonorForcesDescription) {
  const auto a = doc_of({p("q", "search phrase")}, "A");
  const std::vector<ToolDocument> donors = {doc_of({p("city", "city code")}, "B")};
  const auto out = doc_ops::wd(a, donors, 1);
  EXPECT_EQ(out.value.parameters[0].description, "city code");
  EXPECT_EQ(doc_ops::wd(a, donors, 1).value, out.value);
}

TEST(Wd, SelfDonorIsSkipped) {
  const auto a = doc_of({p("q", "search phrase")}, "A");
  const std::vector<ToolDocument> donors = {a};
  EXPECT_EQ(code_of([&] { doc_ops::wd(a, donors, 1); }), ErrorCode::NoDonor);
}

TEST(Wd, CollisionIsRecorded) {
  const auto a = doc_of({p("q", "same text")}, "A");
  const std::vector<ToolDocument> donors = {doc_of({p("x", "same text")}, "B")};
  const auto out = doc_ops::wd(a, donors, 9);
  EXPECT_EQ(out.value.parameters[0].description, "same text");
  EXPECT_TRUE(out.record.details.contains("collisions"));
}

TEST(Wt, FixedDerangement) {
  EXPECT_EQ(doc_ops::wrong_type(ParamType::String), ParamType::Integer);
  EXPECT_EQ(doc_ops::wrong_type(doc_ops::wrong_type(ParamType::String)), ParamType::Boolean);
  for (auto t : {ParamType::String, ParamType::Integer, ParamType::Number, ParamType::Boolean,
                 ParamType::Array, ParamType::Object}) {
    EXPECT_NE(doc_ops::wrong_type(t), t);
  }
}

TEST(Wt, DropsConstraintsTiedToTheOldType) {
  auto n = p("n", "count", false, ParamType::Integer);
  n.range = NumericRange{1, 5};
  n.example = Json(3);
  const auto out = doc_ops::wt(doc_of({n})).value;
  EXPECT_EQ(out.parameters[0].type, ParamType::Boolean);
  EXPECT_FALSE(out.parameters[0].range.has_value());
  EXPECT_NO_THROW(validate(out));
}

TEST(Sd, SwapsThePair) {
  const auto doc = doc_of({p("a", "da"), p("b", "db"), p("c", "dc")});
  const auto out = doc_ops::sd(doc, doc_ops::IndexPair{0, 1}).value;
  EXPECT_EQ(out.parameters[0].description, "db");
  EXPECT_EQ(out.parameters[1].description, "da");
  EXPECT_EQ(out.parameters[2].description, "dc");
  EXPECT_EQ(doc_ops::sd(out, doc_ops::IndexPair{0, 1}).value, doc);
}

TEST(Sd, Preconditions) {
  EXPECT_EQ(code_of([] { doc_ops::sd(doc_of({p("a", "da")})); }), ErrorCode::TooFewParams);
  EXPECT_EQ(code_of([] { doc_ops::sd(doc_of({p("a", "d"), p("b", "d")})); }), ErrorCode::NoDistinctPair);
  EXPECT_EQ(code_of([] { doc_ops::sd(doc_of({p("a", "x"), p("b", "y")}), doc_ops::IndexPair{0, 7}); }),
            ErrorCode::InvalidArgument);
}

TEST(Co, TwoParamsAreSwapped) {
  const auto out = doc_ops::co(doc_of({p("a", "da"), p("b", "db")}), 123).value;
  EXPECT_EQ(out.parameters[0].description, "db");
  EXPECT_EQ(out.parameters[1].description, "da");
}

TEST(Co, SameSeedSamePermutation) {
  const auto doc = doc_of({p("a", "1"), p("b", "2"), p("c", "3"), p("d", "4"), p("e", "5")});
  EXPECT_EQ(doc_ops::co(doc, 5).record.details, doc_ops::co(doc, 5).record.details);
  EXPECT_EQ(doc_ops::co(doc, 5).value, doc_ops::co(doc, 5).value);
}

TEST(DocApply, DispatchesAndRejectsForeignOperators) {
  doc_ops::DocPerturbSpec spec;
  spec.op = OperatorId::WT;
  const auto doc = doc_of({p("a", "da")});
  EXPECT_EQ(doc_ops::apply(doc, spec).value.parameters[0].type, ParamType::Integer);
  spec.op = OperatorId::CF;
  EXPECT_EQ(code_of([&] { doc_ops::apply(doc, spec); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace toolfuzz
