// Copyright 2026 The Uzannot Authors.
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

#include "uzannot/validate.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace uzannot {
namespace {

using testing::SeedRegistry;

std::vector<Rule> ErrorRules(const std::vector<Finding> &findings) {
  std::vector<Rule> rules;
  for (const auto &f : findings) {
    if (f.severity == Severity::kError) rules.push_back(f.rule);
  }
  return rules;
}

ValidationReport Check(const std::string &line, Mode mode = Mode::kMorphological) {
  return Validate(ParseLine(line, mode), SeedRegistry());
}

TEST(ValidateTest, PublishedExampleIsClean) {
  const auto report = Check("Anvar/SOT to'satdan/HRV eshik/NOT yoniga/JOT keldi/SFL/3B/OTZ");
  EXPECT_FALSE(report.HasErrors());
  EXPECT_TRUE(report.findings.empty());
}

TEST(ValidateTest, FirstTagMustBeBase) {
  // 3B ahead of SFL is also a slot-order violation.
  const auto report = Check("keldi/3B/SFL");
  ASSERT_EQ(ErrorRules(report.findings), (std::vector<Rule>{Rule::kM2, Rule::kM3}));
  EXPECT_EQ(report.findings[0].item_index, 0);
}

TEST(ValidateTest, UnknownCode) {
  const auto report = Check("keldi/SFL/ZZZ");
  ASSERT_EQ(ErrorRules(report.findings), std::vector<Rule>{Rule::kM1});
  EXPECT_NE(report.findings[0].message.find("ZZZ"), std::string::npos);
}

TEST(ValidateTest, KindMustMatchMode) {
  EXPECT_EQ(ErrorRules(Check("Anvar/EG").findings), std::vector<Rule>{Rule::kM1});
  EXPECT_EQ(ErrorRules(Check("Anvar/SOT", Mode::kSyntactic).findings),
            std::vector<Rule>{Rule::kM1});
}

TEST(ValidateTest, SlotOrderAndDuplicates) {
  EXPECT_EQ(ErrorRules(Check("keldi/SFL/3B/1B").findings), std::vector<Rule>{Rule::kM3});
  EXPECT_EQ(ErrorRules(Check("keldi/SFL/OTZ/KEZ").findings), std::vector<Rule>{Rule::kM3});
  EXPECT_EQ(ErrorRules(Check("keldi/SFL/OTZ/3B").findings), std::vector<Rule>{Rule::kM3});
  EXPECT_TRUE(ErrorRules(Check("keldi/SFL/OTZ").findings).empty());
  EXPECT_TRUE(ErrorRules(Check("e'tibor+qaratishingiz+kerak/HFL/2K").findings).empty());
  // Several BASE tags in front are allowed.
  EXPECT_TRUE(ErrorRules(Check("sotib+oldi/HFL/SFL/3B").findings).empty());
  // A BASE tag after an inflection is out of order.
  EXPECT_EQ(ErrorRules(Check("keldi/SFL/3B/HFL").findings), std::vector<Rule>{Rule::kM3});
}

TEST(ValidateTest, SyntacticUnitsTakeOneTag) {
  EXPECT_EQ(ErrorRules(Check("Anvar/EG/FK", Mode::kSyntactic).findings),
            std::vector<Rule>{Rule::kS1});
  EXPECT_TRUE(ErrorRules(Check("Anvar/EG keldi/FK", Mode::kSyntactic).findings).empty());
}

TEST(ValidateTest, UntaggedUnitIsAWarning) {
  const auto report = Check("narxiga/MOT emas, ishlash/HFL");
  EXPECT_FALSE(report.HasErrors());
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].rule, Rule::kU1);
  EXPECT_EQ(report.findings[0].severity, Severity::kWarning);
  EXPECT_EQ(report.findings[0].item_index, 1);
  EXPECT_EQ(report.WarningCount(), 1u);
}

TEST(ValidateTest, FindingsSortedByItem) {
  const auto report = Check("a/3B b c/ZZZ/EG d/SFL/OTZ/OTZ");
  ASSERT_FALSE(report.findings.empty());
  for (size_t i = 1; i < report.findings.size(); ++i) {
    EXPECT_LE(report.findings[i - 1].item_index, report.findings[i].item_index);
  }
  EXPECT_EQ(report.ErrorCount(), 4u);  // M2, M1 x2, M3
  // Deterministic.
  EXPECT_EQ(report.findings, Check("a/3B b c/ZZZ/EG d/SFL/OTZ/OTZ").findings);
}

TEST(ValidateTest, GoldenLinesHaveNoErrors) {
  const auto lines = testing::ReadLines(testing::TestDataPath("golden_lines.txt"));
  for (size_t i = 0; i < lines.size(); ++i) {
    const Mode mode = i % 2 ? Mode::kSyntactic : Mode::kMorphological;
    const auto report = Check(lines[i], mode);
    EXPECT_FALSE(report.HasErrors()) << lines[i];
  }
}

TEST(ValidateTest, MutationSuiteIsDetected) {
  const auto &suite = testing::MutationSuite();
  ASSERT_GE(suite.size(), 20u);
  for (const auto &c : suite) {
    const auto rules = ErrorRules(testing::CheckLine(c.line, c.mode, SeedRegistry()));
    EXPECT_NE(std::find(rules.begin(), rules.end(), c.rule), rules.end())
        << c.line << " expected " << ToString(c.rule);
  }
}

// Property: sentences generated to respect the slot rules never fail them.
TEST(ValidateTest, GeneratorAgreement) {
  for (const Registry *registry : {&SeedRegistry(), &testing::CompleteRegistry()}) {
    testing::SentenceGenerator gen(*registry, 99);
    for (int i = 0; i < 1000; ++i) {
      const auto s = gen.Next(i % 2 ? Mode::kSyntactic : Mode::kMorphological);
      const auto report = Validate(s, *registry);
      ASSERT_FALSE(report.HasErrors()) << SerializeLine(s);
    }
  }
}

}  // namespace
}  // namespace uzannot
