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

#include <algorithm>

namespace uzannot {

namespace {

// Rank of a morphological slot in the required order.
int SlotRank(TagSlot slot) {
  switch (slot) {
    case TagSlot::kBase:
      return 0;
    case TagSlot::kPersonNumber:
      return 1;
    case TagSlot::kTense:
      return 2;
    case TagSlot::kRole:
      return 3;
  }
  return 3;
}

std::string UnitText(const AnnotationUnit &unit) {
  std::string text;
  for (size_t i = 0; i < unit.words.size(); ++i) {
    if (i > 0) text.push_back('+');
    text += unit.words[i];
  }
  return text;
}

void CheckMorphological(const AnnotationUnit &unit, int index,
                        const std::vector<const TagDefinition *> &resolved,
                        std::vector<Finding> &findings) {
  const auto add = [&](Rule rule, std::string message) {
    findings.push_back({Severity::kError, index, rule, std::move(message)});
  };

  if (resolved.front() != nullptr && resolved.front()->slot != TagSlot::kBase) {
    add(Rule::kM2, "'" + UnitText(unit) + "' starts with " + unit.tags.front() + " (" +
                       std::string(ToString(resolved.front()->slot)) +
                       "), expected a BASE tag");
  }

  int previous_rank = -1;
  int person_number = 0;
  int tense = 0;
  for (size_t i = 0; i < resolved.size(); ++i) {
    const TagDefinition *tag = resolved[i];
    if (tag == nullptr) continue;
    const int rank = SlotRank(tag->slot);
    if (tag->slot == TagSlot::kPersonNumber && ++person_number == 2) {
      add(Rule::kM3, "'" + UnitText(unit) + "' has more than one PERSON_NUMBER tag");
    }
    if (tag->slot == TagSlot::kTense && ++tense == 2) {
      add(Rule::kM3, "'" + UnitText(unit) + "' has more than one TENSE tag");
    }
    if (rank < previous_rank) {
      add(Rule::kM3, "'" + UnitText(unit) + "': " + unit.tags[i] + " (" +
                         std::string(ToString(tag->slot)) + ") is out of slot order");
    }
    previous_rank = std::max(previous_rank, rank);
  }
}

}  // namespace

std::string_view ToString(Severity severity) {
  return severity == Severity::kError ? "ERROR" : "WARNING";
}

std::string_view ToString(Rule rule) {
  switch (rule) {
    case Rule::kM1:
      return "M1";
    case Rule::kM2:
      return "M2";
    case Rule::kM3:
      return "M3";
    case Rule::kS1:
      return "S1";
    case Rule::kU1:
      return "U1";
    case Rule::kP0:
      return "P0";
  }
  return "";
}

bool ValidationReport::HasErrors() const { return ErrorCount() > 0; }

size_t ValidationReport::ErrorCount() const {
  return std::count_if(findings.begin(), findings.end(),
                       [](const Finding &f) { return f.severity == Severity::kError; });
}

size_t ValidationReport::WarningCount() const { return findings.size() - ErrorCount(); }

ValidationReport Validate(const AnnotatedSentence &sentence, const Registry &registry) {
  const TagKind expected_kind = sentence.mode == Mode::kMorphological
                                    ? TagKind::kMorphological
                                    : TagKind::kSyntactic;
  ValidationReport report;
  auto &findings = report.findings;

  for (size_t i = 0; i < sentence.items.size(); ++i) {
    const auto *unit = std::get_if<AnnotationUnit>(&sentence.items[i]);
    if (unit == nullptr) continue;
    const int index = static_cast<int>(i);

    if (unit->tags.empty()) {
      findings.push_back({Severity::kWarning, index, Rule::kU1,
                          "'" + UnitText(*unit) + "' is untagged"});
      continue;
    }

    // Resolve every code; unresolved or wrong-kind codes stay null so the
    // slot rules only look at tags that could be checked.
    std::vector<const TagDefinition *> resolved;
    for (const auto &code : unit->tags) {
      const TagDefinition *tag = registry.Lookup(code);
      if (tag == nullptr) {
        findings.push_back({Severity::kError, index, Rule::kM1,
                            "unknown tag code " + code});
      } else if (tag->kind != expected_kind) {
        findings.push_back({Severity::kError, index, Rule::kM1,
                            code + " is " + std::string(ToString(tag->kind)) +
                                ", sentence mode is " +
                                std::string(ToString(expected_kind))});
        tag = nullptr;
      }
      resolved.push_back(tag);
    }

    if (sentence.mode == Mode::kMorphological) {
      CheckMorphological(*unit, index, resolved, findings);
    } else if (unit->tags.size() != 1) {
      findings.push_back({Severity::kError, index, Rule::kS1,
                          "'" + UnitText(*unit) + "' has " +
                              std::to_string(unit->tags.size()) +
                              " syntactic tags, expected exactly one"});
    }
  }

  std::stable_sort(findings.begin(), findings.end(), [](const Finding &a, const Finding &b) {
    return a.item_index < b.item_index;
  });
  return report;
}

}  // namespace uzannot
