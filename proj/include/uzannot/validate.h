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

#ifndef UZANNOT_VALIDATE_H_
#define UZANNOT_VALIDATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "uzannot/annotation.h"
#include "uzannot/tagset.h"

namespace uzannot {

enum class Severity { kError, kWarning };

std::string_view ToString(Severity severity);

// Rule identifiers:
//   M1  tag code unknown, or its kind does not match the sentence mode
//   M2  first tag of a morphological unit is not a BASE tag
//   M3  morphological slots out of order (BASE < PERSON_NUMBER < TENSE) or a
//       PERSON_NUMBER / TENSE slot repeated
//   S1  syntactic unit with more than one tag
//   U1  untagged word unit
//   P0  the line could not be parsed (used by corpus-level validation)
enum class Rule { kM1, kM2, kM3, kS1, kU1, kP0 };

std::string_view ToString(Rule rule);

struct Finding {
  Severity severity = Severity::kError;
  int item_index = 0;
  Rule rule = Rule::kM1;
  std::string message;

  bool operator==(const Finding &) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;  // sorted by item index

  bool HasErrors() const;
  size_t ErrorCount() const;
  size_t WarningCount() const;
};

ValidationReport Validate(const AnnotatedSentence &sentence, const Registry &registry);

}  // namespace uzannot

#endif  // UZANNOT_VALIDATE_H_
