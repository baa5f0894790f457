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

#ifndef UZANNOT_ANNOTATION_H_
#define UZANNOT_ANNOTATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "uzannot/errors.h"

namespace uzannot {

enum class Mode { kMorphological, kSyntactic };

// "M" / "S", the spelling used in headers, XML attributes and the HTTP API.
std::string_view ModeCode(Mode mode);
std::optional<Mode> ParseModeCode(std::string_view code);

// One or more plus-joined words and their tag codes. An empty tag list is
// an untagged word.
struct AnnotationUnit {
  std::vector<std::string> words;
  std::vector<std::string> tags;

  bool operator==(const AnnotationUnit &) const = default;
};

// A single punctuation character: , . ! ? ; :
struct Punctuation {
  char mark = ',';

  bool operator==(const Punctuation &) const = default;
};

using AnnotationItem = std::variant<AnnotationUnit, Punctuation>;

struct AnnotatedSentence {
  Mode mode = Mode::kMorphological;
  std::vector<AnnotationItem> items;

  bool operator==(const AnnotatedSentence &) const = default;
};

// Parse failure with the byte column where it was detected.
class LineSyntaxError : public FormatError {
 public:
  LineSyntaxError(const std::string &message, size_t column, int item_index);

  size_t column() const { return column_; }
  int item_index() const { return item_index_; }

 private:
  size_t column_;
  int item_index_;
};

bool IsPunctuationMark(char c);

// True if |word| is non-empty and free of whitespace, '/', '+' and the
// punctuation marks.
bool IsValidWord(std::string_view word);

// Checks the structural invariants (non-empty sentence, non-empty units,
// valid words and codes). Throws FormatError describing the first violation.
void CheckWellFormed(const AnnotatedSentence &sentence);

// Parses the slash notation, e.g. "Anvar/SOT eshik+yoniga/OH keldi/FK".
// Punctuation is split off whatever it touches, so "KEZ," yields the tag KEZ
// followed by a comma item. Throws LineSyntaxError.
AnnotatedSentence ParseLine(std::string_view line, Mode mode);

// Inverse of ParseLine: items joined by single spaces, no space before
// punctuation.
std::string SerializeLine(const AnnotatedSentence &sentence);

// Words of all units, in order (punctuation excluded).
std::vector<std::string> SentenceWords(const AnnotatedSentence &sentence);
size_t UnitCount(const AnnotatedSentence &sentence);

}  // namespace uzannot

#endif  // UZANNOT_ANNOTATION_H_
