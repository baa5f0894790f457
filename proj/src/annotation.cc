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

#include "uzannot/annotation.h"

#include "uzannot/tagset.h"
#include "uzannot/utf8.h"

namespace uzannot {

namespace {

bool IsLineSpace(char c) { return c == ' ' || c == '\t'; }

// Parses one unit "w1+w2/T1/T2" that starts at byte |column| of the line.
AnnotationUnit ParseUnit(std::string_view text, size_t column, int item_index) {
  AnnotationUnit unit;
  const size_t slash = text.find('/');
  const std::string_view words = text.substr(0, slash);

  size_t start = 0;
  while (true) {
    const size_t plus = words.find('+', start);
    const std::string_view word = words.substr(start, plus - start);
    if (word.empty()) {
      throw LineSyntaxError("empty word", column + start, item_index);
    }
    if (!IsValidWord(word)) {
      throw LineSyntaxError("word '" + std::string(word) + "' has a space or control character",
                            column + start, item_index);
    }
    unit.words.emplace_back(word);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }

  if (slash == std::string_view::npos) return unit;
  size_t pos = slash + 1;
  while (true) {
    const size_t next = text.find('/', pos);
    const std::string_view code = text.substr(pos, next - pos);
    if (code.empty()) {
      throw LineSyntaxError("empty tag code", column + pos, item_index);
    }
    for (size_t i = 0; i < code.size(); ++i) {
      const char c = code[i];
      if (c >= 'a' && c <= 'z') {
        throw LineSyntaxError("tag code '" + std::string(code) + "' contains lowercase",
                              column + pos + i, item_index);
      }
      if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))) {
        throw LineSyntaxError("tag code '" + std::string(code) + "' has invalid character",
                              column + pos + i, item_index);
      }
    }
    unit.tags.emplace_back(code);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return unit;
}

}  // namespace

std::string_view ModeCode(Mode mode) {
  return mode == Mode::kMorphological ? "M" : "S";
}

std::optional<Mode> ParseModeCode(std::string_view code) {
  if (code == "M") return Mode::kMorphological;
  if (code == "S") return Mode::kSyntactic;
  return std::nullopt;
}

LineSyntaxError::LineSyntaxError(const std::string &message, size_t column,
                                 int item_index)
    : FormatError(message + " at column " + std::to_string(column + 1)),
      column_(column),
      item_index_(item_index) {}

bool IsPunctuationMark(char c) {
  switch (c) {
    case ',':
    case '.':
    case '!':
    case '?':
    case ';':
    case ':':
      return true;
    default:
      return false;
  }
}

bool IsValidWord(std::string_view word) {
  if (word.empty()) return false;
  for (const auto &cp : utf8::Decode(word)) {
    if (utf8::IsSpace(cp.value) || cp.value < 0x20 || cp.value == 0x7F) return false;
    if (cp.value < 0x80) {
      const char c = static_cast<char>(cp.value);
      if (c == '/' || c == '+' || IsPunctuationMark(c)) return false;
    }
  }
  return true;
}

void CheckWellFormed(const AnnotatedSentence &sentence) {
  if (sentence.items.empty()) throw FormatError("sentence has no items");
  for (size_t i = 0; i < sentence.items.size(); ++i) {
    const auto where = " (item " + std::to_string(i) + ")";
    if (const auto *punct = std::get_if<Punctuation>(&sentence.items[i])) {
      if (!IsPunctuationMark(punct->mark)) throw FormatError("bad punctuation" + where);
      continue;
    }
    const auto &unit = std::get<AnnotationUnit>(sentence.items[i]);
    if (unit.words.empty()) throw FormatError("unit without words" + where);
    for (const auto &word : unit.words) {
      if (!IsValidWord(word)) throw FormatError("invalid word '" + word + "'" + where);
    }
    for (const auto &tag : unit.tags) {
      if (!IsValidTagCode(tag)) throw FormatError("invalid tag code '" + tag + "'" + where);
    }
  }
}

AnnotatedSentence ParseLine(std::string_view line, Mode mode) {
  AnnotatedSentence sentence;
  sentence.mode = mode;
  size_t pos = 0;
  while (pos < line.size()) {
    if (IsLineSpace(line[pos])) {
      ++pos;
      continue;
    }
    const int item_index = static_cast<int>(sentence.items.size());
    if (IsPunctuationMark(line[pos])) {
      sentence.items.emplace_back(Punctuation{line[pos]});
      ++pos;
      continue;
    }
    size_t end = pos;
    while (end < line.size() && !IsLineSpace(line[end]) && !IsPunctuationMark(line[end])) {
      ++end;
    }
    sentence.items.emplace_back(ParseUnit(line.substr(pos, end - pos), pos, item_index));
    pos = end;
  }
  if (sentence.items.empty()) throw LineSyntaxError("empty line", 0, 0);
  return sentence;
}

std::string SerializeLine(const AnnotatedSentence &sentence) {
  std::string out;
  for (const auto &item : sentence.items) {
    if (const auto *punct = std::get_if<Punctuation>(&item)) {
      out.push_back(punct->mark);
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    const auto &unit = std::get<AnnotationUnit>(item);
    for (size_t i = 0; i < unit.words.size(); ++i) {
      if (i > 0) out.push_back('+');
      out += unit.words[i];
    }
    for (const auto &tag : unit.tags) {
      out.push_back('/');
      out += tag;
    }
  }
  return out;
}

std::vector<std::string> SentenceWords(const AnnotatedSentence &sentence) {
  std::vector<std::string> words;
  for (const auto &item : sentence.items) {
    if (const auto *unit = std::get_if<AnnotationUnit>(&item)) {
      words.insert(words.end(), unit->words.begin(), unit->words.end());
    }
  }
  return words;
}

size_t UnitCount(const AnnotatedSentence &sentence) {
  size_t n = 0;
  for (const auto &item : sentence.items) {
    if (std::holds_alternative<AnnotationUnit>(item)) ++n;
  }
  return n;
}

}  // namespace uzannot
