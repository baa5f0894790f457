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

#ifndef UZANNOT_TEXTPIPE_H_
#define UZANNOT_TEXTPIPE_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uzannot/errors.h"

namespace uzannot {

enum class Script { kLatin, kCyrillic, kMixed };

std::string_view ToString(Script script);
std::optional<Script> ParseScript(std::string_view name);

struct RawText {
  std::string id;
  std::string body;
  std::string category;
  Script script = Script::kLatin;
  long long created_at = 0;

  bool operator==(const RawText &) const = default;
};

// One sentence of an ingested text. separators has tokens.size() + 1 entries:
// leading text, the gaps between tokens, trailing text. Interleaving them
// with the tokens gives back |surface| exactly.
struct SentenceRecord {
  std::string id;
  std::string text_id;
  int index = 0;
  std::string surface;
  std::vector<std::string> tokens;
  std::vector<std::string> separators;

  bool operator==(const SentenceRecord &) const = default;
};

// Counts Latin and Cyrillic letters; whichever exceeds half of all letters
// wins, otherwise MIXED. Text with no letters at all is LATIN.
Script DetectScript(std::string_view body);

// Raised when a Cyrillic letter has no mapping.
class TransliterationError : public FormatError {
 public:
  TransliterationError(std::string character, size_t offset);

  const std::string &character() const { return character_; }
  size_t offset() const { return offset_; }

 private:
  std::string character_;
  size_t offset_;
};

// Cyrillic to Latin mapping keyed by lowercase Cyrillic sequences. Lookup is
// longest match first; an uppercase first letter capitalizes the output.
class TranslitTable {
 public:
  // Reads `cyr<TAB>lat` lines; '#' lines and blank lines are skipped.
  static TranslitTable Load(std::istream &source);

  // The table shipped in data/translit, compiled in.
  static const TranslitTable &Builtin();

  void Add(std::string_view cyrillic, std::string_view latin);

  size_t size() const { return rules_.size(); }
  size_t max_key_length() const { return max_key_length_; }

  // Finds the longest rule matching the lowercase code points starting at
  // |keys[pos]|. Returns the matched length in code points (0 if none).
  size_t Match(const std::vector<char32_t> &keys, size_t pos,
               const std::string **latin) const;

 private:
  std::map<std::u32string, std::string> rules_;
  size_t max_key_length_ = 0;
};

// Replaces every Cyrillic letter per |table|; everything else passes through.
// Throws TransliterationError naming the first unmapped Cyrillic letter.
std::string Transliterate(std::string_view body,
                          const TranslitTable &table = TranslitTable::Builtin());

struct Span {
  size_t offset = 0;
  size_t length = 0;

  bool operator==(const Span &) const = default;
};

// Sentence boundaries: after '.', '!' or '?' when followed by whitespace and
// then an uppercase letter or the end of the text. The whitespace between
// sentences is not part of either sentence.
std::vector<Span> SplitSentenceSpans(std::string_view body);
std::vector<std::string> SplitSentences(std::string_view body);

struct TokenizedSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> separators;
};

// Splits on whitespace and emits , . ! ? ; : as tokens of their own. An
// apostrophe between two letters stays inside the word.
TokenizedSentence TokenizeWithSeparators(std::string_view surface);
std::vector<std::string> Tokenize(std::string_view surface);

bool IsPunctuationToken(std::string_view token);

// Output of the ingest pipeline: transliterate when Cyrillic letters are
// present, split into sentences, tokenize each.
struct PreparedText {
  Script script = Script::kLatin;
  std::string latin_body;
  std::vector<std::string> surfaces;
  std::vector<TokenizedSentence> sentences;
};

PreparedText PrepareText(std::string_view body,
                         const TranslitTable &table = TranslitTable::Builtin());

}  // namespace uzannot

#endif  // UZANNOT_TEXTPIPE_H_
