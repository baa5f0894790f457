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

#include "uzannot/textpipe.h"

#include <sstream>

#include "str_util.h"
#include "uzannot/utf8.h"

namespace uzannot {

namespace embedded {
extern const std::string_view kTranslitTable;
}  // namespace embedded

namespace {

bool IsSentenceEnd(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

bool IsPunctuation(char32_t cp) {
  switch (cp) {
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

std::u32string LowerKey(std::string_view text) {
  std::u32string key;
  for (const auto &cp : utf8::Decode(text)) key.push_back(utf8::ToLower(cp.value));
  return key;
}

// Uppercases the first code point of |text|.
std::string Capitalize(const std::string &text) {
  if (text.empty()) return text;
  const auto first = utf8::DecodeAt(text, 0);
  std::string out = utf8::Encode(utf8::ToUpper(first.value));
  out.append(text, first.length, std::string::npos);
  return out;
}

}  // namespace

std::string_view ToString(Script script) {
  switch (script) {
    case Script::kLatin:
      return "LATIN";
    case Script::kCyrillic:
      return "CYRILLIC";
    case Script::kMixed:
      return "MIXED";
  }
  return "";
}

std::optional<Script> ParseScript(std::string_view name) {
  if (name == "LATIN") return Script::kLatin;
  if (name == "CYRILLIC") return Script::kCyrillic;
  if (name == "MIXED") return Script::kMixed;
  return std::nullopt;
}

Script DetectScript(std::string_view body) {
  size_t latin = 0;
  size_t cyrillic = 0;
  for (const auto &cp : utf8::Decode(body)) {
    if (utf8::IsLatinLetter(cp.value)) {
      ++latin;
    } else if (utf8::IsCyrillicLetter(cp.value)) {
      ++cyrillic;
    }
  }
  const size_t letters = latin + cyrillic;
  if (letters == 0) return Script::kLatin;
  if (2 * cyrillic > letters) return Script::kCyrillic;
  if (2 * latin > letters) return Script::kLatin;
  return Script::kMixed;
}

TransliterationError::TransliterationError(std::string character, size_t offset)
    : FormatError("no transliteration for '" + character + "' at byte offset " +
                  std::to_string(offset)),
      character_(std::move(character)),
      offset_(offset) {}

TranslitTable TranslitTable::Load(std::istream &source) {
  TranslitTable table;
  std::string raw;
  int line_number = 0;
  while (std::getline(source, raw)) {
    ++line_number;
    std::string_view line = internal::StripCarriageReturn(raw);
    if (internal::TrimAscii(line).empty() || line.front() == '#') continue;
    const auto fields = internal::Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw FormatError("transliteration table line " + std::to_string(line_number) +
                        ": expected cyr<TAB>lat");
    }
    table.Add(fields[0], fields[1]);
  }
  return table;
}

const TranslitTable &TranslitTable::Builtin() {
  static const TranslitTable table = [] {
    std::istringstream in{std::string(embedded::kTranslitTable)};
    return Load(in);
  }();
  return table;
}

void TranslitTable::Add(std::string_view cyrillic, std::string_view latin) {
  std::u32string key = LowerKey(cyrillic);
  max_key_length_ = std::max(max_key_length_, key.size());
  rules_[std::move(key)] = std::string(latin);
}

size_t TranslitTable::Match(const std::vector<char32_t> &keys, size_t pos,
                            const std::string **latin) const {
  const size_t longest = std::min(max_key_length_, keys.size() - pos);
  for (size_t len = longest; len > 0; --len) {
    const std::u32string key(keys.begin() + pos, keys.begin() + pos + len);
    const auto it = rules_.find(key);
    if (it != rules_.end()) {
      *latin = &it->second;
      return len;
    }
  }
  return 0;
}

std::string Transliterate(std::string_view body, const TranslitTable &table) {
  const auto cps = utf8::Decode(body);
  std::vector<char32_t> keys;
  keys.reserve(cps.size());
  for (const auto &cp : cps) keys.push_back(utf8::ToLower(cp.value));

  std::string out;
  out.reserve(body.size());
  for (size_t i = 0; i < cps.size();) {
    const auto &cp = cps[i];
    if (!utf8::IsCyrillicLetter(cp.value)) {
      out.append(body.substr(cp.offset, cp.length));
      ++i;
      continue;
    }
    const std::string *latin = nullptr;
    const size_t matched = table.Match(keys, i, &latin);
    if (matched == 0) {
      throw TransliterationError(std::string(body.substr(cp.offset, cp.length)),
                                 cp.offset);
    }
    out += utf8::IsUpper(cp.value) ? Capitalize(*latin) : *latin;
    i += matched;
  }
  return out;
}

std::vector<Span> SplitSentenceSpans(std::string_view body) {
  const auto cps = utf8::Decode(body);
  std::vector<Span> spans;
  size_t i = 0;
  auto skip_space = [&](size_t k) {
    while (k < cps.size() && utf8::IsSpace(cps[k].value)) ++k;
    return k;
  };

  i = skip_space(0);
  size_t start = i;
  while (i < cps.size()) {
    if (IsSentenceEnd(cps[i].value)) {
      const size_t next = i + 1;
      bool boundary = next == cps.size();
      size_t resume = next;
      if (!boundary && utf8::IsSpace(cps[next].value)) {
        resume = skip_space(next);
        boundary = resume == cps.size() || utf8::IsUpper(cps[resume].value);
      }
      if (boundary) {
        const size_t begin = cps[start].offset;
        const size_t end = cps[i].offset + cps[i].length;
        spans.push_back({begin, end - begin});
        start = i = resume;
        continue;
      }
    }
    ++i;
  }
  if (start < cps.size()) {
    // Unterminated tail; drop trailing whitespace.
    size_t last = cps.size();
    while (last > start && utf8::IsSpace(cps[last - 1].value)) --last;
    const size_t begin = cps[start].offset;
    const size_t end = cps[last - 1].offset + cps[last - 1].length;
    spans.push_back({begin, end - begin});
  }
  return spans;
}

std::vector<std::string> SplitSentences(std::string_view body) {
  std::vector<std::string> sentences;
  for (const auto &span : SplitSentenceSpans(body)) {
    sentences.emplace_back(body.substr(span.offset, span.length));
  }
  return sentences;
}

TokenizedSentence TokenizeWithSeparators(std::string_view surface) {
  TokenizedSentence result;
  std::string separator;
  std::string word;
  auto flush_word = [&] {
    if (word.empty()) return;
    result.separators.push_back(std::move(separator));
    result.tokens.push_back(std::move(word));
    separator.clear();
    word.clear();
  };

  for (const auto &cp : utf8::Decode(surface)) {
    const std::string_view bytes = surface.substr(cp.offset, cp.length);
    if (utf8::IsSpace(cp.value)) {
      flush_word();
      separator.append(bytes);
    } else if (IsPunctuation(cp.value)) {
      flush_word();
      result.separators.push_back(std::move(separator));
      result.tokens.emplace_back(bytes);
      separator.clear();
    } else {
      word.append(bytes);
    }
  }
  flush_word();
  result.separators.push_back(std::move(separator));
  return result;
}

std::vector<std::string> Tokenize(std::string_view surface) {
  return TokenizeWithSeparators(surface).tokens;
}

bool IsPunctuationToken(std::string_view token) {
  return token.size() == 1 && IsPunctuation(static_cast<unsigned char>(token[0]));
}

PreparedText PrepareText(std::string_view body, const TranslitTable &table) {
  PreparedText prepared;
  prepared.script = DetectScript(body);
  bool has_cyrillic = false;
  for (const auto &cp : utf8::Decode(body)) {
    if (utf8::IsCyrillicLetter(cp.value)) {
      has_cyrillic = true;
      break;
    }
  }
  prepared.latin_body = has_cyrillic ? Transliterate(body, table) : std::string(body);
  prepared.surfaces = SplitSentences(prepared.latin_body);
  for (const auto &surface : prepared.surfaces) {
    prepared.sentences.push_back(TokenizeWithSeparators(surface));
  }
  return prepared;
}

}  // namespace uzannot
