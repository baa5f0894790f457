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

#ifndef UZANNOT_UTF8_H_
#define UZANNOT_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace uzannot::utf8 {

// One decoded code point and its byte range in the source string.
struct CodePoint {
  char32_t value = 0;
  size_t offset = 0;
  size_t length = 0;
};

// Decodes the code point starting at byte |pos|. Malformed sequences decode
// as a single U+FFFD covering one byte, so iteration always advances.
CodePoint DecodeAt(std::string_view text, size_t pos);

// Decodes the whole string.
std::vector<CodePoint> Decode(std::string_view text);

void Append(std::string &out, char32_t cp);
std::string Encode(char32_t cp);

bool IsCyrillicLetter(char32_t cp);
bool IsLatinLetter(char32_t cp);
bool IsLetter(char32_t cp);
bool IsUpper(char32_t cp);

// Unicode whitespace commonly found in running text.
bool IsSpace(char32_t cp);

// Simple case mapping for the Latin and Cyrillic ranges used by Uzbek.
char32_t ToLower(char32_t cp);
char32_t ToUpper(char32_t cp);

// Apostrophe-like marks that join the two halves of a word (o'zbek, e'tibor).
bool IsApostrophe(char32_t cp);

}  // namespace uzannot::utf8

#endif  // UZANNOT_UTF8_H_
