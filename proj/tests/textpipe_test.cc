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

#include <map>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "uzannot/utf8.h"

namespace uzannot {
namespace {

using Strings = std::vector<std::string>;

TEST(Utf8Test, DecodeEncodeRoundTrip) {
  const std::string text = "aТʻ😀";
  const auto cps = utf8::Decode(text);
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[1].value, U'Т');
  EXPECT_EQ(cps[1].offset, 1u);
  EXPECT_EQ(cps[1].length, 2u);
  EXPECT_EQ(cps[3].length, 4u);
  std::string again;
  for (const auto &cp : cps) utf8::Append(again, cp.value);
  EXPECT_EQ(again, text);
}

TEST(Utf8Test, InvalidBytesDoNotLoop) {
  const std::string bad = "a\xC3\x28\xFF" "b";
  const auto cps = utf8::Decode(bad);
  size_t covered = 0;
  for (const auto &cp : cps) covered += cp.length;
  EXPECT_EQ(covered, bad.size());
}

TEST(Utf8Test, Classes) {
  EXPECT_TRUE(utf8::IsCyrillicLetter(U'ў'));
  EXPECT_TRUE(utf8::IsCyrillicLetter(U'Қ'));
  EXPECT_FALSE(utf8::IsCyrillicLetter(U'q'));
  EXPECT_TRUE(utf8::IsLatinLetter(U'q'));
  EXPECT_TRUE(utf8::IsUpper(U'Ғ'));
  EXPECT_EQ(utf8::ToLower(U'Ғ'), U'ғ');
  EXPECT_EQ(utf8::ToUpper(U'ҳ'), U'Ҳ');
  EXPECT_EQ(utf8::ToUpper(U'ё'), U'Ё');
  EXPECT_TRUE(utf8::IsApostrophe(U'\''));
  EXPECT_TRUE(utf8::IsApostrophe(U'’'));
  EXPECT_TRUE(utf8::IsApostrophe(U'ʻ'));
  EXPECT_TRUE(utf8::IsSpace(U' '));
}

TEST(DetectScriptTest, Ratios) {
  EXPECT_EQ(DetectScript("Salim keldi"), Script::kLatin);
  EXPECT_EQ(DetectScript("Тошкент"), Script::kCyrillic);
  // 10 Latin letters against 9 Cyrillic ones.
  EXPECT_EQ(DetectScript("Salim Тошкентга keldi"), Script::kLatin);
  EXPECT_EQ(DetectScript("ab вг"), Script::kMixed);
  EXPECT_EQ(DetectScript("123 !?"), Script::kLatin);
  EXPECT_EQ(DetectScript(""), Script::kLatin);
}

// Letter-by-letter oracle written out by hand for the cases below.
TEST(TransliterateTest, Examples) {
  EXPECT_EQ(Transliterate(""), "");
  EXPECT_EQ(Transliterate("Тошкент"), "Toshkent");
  EXPECT_EQ(Transliterate("чой"), "choy");
  EXPECT_EQ(Transliterate("Ўзбекистон"), "Oʻzbekiston");
  EXPECT_EQ(Transliterate("ғалла"), "gʻalla");
  EXPECT_EQ(Transliterate("Қўқон"), "Qoʻqon");
  EXPECT_EQ(Transliterate("Ҳаёт"), "Hayot");
  EXPECT_EQ(Transliterate("Юлдуз ва Янги йил"), "Yulduz va Yangi yil");
  EXPECT_EQ(Transliterate("мактабга"), "maktabga");
  EXPECT_EQ(Transliterate("съезд"), "sʼezd");
  EXPECT_EQ(Transliterate("Шаҳар, 2024!"), "Shahar, 2024!");
  EXPECT_EQ(Transliterate("Salim Тошкентга keldi"), "Salim Toshkentga keldi");
}

TEST(TransliterateTest, LatinIsUnchanged) {
  for (const std::string text : {"Anvar to'satdan eshik yoniga keldi.", "oʻgʻil", "x y z 12"}) {
    EXPECT_EQ(Transliterate(text), text);
  }
}

TEST(TransliterateTest, UnmappedCyrillicNamesCharacterAndOffset) {
  try {
    Transliterate("ab Ѣc");
    FAIL();
  } catch (const TransliterationError &e) {
    EXPECT_EQ(e.character(), "Ѣ");
    EXPECT_EQ(e.offset(), 3u);
  }
}

TEST(TransliterateTest, LongestMatchWins) {
  TranslitTable table;
  table.Add("с", "s");
  table.Add("х", "x");
  table.Add("сх", "s'h");
  for (const auto &[from, to] : {std::pair{"е", "e"}, {"м", "m"}, {"а", "a"}}) table.Add(from, to);
  EXPECT_EQ(Transliterate("Схема сах", table), "S'hema sax");
  EXPECT_EQ(table.max_key_length(), 2u);
}

TEST(TransliterateTest, TableParsing) {
  std::istringstream good("# c\nа\ta\nь\t\n");
  EXPECT_EQ(TranslitTable::Load(good).size(), 2u);
  std::istringstream bad("а a\n");
  EXPECT_THROW(TranslitTable::Load(bad), FormatError);
}

// Property: random strings over the mapped alphabet transliterate to what an
// independent per-letter map gives, and the result is detected as Latin.
TEST(TransliterateTest, AgreesWithIndependentMap) {
  const std::map<std::string, std::pair<std::string, std::string>> oracle = {
      {"а", {"a", "A"}},   {"б", {"b", "B"}},   {"в", {"v", "V"}},   {"г", {"g", "G"}},
      {"д", {"d", "D"}},   {"е", {"e", "E"}},   {"ё", {"yo", "Yo"}}, {"ж", {"j", "J"}},
      {"з", {"z", "Z"}},   {"и", {"i", "I"}},   {"й", {"y", "Y"}},   {"к", {"k", "K"}},
      {"л", {"l", "L"}},   {"м", {"m", "M"}},   {"н", {"n", "N"}},   {"о", {"o", "O"}},
      {"п", {"p", "P"}},   {"р", {"r", "R"}},   {"с", {"s", "S"}},   {"т", {"t", "T"}},
      {"у", {"u", "U"}},   {"ф", {"f", "F"}},   {"х", {"x", "X"}},   {"ц", {"ts", "Ts"}},
      {"ч", {"ch", "Ch"}}, {"ш", {"sh", "Sh"}}, {"э", {"e", "E"}},   {"ю", {"yu", "Yu"}},
      {"я", {"ya", "Ya"}}, {"ў", {"oʻ", "Oʻ"}}, {"қ", {"q", "Q"}},   {"ғ", {"gʻ", "Gʻ"}},
      {"ҳ", {"h", "H"}}};
  std::vector<std::pair<std::string, std::string>> letters;  // cyrillic, latin
  for (const auto &[cyr, lat] : oracle) {
    letters.push_back({cyr, lat.first});
    std::string upper;
    utf8::Append(upper, utf8::ToUpper(utf8::DecodeAt(cyr, 0).value));
    letters.push_back({upper, lat.second});
  }
  letters.push_back({" ", " "});
  letters.push_back({".", "."});

  std::mt19937 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::string input;
    std::string expected;
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    for (int i = 0; i < n; ++i) {
      const auto &[cyr, lat] =
          letters[std::uniform_int_distribution<size_t>(0, letters.size() - 1)(rng)];
      input += cyr;
      expected += lat;
    }
    const std::string latin = Transliterate(input);
    ASSERT_EQ(latin, expected) << input;
    EXPECT_EQ(DetectScript(latin), Script::kLatin) << input;
    EXPECT_EQ(Transliterate(latin), latin);
  }
}

TEST(SplitSentencesTest, Examples) {
  EXPECT_EQ(SplitSentences("Salim keldi."), Strings{"Salim keldi."});
  EXPECT_EQ(SplitSentences("Salim keldi. Anvar ketdi."),
            (Strings{"Salim keldi.", "Anvar ketdi."}));
  EXPECT_TRUE(SplitSentences("").empty());
  EXPECT_TRUE(SplitSentences("  \n ").empty());
  EXPECT_EQ(SplitSentences("Nima? Ha! Yo'q."), (Strings{"Nima?", "Ha!", "Yo'q."}));
  // No boundary before a lowercase letter or without whitespace.
  EXPECT_EQ(SplitSentences("Soat 3.5 da keldi. u ketdi"),
            Strings{"Soat 3.5 da keldi. u ketdi"});
  EXPECT_EQ(SplitSentences("Bir.Ikki."), Strings{"Bir.Ikki."});
  EXPECT_EQ(SplitSentences("  Bir.\n\nIkki  "), (Strings{"Bir.", "Ikki"}));
  EXPECT_EQ(SplitSentences("Bir. Ўзбек тили."), (Strings{"Bir.", "Ўзбек тили."}));
}

// Property: sentences plus the discarded gaps rebuild the input exactly, and
// every gap is whitespace.
TEST(SplitSentencesTest, ReconstructsInput) {
  const Strings pieces = {"Salim", "keldi", ".", " ", "  ", "\n", "Anvar", "ketdi", "?", "!",
                          "u", "Ўзбек", "3.5", "to'g'ri", "\t", ","};
  std::mt19937 rng(11);
  for (int round = 0; round < 1000; ++round) {
    std::string body;
    const int n = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int i = 0; i < n; ++i) {
      body += pieces[std::uniform_int_distribution<size_t>(0, pieces.size() - 1)(rng)];
    }
    std::string rebuilt;
    size_t cursor = 0;
    for (const Span &span : SplitSentenceSpans(body)) {
      ASSERT_GE(span.offset, cursor);
      const std::string gap = body.substr(cursor, span.offset - cursor);
      for (char c : gap) ASSERT_TRUE(c == ' ' || c == '\n' || c == '\t') << body;
      ASSERT_GT(span.length, 0u);
      rebuilt += gap + body.substr(span.offset, span.length);
      cursor = span.offset + span.length;
    }
    for (char c : body.substr(cursor)) ASSERT_TRUE(c == ' ' || c == '\n' || c == '\t');
    rebuilt += body.substr(cursor);
    ASSERT_EQ(rebuilt, body);
  }
}

TEST(TokenizeTest, Examples) {
  EXPECT_EQ(Tokenize("Anvar to'satdan eshik yoniga keldi"),
            (Strings{"Anvar", "to'satdan", "eshik", "yoniga", "keldi"}));
  EXPECT_EQ(Tokenize("Salim keldi."), (Strings{"Salim", "keldi", "."}));
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_EQ(Tokenize("narxiga emas, ishlash"), (Strings{"narxiga", "emas", ",", "ishlash"}));
  EXPECT_EQ(Tokenize("e'tibor oʻgʻil to’g’ri"), (Strings{"e'tibor", "oʻgʻil", "to’g’ri"}));
  EXPECT_EQ(Tokenize("Nima?!"), (Strings{"Nima", "?", "!"}));
}

TEST(TokenizeTest, SeparatorsRebuildSurface) {
  const std::string surface = "  Bugun, ertaga\t va  keyin!";
  const auto t = TokenizeWithSeparators(surface);
  ASSERT_EQ(t.separators.size(), t.tokens.size() + 1);
  std::string rebuilt;
  for (size_t i = 0; i < t.tokens.size(); ++i) rebuilt += t.separators[i] + t.tokens[i];
  rebuilt += t.separators.back();
  EXPECT_EQ(rebuilt, surface);
}

// Property: no empty tokens; single-space joins with no space before
// punctuation give back single-spaced surfaces.
TEST(TokenizeTest, JoinProperty) {
  const Strings words = {"Salim", "keldi", "to'satdan", "oʻgʻil", "narxiga", "ertaga", "Ўзбек"};
  const Strings marks = {",", ".", "!", "?", ";", ":"};
  std::mt19937 rng(3);
  for (int round = 0; round < 500; ++round) {
    std::string surface;
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < n; ++i) {
      if (!surface.empty()) surface += ' ';
      surface += words[std::uniform_int_distribution<size_t>(0, words.size() - 1)(rng)];
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        surface += marks[std::uniform_int_distribution<size_t>(0, marks.size() - 1)(rng)];
      }
    }
    std::string joined;
    for (const auto &token : Tokenize(surface)) {
      ASSERT_FALSE(token.empty());
      if (!joined.empty() && !IsPunctuationToken(token)) joined += ' ';
      joined += token;
    }
    ASSERT_EQ(joined, surface);
  }
}

TEST(PrepareTextTest, TransliteratesThenSplits) {
  const PreparedText prepared = PrepareText("Салим келди. Anvar ketdi.");
  EXPECT_EQ(prepared.script, Script::kMixed);
  EXPECT_EQ(prepared.surfaces, (Strings{"Salim keldi.", "Anvar ketdi."}));
  ASSERT_EQ(prepared.sentences.size(), 2u);
  EXPECT_EQ(prepared.sentences[0].tokens, (Strings{"Salim", "keldi", "."}));

  const PreparedText cyrillic = PrepareText("Она уйга келди.");
  EXPECT_EQ(cyrillic.script, Script::kCyrillic);
  EXPECT_EQ(cyrillic.surfaces, Strings{"Ona uyga keldi."});
}

}  // namespace
}  // namespace uzannot
