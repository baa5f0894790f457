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

#include "uzannot/stats.h"

#include <set>

namespace uzannot {

StoreStats ComputeStoreStats(const Store &store) {
  StoreStats stats;
  std::map<std::string, std::string> category_of;
  for (const auto &text : store.ListTexts()) {
    ++stats.texts;
    category_of[text.id] = text.category;
    ++stats.categories[text.category].texts;
  }
  for (const auto &sentence : store.ListSentences()) {
    size_t words = 0;
    for (const auto &token : sentence.tokens) {
      if (!IsPunctuationToken(token)) ++words;
    }
    ++stats.sentences;
    stats.words += words;
    auto &category = stats.categories[category_of[sentence.text_id]];
    ++category.sentences;
    category.words += words;
  }
  for (const auto &annotation : store.ListAnnotations()) {
    if (annotation.state != AnnotationState::kConfirmed) continue;
    if (annotation.mode() == Mode::kMorphological) {
      ++stats.confirmed_morphological;
    } else {
      ++stats.confirmed_syntactic;
    }
  }
  return stats;
}

CorpusFileStats ComputeCorpusStats(std::span<const CorpusRecord> records) {
  CorpusFileStats stats;
  std::set<std::string> sentences;
  for (const auto &record : records) {
    ++stats.annotations;
    sentences.insert(record.sentence_id);
    stats.units += UnitCount(record.sentence);
    stats.words += SentenceWords(record.sentence).size();
    if (record.sentence.mode == Mode::kMorphological) {
      ++stats.morphological;
    } else {
      ++stats.syntactic;
    }
    if (!record.category.empty()) ++stats.categories[record.category];
  }
  stats.distinct_sentences = sentences.size();
  return stats;
}

}  // namespace uzannot
