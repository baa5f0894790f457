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

#ifndef UZANNOT_STATS_H_
#define UZANNOT_STATS_H_

#include <map>
#include <span>
#include <string>

#include "uzannot/corpus_format.h"
#include "uzannot/store.h"

namespace uzannot {

struct CategoryCounts {
  size_t texts = 0;
  size_t sentences = 0;
  size_t words = 0;

  bool operator==(const CategoryCounts &) const = default;
};

// Counters over everything ingested into a store. |words| counts the
// non-punctuation tokens of every sentence.
struct StoreStats {
  size_t texts = 0;
  size_t sentences = 0;
  size_t words = 0;
  size_t confirmed_morphological = 0;
  size_t confirmed_syntactic = 0;
  std::map<std::string, CategoryCounts> categories;
};

StoreStats ComputeStoreStats(const Store &store);

// Counters over an exported corpus file. |units| counts annotation units
// (whitespace-separated items other than punctuation); |words| counts the
// words inside them, so "eshik+yoniga/OH" is one unit and two words.
struct CorpusFileStats {
  size_t annotations = 0;
  size_t distinct_sentences = 0;
  size_t units = 0;
  size_t words = 0;
  size_t morphological = 0;
  size_t syntactic = 0;
  // Annotations per text category; empty for TXT input.
  std::map<std::string, size_t> categories;
};

CorpusFileStats ComputeCorpusStats(std::span<const CorpusRecord> records);

}  // namespace uzannot

#endif  // UZANNOT_STATS_H_
