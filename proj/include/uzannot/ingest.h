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

#ifndef UZANNOT_INGEST_H_
#define UZANNOT_INGEST_H_

#include <string>
#include <vector>

#include "uzannot/store.h"
#include "uzannot/textpipe.h"

namespace uzannot {

struct IngestResult {
  RawText text;
  std::vector<SentenceRecord> sentences;
};

// Runs the text pipeline over |body| and stores the text with its sentences.
// Throws FormatError for an empty body or category, a body without any
// sentence, or an unmapped Cyrillic letter (TransliterationError).
IngestResult IngestText(Store &store, std::string body, std::string category,
                        const TranslitTable &table = TranslitTable::Builtin());

}  // namespace uzannot

#endif  // UZANNOT_INGEST_H_
