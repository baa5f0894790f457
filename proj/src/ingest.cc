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

#include "uzannot/ingest.h"

namespace uzannot {

IngestResult IngestText(Store &store, std::string body, std::string category,
                        const TranslitTable &table) {
  if (body.empty()) throw FormatError("text body is empty");
  if (category.empty()) throw FormatError("text category is empty");
  PreparedText prepared = PrepareText(body, table);
  if (prepared.surfaces.empty()) throw FormatError("text contains no sentences");
  auto [text, sentences] = store.AddText(std::move(body), std::move(category), prepared.script,
                                         prepared.surfaces, prepared.sentences);
  return {std::move(text), std::move(sentences)};
}

}  // namespace uzannot
