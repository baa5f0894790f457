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

#ifndef UZANNOT_CORPUS_FORMAT_H_
#define UZANNOT_CORPUS_FORMAT_H_

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "uzannot/annotation.h"

namespace uzannot {

// One exported annotation. TXT carries sentence_id, annotator, mode and the
// line; XML additionally carries the text id, category and sentence index.
struct CorpusRecord {
  std::string text_id;
  std::string category;
  std::string sentence_id;
  int sentence_index = 0;
  std::string annotator;
  AnnotatedSentence sentence;

  bool operator==(const CorpusRecord &) const = default;
};

// Equality on the fields the TXT format preserves.
bool SameTxtFields(const CorpusRecord &a, const CorpusRecord &b);

// TXT: for each record a header line
//   ## sentence=<id> annotator=<expert-id> mode=<M|S>
// followed by the serialized annotation line. Identifiers must be non-empty
// and free of whitespace. Throws FormatError otherwise.
void ExportTxt(std::span<const CorpusRecord> records, std::ostream &out);
std::string ExportTxt(std::span<const CorpusRecord> records);
std::vector<CorpusRecord> ImportTxt(std::istream &in);

// XML: <corpus>/<text id category>/<sentence id index annotator mode>/
// <unit><w>..</w><t>..</t></unit> and <pc>..</pc>. Consecutive records with
// the same text id share one <text> element.
void ExportXml(std::span<const CorpusRecord> records, std::ostream &out);
std::string ExportXml(std::span<const CorpusRecord> records);
std::vector<CorpusRecord> ImportXml(std::istream &in);

struct TxtHeader {
  std::string sentence_id;
  std::string annotator;
  Mode mode = Mode::kMorphological;
};

// Parses a "## sentence=.. annotator=.. mode=.." line. Throws FormatError.
TxtHeader ParseTxtHeader(std::string_view line);
bool IsTxtHeaderLine(std::string_view line);

// Line-by-line view of a TXT corpus that keeps going past bad lines, for
// offline validation. Blank lines are skipped.
struct TxtEntry {
  int line_number = 0;
  std::optional<TxtHeader> header;       // header preceding this line, if any
  std::string line;
  std::optional<AnnotatedSentence> sentence;  // empty when parsing failed
  std::optional<std::string> error;
  size_t error_item = 0;
};

struct TxtScan {
  std::vector<TxtEntry> entries;
  // Malformed header lines: (line number, message).
  std::vector<std::pair<int, std::string>> header_errors;
};

// Lines without a header are parsed as morphological; the caller decides
// what mode they really are.
TxtScan ScanTxt(std::istream &in);

}  // namespace uzannot

#endif  // UZANNOT_CORPUS_FORMAT_H_
