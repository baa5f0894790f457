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

#include "uzannot/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "uzannot/corpus_format.h"
#include "uzannot/ingest.h"
#include "uzannot/stats.h"
#include "uzannot/store.h"
#include "uzannot/tagset.h"
#include "uzannot/validate.h"

namespace uzannot::cli {

namespace {

std::unique_ptr<Store> OpenStore(const std::filesystem::path &data_dir) {
  return Store::Open(data_dir);
}

std::optional<std::string> ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Headerless lines: syntactic when every code is a known syntactic tag.
Mode InferMode(const AnnotatedSentence &sentence, const Registry &registry) {
  bool any_tag = false;
  for (const auto &item : sentence.items) {
    const auto *unit = std::get_if<AnnotationUnit>(&item);
    if (unit == nullptr) continue;
    for (const auto &code : unit->tags) {
      any_tag = true;
      const auto *tag = registry.Lookup(code);
      if (tag == nullptr || tag->kind != TagKind::kSyntactic) return Mode::kMorphological;
    }
  }
  return any_tag ? Mode::kSyntactic : Mode::kMorphological;
}

void PrintFinding(std::ostream &out, int line, const Finding &f) {
  out << line << ':' << f.item_index << ':' << ToString(f.severity) << ':' << ToString(f.rule)
      << ": " << f.message << '\n';
}

// Loads TXT records leniently; malformed lines are reported and skipped.
std::vector<CorpusRecord> ScanTxtRecords(std::istream &in, std::ostream &err, bool *malformed) {
  const TxtScan scan = ScanTxt(in);
  for (const auto &[line, message] : scan.header_errors) {
    err << "line " << line << ": " << message << '\n';
    *malformed = true;
  }
  std::vector<CorpusRecord> records;
  for (const auto &entry : scan.entries) {
    if (!entry.sentence) {
      err << "line " << entry.line_number << ": " << *entry.error << '\n';
      *malformed = true;
      continue;
    }
    CorpusRecord record;
    if (entry.header) {
      record.sentence_id = entry.header->sentence_id;
      record.annotator = entry.header->annotator;
    } else {
      record.sentence_id = "line:" + std::to_string(entry.line_number);
    }
    record.sentence = *entry.sentence;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

CorpusFormat ResolveFormat(const std::optional<std::string> &flag,
                           const std::filesystem::path &path) {
  if (flag) {
    if (*flag == "txt") return CorpusFormat::kTxt;
    if (*flag == "xml") return CorpusFormat::kXml;
    throw Error("format must be txt or xml");
  }
  return path.extension() == ".xml" ? CorpusFormat::kXml : CorpusFormat::kTxt;
}

int Ingest(const std::filesystem::path &data_dir, const std::filesystem::path &input,
           const std::string &category, Streams io) {
  const auto body = ReadFile(input);
  if (!body) {
    io.err << "cannot read " << input.string() << '\n';
    return kExitFailure;
  }
  try {
    auto store = OpenStore(data_dir);
    const IngestResult result = IngestText(*store, *body, category);
    io.out << "text\t" << result.text.id << '\n'
           << "script\t" << ToString(result.text.script) << '\n'
           << "sentences\t" << result.sentences.size() << '\n';
    return kExitOk;
  } catch (const Error &e) {
    io.err << e.what() << '\n';
    return kExitFailure;
  }
}

int Export(const std::filesystem::path &data_dir, CorpusFormat format,
           const std::string &out_path, Streams io) {
  try {
    auto store = OpenStore(data_dir);
    const auto records = store->ExportView();
    const std::string content =
        format == CorpusFormat::kTxt ? ExportTxt(records) : ExportXml(records);
    if (out_path == "-") {
      io.out << content;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << content;
      if (!out.flush()) {
        io.err << "cannot write " << out_path << '\n';
        return kExitFailure;
      }
    }
    return kExitOk;
  } catch (const Error &e) {
    io.err << e.what() << '\n';
    return kExitFailure;
  }
}

int Validate(const std::filesystem::path &corpus, const std::optional<std::string> &tagset,
             CorpusFormat format, Streams io) {
  LoadResult loaded;
  try {
    loaded = LoadTagsetOrSeed(tagset);
  } catch (const Error &e) {
    io.err << e.what() << '\n';
    return kExitFailure;
  }
  const Registry &registry = loaded.registry;

  const auto content = ReadFile(corpus);
  if (!content) {
    io.err << "cannot read " << corpus.string() << '\n';
    return kExitFailure;
  }
  std::istringstream in(*content);
  size_t errors = 0;

  if (format == CorpusFormat::kXml) {
    std::vector<CorpusRecord> records;
    try {
      records = ImportXml(in);
    } catch (const FormatError &e) {
      io.err << e.what() << '\n';
      return kExitFailure;
    }
    for (size_t i = 0; i < records.size(); ++i) {
      for (const auto &f : Validate(records[i].sentence, registry).findings) {
        PrintFinding(io.out, static_cast<int>(i + 1), f);
        if (f.severity == Severity::kError) ++errors;
      }
    }
    return errors == 0 ? kExitOk : kExitFindings;
  }

  const TxtScan scan = ScanTxt(in);
  // Header problems and parse failures interleave with findings by line.
  std::vector<std::pair<int, Finding>> output;
  for (const auto &[line, message] : scan.header_errors) {
    output.push_back({line, {Severity::kError, 0, Rule::kP0, message}});
  }
  for (const auto &entry : scan.entries) {
    if (!entry.sentence) {
      output.push_back({entry.line_number,
                        {Severity::kError, static_cast<int>(entry.error_item), Rule::kP0,
                         *entry.error}});
      continue;
    }
    AnnotatedSentence sentence = *entry.sentence;
    if (!entry.header) sentence.mode = InferMode(sentence, registry);
    for (const auto &f : Validate(sentence, registry).findings) {
      output.push_back({entry.line_number, f});
    }
  }
  std::stable_sort(output.begin(), output.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });
  for (const auto &[line, f] : output) {
    PrintFinding(io.out, line, f);
    if (f.severity == Severity::kError) ++errors;
  }
  return errors == 0 ? kExitOk : kExitFindings;
}

int CorpusStats(const std::filesystem::path &corpus, CorpusFormat format, Streams io) {
  const auto content = ReadFile(corpus);
  if (!content) {
    io.err << "cannot read " << corpus.string() << '\n';
    return kExitFailure;
  }
  std::istringstream in(*content);
  std::vector<CorpusRecord> records;
  bool malformed = false;
  if (format == CorpusFormat::kXml) {
    try {
      records = ImportXml(in);
    } catch (const FormatError &e) {
      io.err << e.what() << '\n';
      return kExitFailure;
    }
  } else {
    records = ScanTxtRecords(in, io.err, &malformed);
  }

  const CorpusFileStats stats = ComputeCorpusStats(records);
  io.out << "annotations\t" << stats.annotations << '\n'
         << "sentences\t" << stats.distinct_sentences << '\n'
         << "units\t" << stats.units << '\n'
         << "words\t" << stats.words << '\n'
         << "annotations.M\t" << stats.morphological << '\n'
         << "annotations.S\t" << stats.syntactic << '\n';
  if (!stats.categories.empty()) {
    io.out << "category\tannotations\n";
    for (const auto &[name, n] : stats.categories) io.out << name << '\t' << n << '\n';
  }
  return malformed ? kExitFindings : kExitOk;
}

int StoreStats(const std::filesystem::path &data_dir, Streams io) {
  try {
    auto store = OpenStore(data_dir);
    const auto stats = ComputeStoreStats(*store);
    io.out << "texts\t" << stats.texts << '\n'
           << "sentences\t" << stats.sentences << '\n'
           << "words\t" << stats.words << '\n'
           << "confirmed.M\t" << stats.confirmed_morphological << '\n'
           << "confirmed.S\t" << stats.confirmed_syntactic << '\n';
    if (!stats.categories.empty()) {
      io.out << "category\ttexts\tsentences\twords\n";
      for (const auto &[name, c] : stats.categories) {
        io.out << name << '\t' << c.texts << '\t' << c.sentences << '\t' << c.words << '\n';
      }
    }
    return kExitOk;
  } catch (const Error &e) {
    io.err << e.what() << '\n';
    return kExitFailure;
  }
}

int ReleaseStale(const std::filesystem::path &data_dir, long long age_seconds, Streams io) {
  if (age_seconds < 0) {
    io.err << "age must not be negative\n";
    return kExitFailure;
  }
  try {
    auto store = OpenStore(data_dir);
    const auto released = store->ReleaseStale(age_seconds);
    for (const auto &a : released) {
      io.out << "released\t" << a.id << '\t' << a.sentence_id << '\t' << a.expert_id << '\t'
             << ModeCode(a.mode) << '\n';
    }
    io.out << "total\t" << released.size() << '\n';
    return kExitOk;
  } catch (const Error &e) {
    io.err << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace uzannot::cli
