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

#include "uzannot/tagset.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "str_util.h"
#include "uzannot/errors.h"

namespace uzannot {

namespace embedded {
extern const std::string_view kSeedTagset;
extern const std::string_view kManifest;
}  // namespace embedded

namespace {

constexpr std::pair<WordClass, std::string_view> kClassNames[] = {
    {WordClass::kNoun, "NOUN"},
    {WordClass::kAdjective, "ADJECTIVE"},
    {WordClass::kNumber, "NUMBER"},
    {WordClass::kPronoun, "PRONOUN"},
    {WordClass::kAdverb, "ADVERB"},
    {WordClass::kVerb, "VERB"},
    {WordClass::kConjunction, "CONJUNCTION"},
    {WordClass::kHelpers, "HELPERS"},
    {WordClass::kParticle, "PARTICLE"},
    {WordClass::kInterjection, "INTERJECTION"},
    {WordClass::kImitativeWord, "IMITATIVE_WORD"},
    {WordClass::kModalWord, "MODAL_WORD"},
};

std::string_view SlotFileName(TagSlot slot) {
  switch (slot) {
    case TagSlot::kBase:
      return "BASE";
    case TagSlot::kPersonNumber:
      return "PN";
    case TagSlot::kTense:
      return "TENSE";
    case TagSlot::kRole:
      return "ROLE";
  }
  return "";
}

std::optional<TagSlot> ParseSlot(std::string_view name) {
  if (name == "BASE") return TagSlot::kBase;
  if (name == "PN") return TagSlot::kPersonNumber;
  if (name == "TENSE") return TagSlot::kTense;
  if (name == "ROLE") return TagSlot::kRole;
  return std::nullopt;
}

std::optional<TagStatus> ParseStatus(std::string_view name) {
  if (name.empty() || name == "confirmed") return TagStatus::kConfirmed;
  if (name == "inferred") return TagStatus::kInferred;
  if (name == "unconfirmed") return TagStatus::kUnconfirmed;
  return std::nullopt;
}

[[noreturn]] void Fail(int line_number, const std::string &message) {
  throw FormatError("tagset line " + std::to_string(line_number) + ": " +
                    message);
}

// Accumulates !count / !total lines.
struct ManifestLines {
  std::map<WordClass, int> counts;
  std::optional<int> total;
  bool seen = false;

  void Parse(std::string_view line, int line_number) {
    const auto fields = internal::Split(line, '\t');
    seen = true;
    if (fields[0] == "!count") {
      if (fields.size() != 3) Fail(line_number, "expected !count<TAB>CLASS<TAB>N");
      const auto word_class = ParseWordClass(fields[1]);
      if (!word_class) {
        Fail(line_number, "unknown word class '" + std::string(fields[1]) + "'");
      }
      const auto count = internal::ParseInt<int>(fields[2]);
      if (!count || *count < 0) Fail(line_number, "bad count");
      if (counts.count(*word_class)) {
        Fail(line_number, "duplicate count for " + std::string(fields[1]));
      }
      counts[*word_class] = *count;
    } else if (fields[0] == "!total") {
      if (fields.size() != 2) Fail(line_number, "expected !total<TAB>N");
      const auto value = internal::ParseInt<int>(fields[1]);
      if (!value || *value < 0) Fail(line_number, "bad total");
      total = *value;
    } else {
      Fail(line_number, "unknown directive '" + std::string(fields[0]) + "'");
    }
  }

  ClassManifest Build() const {
    int sum = 0;
    for (const auto &[cls, n] : counts) sum += n;
    return ClassManifest(counts, total.value_or(sum));
  }
};

TagDefinition ParseTagLine(std::string_view line, int line_number) {
  const auto fields = internal::Split(line, '\t');
  if (fields.size() != 6 && fields.size() != 7) {
    Fail(line_number, "expected 6 or 7 tab-separated fields, got " +
                          std::to_string(fields.size()));
  }
  TagDefinition tag;
  tag.code = std::string(fields[0]);
  if (!IsValidTagCode(tag.code)) {
    Fail(line_number, "invalid tag code '" + tag.code + "'");
  }

  if (fields[1] == "M") {
    tag.kind = TagKind::kMorphological;
  } else if (fields[1] == "S") {
    tag.kind = TagKind::kSyntactic;
  } else {
    Fail(line_number, "kind must be M or S");
  }

  if (fields[2] != "-") {
    tag.word_class = ParseWordClass(fields[2]);
    if (!tag.word_class) {
      Fail(line_number, "unknown word class '" + std::string(fields[2]) + "'");
    }
  }

  const auto slot = ParseSlot(fields[3]);
  if (!slot) Fail(line_number, "unknown slot '" + std::string(fields[3]) + "'");
  tag.slot = *slot;

  if (tag.kind == TagKind::kSyntactic) {
    if (tag.word_class) Fail(line_number, "syntactic tag with a word class");
    if (tag.slot != TagSlot::kRole) Fail(line_number, "syntactic tag needs slot ROLE");
  } else {
    if (!tag.word_class) Fail(line_number, "morphological tag without word class");
    if (tag.slot == TagSlot::kRole) Fail(line_number, "morphological tag with slot ROLE");
  }

  tag.description = std::string(fields[4]);
  tag.example = std::string(fields[5]);
  const auto status = ParseStatus(fields.size() == 7 ? fields[6] : "");
  if (!status) Fail(line_number, "unknown status '" + std::string(fields[6]) + "'");
  tag.status = *status;
  return tag;
}

std::vector<ManifestWarning> CompareToManifest(const std::vector<TagDefinition> &tags,
                                               const ClassManifest &manifest) {
  std::map<WordClass, int> actual;
  int morphological = 0;
  for (const auto &tag : tags) {
    if (tag.kind != TagKind::kMorphological) continue;
    ++actual[*tag.word_class];
    ++morphological;
  }
  std::vector<ManifestWarning> warnings;
  for (WordClass cls : kAllWordClasses) {
    const int expected = manifest.expected(cls);
    const int have = actual[cls];
    if (expected == have) continue;
    ManifestWarning w;
    w.word_class = cls;
    w.expected = expected;
    w.actual = have;
    w.message = std::string(ToString(cls)) + " has " + std::to_string(have) +
                " of " + std::to_string(expected) + " tags";
    warnings.push_back(std::move(w));
  }
  if (morphological != manifest.total()) {
    ManifestWarning w;
    w.expected = manifest.total();
    w.actual = morphological;
    w.message = "morphological total is " + std::to_string(morphological) +
                " of " + std::to_string(manifest.total());
    warnings.push_back(std::move(w));
  }
  return warnings;
}

}  // namespace

class RegistryBuilder {
 public:
  static Registry Build(std::vector<TagDefinition> tags,
                        std::optional<ClassManifest> manifest, bool strict) {
    Registry registry;
    registry.tags_ = std::move(tags);
    for (size_t i = 0; i < registry.tags_.size(); ++i) {
      registry.index_.emplace(registry.tags_[i].code, i);
    }
    registry.manifest_ = std::move(manifest);
    registry.strict_ = strict;
    return registry;
  }
};

std::string_view ToString(TagKind kind) {
  return kind == TagKind::kMorphological ? "MORPHOLOGICAL" : "SYNTACTIC";
}

std::string_view ToString(WordClass word_class) {
  for (const auto &[cls, name] : kClassNames) {
    if (cls == word_class) return name;
  }
  return "";
}

std::string_view ToString(TagSlot slot) {
  switch (slot) {
    case TagSlot::kBase:
      return "BASE";
    case TagSlot::kPersonNumber:
      return "PERSON_NUMBER";
    case TagSlot::kTense:
      return "TENSE";
    case TagSlot::kRole:
      return "ROLE";
  }
  return "";
}

std::string_view ToString(TagStatus status) {
  switch (status) {
    case TagStatus::kConfirmed:
      return "confirmed";
    case TagStatus::kInferred:
      return "inferred";
    case TagStatus::kUnconfirmed:
      return "unconfirmed";
  }
  return "";
}

std::optional<WordClass> ParseWordClass(std::string_view name) {
  for (const auto &[cls, text] : kClassNames) {
    if (text == name) return cls;
  }
  return std::nullopt;
}

bool IsValidTagCode(std::string_view code) {
  if (code.empty()) return false;
  for (char c : code) {
    if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))) return false;
  }
  return true;
}

ClassManifest::ClassManifest(std::map<WordClass, int> counts, int total)
    : counts_(std::move(counts)), total_(total) {
  int sum = 0;
  for (const auto &[cls, n] : counts_) sum += n;
  if (sum != total_) {
    throw FormatError("manifest total " + std::to_string(total_) +
                      " differs from class sum " + std::to_string(sum));
  }
}

const ClassManifest &ClassManifest::Published() {
  static const ClassManifest manifest(
      {
          {WordClass::kNoun, 22},
          {WordClass::kAdjective, 10},
          {WordClass::kNumber, 11},
          {WordClass::kPronoun, 11},
          {WordClass::kAdverb, 10},
          {WordClass::kVerb, 18},
          {WordClass::kConjunction, 8},
          {WordClass::kHelpers, 1},
          {WordClass::kParticle, 6},
          {WordClass::kInterjection, 2},
          {WordClass::kImitativeWord, 2},
          {WordClass::kModalWord, 1},
      },
      102);
  return manifest;
}

int ClassManifest::expected(WordClass word_class) const {
  const auto it = counts_.find(word_class);
  return it == counts_.end() ? 0 : it->second;
}

const TagDefinition *Registry::Lookup(std::string_view code) const {
  const auto it = index_.find(std::string(code));
  return it == index_.end() ? nullptr : &tags_[it->second];
}

std::vector<const TagDefinition *> Registry::TagsByClass(WordClass word_class) const {
  std::vector<const TagDefinition *> result;
  for (const auto &tag : tags_) {
    if (tag.kind == TagKind::kMorphological && tag.word_class == word_class) {
      result.push_back(&tag);
    }
  }
  return result;
}

std::vector<const TagDefinition *> Registry::TagsByKind(TagKind kind) const {
  std::vector<const TagDefinition *> result;
  for (const auto &tag : tags_) {
    if (tag.kind == kind) result.push_back(&tag);
  }
  return result;
}

LoadResult LoadRegistry(std::istream &source,
                        const std::optional<ClassManifest> &manifest,
                        bool strict) {
  std::vector<TagDefinition> tags;
  std::unordered_map<std::string, int> seen;
  ManifestLines manifest_lines;

  std::string raw;
  int line_number = 0;
  while (std::getline(source, raw)) {
    ++line_number;
    std::string_view line = internal::StripCarriageReturn(raw);
    if (line_number == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (internal::TrimAscii(line).empty() || line.front() == '#') continue;
    if (line.front() == '!') {
      manifest_lines.Parse(line, line_number);
      continue;
    }
    TagDefinition tag = ParseTagLine(line, line_number);
    const auto [it, inserted] = seen.emplace(tag.code, line_number);
    if (!inserted) {
      Fail(line_number, "duplicate code '" + tag.code + "' (first on line " +
                            std::to_string(it->second) + ")");
    }
    tags.push_back(std::move(tag));
  }
  if (tags.empty()) throw FormatError("no tags loaded");

  std::optional<ClassManifest> effective = manifest;
  if (!effective && manifest_lines.seen) effective = manifest_lines.Build();

  LoadResult result;
  if (effective) {
    result.warnings = CompareToManifest(tags, *effective);
    if (strict && !result.warnings.empty()) {
      std::string message = "tagset does not match manifest:";
      for (const auto &w : result.warnings) message += " " + w.message + ";";
      message.pop_back();
      throw FormatError(message);
    }
  }
  result.registry = RegistryBuilder::Build(std::move(tags), std::move(effective), strict);
  return result;
}

LoadResult LoadRegistryFile(const std::string &path,
                            const std::optional<ClassManifest> &manifest,
                            bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tagset file " + path);
  return LoadRegistry(in, manifest, strict);
}

ClassManifest LoadManifest(std::istream &source) {
  ManifestLines lines;
  std::string raw;
  int line_number = 0;
  while (std::getline(source, raw)) {
    ++line_number;
    std::string_view line = internal::StripCarriageReturn(raw);
    if (internal::TrimAscii(line).empty() || line.front() == '#') continue;
    if (line.front() != '!') Fail(line_number, "expected a manifest line");
    lines.Parse(line, line_number);
  }
  if (!lines.seen) throw FormatError("empty manifest");
  return lines.Build();
}

void WriteRegistry(const Registry &registry, std::ostream &out) {
  out << "# code\tkind\tword_class\tslot\tdescription\texample\tstatus\n";
  if (const auto &manifest = registry.manifest()) {
    for (const auto &[cls, n] : manifest->counts()) {
      out << "!count\t" << ToString(cls) << '\t' << n << '\n';
    }
    out << "!total\t" << manifest->total() << '\n';
  }
  for (const auto &tag : registry.tags()) {
    out << tag.code << '\t' << (tag.kind == TagKind::kMorphological ? "M" : "S")
        << '\t' << (tag.word_class ? ToString(*tag.word_class) : "-") << '\t'
        << SlotFileName(tag.slot) << '\t' << tag.description << '\t'
        << tag.example;
    if (tag.status != TagStatus::kConfirmed) out << '\t' << ToString(tag.status);
    out << '\n';
  }
}

std::string_view EmbeddedSeedTagset() { return embedded::kSeedTagset; }
std::string_view EmbeddedManifest() { return embedded::kManifest; }

LoadResult LoadSeedRegistry() {
  std::istringstream manifest_stream{std::string(EmbeddedManifest())};
  std::istringstream seed{std::string(EmbeddedSeedTagset())};
  return LoadRegistry(seed, LoadManifest(manifest_stream), /*strict=*/false);
}

LoadResult LoadTagsetOrSeed(const std::optional<std::string> &path) {
  if (!path) return LoadSeedRegistry();
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw IoError("cannot open tagset file " + *path);
  const std::string content(std::istreambuf_iterator<char>(in), {});
  const bool has_manifest = content.starts_with("!") || content.find("\n!") != std::string::npos;
  std::istringstream stream(content);
  return LoadRegistry(stream,
                      has_manifest ? std::nullopt
                                   : std::optional<ClassManifest>(ClassManifest::Published()),
                      /*strict=*/false);
}

}  // namespace uzannot
