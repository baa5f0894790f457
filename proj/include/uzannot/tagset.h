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

#ifndef UZANNOT_TAGSET_H_
#define UZANNOT_TAGSET_H_

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uzannot {

enum class TagKind { kMorphological, kSyntactic };

// The twelve Uzbek word classes that group morphological tags.
enum class WordClass {
  kNoun,
  kAdjective,
  kNumber,
  kPronoun,
  kAdverb,
  kVerb,
  kConjunction,
  kHelpers,
  kParticle,
  kInterjection,
  kImitativeWord,
  kModalWord,
};

inline constexpr std::array<WordClass, 12> kAllWordClasses = {
    WordClass::kNoun,         WordClass::kAdjective,  WordClass::kNumber,
    WordClass::kPronoun,      WordClass::kAdverb,     WordClass::kVerb,
    WordClass::kConjunction,  WordClass::kHelpers,    WordClass::kParticle,
    WordClass::kInterjection, WordClass::kImitativeWord, WordClass::kModalWord,
};

// Position a tag occupies inside a unit's tag list. Morphological tags use
// BASE, PERSON_NUMBER and TENSE; syntactic tags always use ROLE.
enum class TagSlot { kBase, kPersonNumber, kTense, kRole };

// How well a row is attested. Rows read off usage rather than a definition
// table are loaded but marked so nobody mistakes them for settled entries.
enum class TagStatus { kConfirmed, kInferred, kUnconfirmed };

std::string_view ToString(TagKind kind);
std::string_view ToString(WordClass word_class);
std::string_view ToString(TagSlot slot);
std::string_view ToString(TagStatus status);
std::optional<WordClass> ParseWordClass(std::string_view name);

// True for a non-empty string of [A-Z0-9].
bool IsValidTagCode(std::string_view code);

struct TagDefinition {
  std::string code;
  TagKind kind = TagKind::kMorphological;
  std::optional<WordClass> word_class;  // set iff kind is morphological
  TagSlot slot = TagSlot::kBase;
  std::string description;
  std::string example;
  TagStatus status = TagStatus::kConfirmed;

  bool operator==(const TagDefinition &) const = default;
};

// Expected number of morphological tags per word class.
class ClassManifest {
 public:
  ClassManifest() = default;

  // Throws FormatError if |total| differs from the sum of |counts|.
  ClassManifest(std::map<WordClass, int> counts, int total);

  // The published per-class counts of the complete tagset (102 in total).
  static const ClassManifest &Published();

  int expected(WordClass word_class) const;
  int total() const { return total_; }
  const std::map<WordClass, int> &counts() const { return counts_; }

  bool operator==(const ClassManifest &) const = default;

 private:
  std::map<WordClass, int> counts_;
  int total_ = 0;
};

// A difference between the loaded tags and the manifest. |word_class| is
// empty for the total line.
struct ManifestWarning {
  std::optional<WordClass> word_class;
  int expected = 0;
  int actual = 0;
  std::string message;
};

// Immutable collection of tag definitions indexed by code. Safe to share
// between threads once loaded.
class Registry {
 public:
  Registry() = default;

  const TagDefinition *Lookup(std::string_view code) const;

  // Morphological tags of |word_class| in file order.
  std::vector<const TagDefinition *> TagsByClass(WordClass word_class) const;

  std::vector<const TagDefinition *> TagsByKind(TagKind kind) const;

  // Every tag in file order.
  const std::vector<TagDefinition> &tags() const { return tags_; }
  const std::optional<ClassManifest> &manifest() const { return manifest_; }
  bool strict() const { return strict_; }
  size_t size() const { return tags_.size(); }

  // Same tags in the same order and the same manifest.
  bool operator==(const Registry &other) const {
    return tags_ == other.tags_ && manifest_ == other.manifest_;
  }

 private:
  friend class RegistryBuilder;

  std::vector<TagDefinition> tags_;
  std::unordered_map<std::string, size_t> index_;
  std::optional<ClassManifest> manifest_;
  bool strict_ = false;
};

struct LoadResult {
  Registry registry;
  std::vector<ManifestWarning> warnings;
};

// Reads a tagset file. |manifest| overrides any !count/!total lines found in
// the stream. With |strict| set a manifest mismatch is an error; otherwise
// every mismatching class is reported as a warning. Throws FormatError on
// malformed lines, unknown word classes, duplicate codes, an empty tagset or
// a strict mismatch.
LoadResult LoadRegistry(std::istream &source,
                        const std::optional<ClassManifest> &manifest,
                        bool strict);
LoadResult LoadRegistryFile(const std::string &path,
                            const std::optional<ClassManifest> &manifest,
                            bool strict);

// Reads a stream holding only manifest lines (comments allowed).
ClassManifest LoadManifest(std::istream &source);

// Writes the registry back in the tagset file format, manifest lines first.
void WriteRegistry(const Registry &registry, std::ostream &out);

// Seed tagset and published manifest compiled into the library.
std::string_view EmbeddedSeedTagset();
std::string_view EmbeddedManifest();

// Loads the embedded seed tagset (non-strict, published manifest).
LoadResult LoadSeedRegistry();

// Loads |path| non-strictly, or the embedded seed when empty. A file without
// manifest lines is compared against the published manifest.
LoadResult LoadTagsetOrSeed(const std::optional<std::string> &path);

}  // namespace uzannot

#endif  // UZANNOT_TAGSET_H_
