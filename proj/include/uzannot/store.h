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

#ifndef UZANNOT_STORE_H_
#define UZANNOT_STORE_H_

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "uzannot/annotation.h"
#include "uzannot/corpus_format.h"
#include "uzannot/textpipe.h"
#include "uzannot/validate.h"

namespace uzannot {

struct Expert {
  std::string id;
  std::string name;
  std::string credential_hash;
  long long created_at = 0;

  bool operator==(const Expert &) const = default;
};

enum class AssignmentState { kPending, kSubmitted, kConfirmed, kReleased };
enum class AnnotationState { kDraft, kConfirmed };

std::string_view ToString(AssignmentState state);
std::string_view ToString(AnnotationState state);

struct Assignment {
  std::string id;
  std::string sentence_id;
  std::string expert_id;
  Mode mode = Mode::kMorphological;
  AssignmentState state = AssignmentState::kPending;
  long long issued_at = 0;

  bool operator==(const Assignment &) const = default;
};

struct AnnotationRecord {
  std::string id;
  std::string sentence_id;
  std::string expert_id;
  std::string assignment_id;  // empty when put directly
  AnnotatedSentence sentence;
  AnnotationState state = AnnotationState::kDraft;
  long long submitted_at = 0;
  std::vector<Finding> warnings;

  Mode mode() const { return sentence.mode; }
  bool operator==(const AnnotationRecord &) const = default;
};

struct SentenceFilter {
  std::optional<std::string> text_id;
  // Keep only sentences without any annotation record in this mode.
  std::optional<Mode> unannotated_in;
};

struct StoreOptions {
  // fdatasync after every append.
  bool sync = true;
  // Annotators per sentence per mode.
  int redundancy = 1;
  // UTC seconds; defaults to the system clock.
  std::function<long long()> clock;
};

struct StoreCounts {
  size_t texts = 0;
  size_t sentences = 0;
  size_t experts = 0;
  size_t assignments = 0;
  size_t annotations = 0;
};

// Directory-backed system of record. Each record type lives in its own
// append-only log of length-prefixed JSON records; a later record with the
// same id supersedes an earlier one. The directory is held under an
// exclusive lock for the lifetime of the Store.
//
// All mutations are serialized; reads run concurrently and return copies.
class Store {
 public:
  // Creates |dir| if needed. Throws IoError if the directory is locked by
  // another Store, or on I/O failure; FormatError on a corrupt log.
  static std::unique_ptr<Store> Open(const std::filesystem::path &dir,
                                     StoreOptions options = {});

  ~Store();
  Store(const Store &) = delete;
  Store &operator=(const Store &) = delete;

  const std::filesystem::path &directory() const { return dir_; }
  int redundancy() const { return options_.redundancy; }
  long long Now() const;

  // Raw record access. Put throws ConflictError on a duplicate id (or, for
  // annotations, a duplicate (sentence, expert, mode)); Get throws
  // NotFoundError.
  void PutText(const RawText &text);
  void PutSentence(const SentenceRecord &sentence);
  void PutExpert(const Expert &expert);
  void PutAssignment(const Assignment &assignment);
  void PutAnnotation(const AnnotationRecord &annotation);

  RawText GetText(const std::string &id) const;
  SentenceRecord GetSentence(const std::string &id) const;
  Expert GetExpert(const std::string &id) const;
  Assignment GetAssignment(const std::string &id) const;
  AnnotationRecord GetAnnotation(const std::string &id) const;

  std::optional<Expert> FindExpertByName(const std::string &name) const;

  std::vector<RawText> ListTexts() const;
  std::vector<Expert> ListExperts() const;
  std::vector<Assignment> ListAssignments() const;
  std::vector<AnnotationRecord> ListAnnotations() const;
  // Ordered by (text id, index).
  std::vector<SentenceRecord> ListSentences(const SentenceFilter &filter = {}) const;
  StoreCounts Counts() const;

  // Workflow operations.

  // Stores a text and its sentences in one step; fills in ids and
  // timestamps. Returns the stored text and sentences.
  std::pair<RawText, std::vector<SentenceRecord>> AddText(
      std::string body, std::string category, Script script,
      const std::vector<std::string> &surfaces,
      const std::vector<TokenizedSentence> &sentences);

  // Throws ConflictError if the name is taken.
  Expert AddExpert(const std::string &name, const std::string &credential_hash);

  // Lowest (text id, index) sentence without a non-released assignment in
  // |mode|, or nothing.
  std::optional<SentenceRecord> NextUnassigned(Mode mode) const;

  // Grants |expert_id| a sentence in |mode|. An expert that already holds a
  // PENDING assignment in the mode gets it back. Otherwise the lowest
  // sentence with fewer than redundancy() live assignments, none of them the
  // expert's, is granted. Returns nothing when all sentences are covered.
  std::optional<Assignment> IssueAssignment(const std::string &expert_id, Mode mode);

  // Stores a DRAFT annotation for a PENDING assignment owned by |expert_id|
  // and marks the assignment SUBMITTED. Throws NotFoundError or
  // ConflictError.
  AnnotationRecord SubmitAnnotation(const std::string &assignment_id,
                                    const std::string &expert_id,
                                    const AnnotatedSentence &sentence,
                                    std::vector<Finding> warnings);

  // DRAFT -> CONFIRMED together with its assignment. If |expert_id| is set
  // the record must belong to that expert. Throws NotFoundError or
  // ConflictError ("already confirmed").
  AnnotationRecord ConfirmAnnotation(const std::string &annotation_id,
                                     const std::optional<std::string> &expert_id = {});

  // Releases PENDING assignments issued at least |age_seconds| ago.
  std::vector<Assignment> ReleaseStale(long long age_seconds);

  // CONFIRMED annotations ordered by (text id, sentence index, mode, expert).
  std::vector<CorpusRecord> ExportView() const;

  // Full scan of the assignment and annotation invariants; returns a
  // description of every violation.
  std::vector<std::string> CheckInvariants() const;

 private:
  class Log;
  struct State;

  Store(std::filesystem::path dir, StoreOptions options);
  void Load();
  std::string NewId(char prefix, long long &counter);

  std::filesystem::path dir_;
  StoreOptions options_;
  int lock_fd_ = -1;
  mutable std::shared_mutex mutex_;
  std::unique_ptr<State> state_;
};

}  // namespace uzannot

#endif  // UZANNOT_STORE_H_
