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

#include "uzannot/store.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iterator>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "str_util.h"

namespace uzannot {

using nlohmann::json;

namespace {

constexpr int kIdDigits = 8;

[[noreturn]] void ThrowErrno(const std::string &what) {
  throw IoError(what + ": " + std::strerror(errno));
}

std::string_view SeverityName(Severity s) { return ToString(s); }

Severity ParseSeverity(const std::string &name) {
  if (name == "ERROR") return Severity::kError;
  if (name == "WARNING") return Severity::kWarning;
  throw FormatError("unknown severity " + name);
}

Rule ParseRule(const std::string &name) {
  for (Rule r : {Rule::kM1, Rule::kM2, Rule::kM3, Rule::kS1, Rule::kU1, Rule::kP0}) {
    if (ToString(r) == name) return r;
  }
  throw FormatError("unknown rule " + name);
}

template <typename Enum, size_t N>
Enum ParseEnum(const std::string &name, const Enum (&values)[N]) {
  for (Enum v : values) {
    if (ToString(v) == name) return v;
  }
  throw FormatError("unknown state " + name);
}

Mode ModeFromJson(const json &j) {
  const auto mode = ParseModeCode(j.get<std::string>());
  if (!mode) throw FormatError("bad mode in store record");
  return *mode;
}

json ToJson(const RawText &t) {
  return {{"id", t.id},
          {"body", t.body},
          {"category", t.category},
          {"script", ToString(t.script)},
          {"created_at", t.created_at}};
}

RawText TextFromJson(const json &j) {
  RawText t;
  t.id = j.at("id").get<std::string>();
  t.body = j.at("body").get<std::string>();
  t.category = j.at("category").get<std::string>();
  const auto script = ParseScript(j.at("script").get<std::string>());
  if (!script) throw FormatError("bad script in store record");
  t.script = *script;
  t.created_at = j.at("created_at").get<long long>();
  return t;
}

json ToJson(const SentenceRecord &s) {
  return {{"id", s.id},         {"text_id", s.text_id}, {"index", s.index},
          {"surface", s.surface}, {"tokens", s.tokens},   {"separators", s.separators}};
}

SentenceRecord SentenceFromJson(const json &j) {
  SentenceRecord s;
  s.id = j.at("id").get<std::string>();
  s.text_id = j.at("text_id").get<std::string>();
  s.index = j.at("index").get<int>();
  s.surface = j.at("surface").get<std::string>();
  s.tokens = j.at("tokens").get<std::vector<std::string>>();
  s.separators = j.at("separators").get<std::vector<std::string>>();
  return s;
}

json ToJson(const Expert &e) {
  return {{"id", e.id},
          {"name", e.name},
          {"credential_hash", e.credential_hash},
          {"created_at", e.created_at}};
}

Expert ExpertFromJson(const json &j) {
  return {j.at("id").get<std::string>(), j.at("name").get<std::string>(),
          j.at("credential_hash").get<std::string>(), j.at("created_at").get<long long>()};
}

constexpr AssignmentState kAssignmentStates[] = {
    AssignmentState::kPending, AssignmentState::kSubmitted, AssignmentState::kConfirmed,
    AssignmentState::kReleased};
constexpr AnnotationState kAnnotationStates[] = {AnnotationState::kDraft,
                                                 AnnotationState::kConfirmed};

json ToJson(const Assignment &a) {
  return {{"id", a.id},
          {"sentence_id", a.sentence_id},
          {"expert_id", a.expert_id},
          {"mode", ModeCode(a.mode)},
          {"state", ToString(a.state)},
          {"issued_at", a.issued_at}};
}

Assignment AssignmentFromJson(const json &j) {
  Assignment a;
  a.id = j.at("id").get<std::string>();
  a.sentence_id = j.at("sentence_id").get<std::string>();
  a.expert_id = j.at("expert_id").get<std::string>();
  a.mode = ModeFromJson(j.at("mode"));
  a.state = ParseEnum(j.at("state").get<std::string>(), kAssignmentStates);
  a.issued_at = j.at("issued_at").get<long long>();
  return a;
}

json ToJson(const AnnotationRecord &r) {
  json warnings = json::array();
  for (const auto &f : r.warnings) {
    warnings.push_back({{"severity", SeverityName(f.severity)},
                        {"item", f.item_index},
                        {"rule", ToString(f.rule)},
                        {"message", f.message}});
  }
  return {{"id", r.id},
          {"sentence_id", r.sentence_id},
          {"expert_id", r.expert_id},
          {"assignment_id", r.assignment_id},
          {"mode", ModeCode(r.mode())},
          {"line", SerializeLine(r.sentence)},
          {"state", ToString(r.state)},
          {"submitted_at", r.submitted_at},
          {"warnings", warnings}};
}

AnnotationRecord AnnotationFromJson(const json &j) {
  AnnotationRecord r;
  r.id = j.at("id").get<std::string>();
  r.sentence_id = j.at("sentence_id").get<std::string>();
  r.expert_id = j.at("expert_id").get<std::string>();
  r.assignment_id = j.at("assignment_id").get<std::string>();
  r.sentence = ParseLine(j.at("line").get<std::string>(), ModeFromJson(j.at("mode")));
  r.state = ParseEnum(j.at("state").get<std::string>(), kAnnotationStates);
  r.submitted_at = j.at("submitted_at").get<long long>();
  for (const auto &w : j.at("warnings")) {
    r.warnings.push_back({ParseSeverity(w.at("severity").get<std::string>()),
                          w.at("item").get<int>(), ParseRule(w.at("rule").get<std::string>()),
                          w.at("message").get<std::string>()});
  }
  return r;
}

// Numeric part of a generated id ("t00000042" -> 42), if it is one.
std::optional<long long> GeneratedIdNumber(const std::string &id, char prefix) {
  if (id.size() != kIdDigits + 1 || id[0] != prefix) return std::nullopt;
  return internal::ParseInt<long long>(std::string_view(id).substr(1));
}

}  // namespace

std::string_view ToString(AssignmentState state) {
  switch (state) {
    case AssignmentState::kPending:
      return "PENDING";
    case AssignmentState::kSubmitted:
      return "SUBMITTED";
    case AssignmentState::kConfirmed:
      return "CONFIRMED";
    case AssignmentState::kReleased:
      return "RELEASED";
  }
  return "";
}

std::string_view ToString(AnnotationState state) {
  return state == AnnotationState::kDraft ? "DRAFT" : "CONFIRMED";
}

// Append-only file of records framed as "<length> <json>\n".
class Store::Log {
 public:
  Log(std::filesystem::path path, bool sync) : path_(std::move(path)), sync_(sync) {}

  ~Log() {
    if (fd_ >= 0) ::close(fd_);
  }

  // Reads every complete record. A torn record at the end of the file (an
  // interrupted append) is cut off so later appends start clean.
  std::vector<json> ReadAll() {
    std::vector<json> records;
    std::string data;
    {
      std::ifstream in(path_, std::ios::binary);
      if (in) data.assign(std::istreambuf_iterator<char>(in), {});
    }
    size_t pos = 0;
    size_t good = 0;
    while (pos < data.size()) {
      const size_t space = data.find(' ', pos);
      if (space == std::string::npos) break;  // torn length prefix
      const auto length = internal::ParseInt<size_t>(std::string_view(data).substr(pos, space - pos));
      if (!length) {
        throw FormatError(path_.string() + ": corrupt record at byte " + std::to_string(pos));
      }
      const size_t end = space + 1 + *length;
      if (end >= data.size()) break;  // torn payload or missing newline
      if (data[end] != '\n') {
        throw FormatError(path_.string() + ": corrupt record at byte " + std::to_string(pos));
      }
      try {
        records.push_back(json::parse(data.begin() + space + 1, data.begin() + end));
      } catch (const json::exception &e) {
        throw FormatError(path_.string() + ": bad record at byte " + std::to_string(pos) +
                          ": " + e.what());
      }
      pos = good = end + 1;
    }
    if (good < data.size() && std::filesystem::exists(path_)) {
      std::filesystem::resize_file(path_, good);
    }
    return records;
  }

  void Open() {
    fd_ = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) ThrowErrno("cannot open " + path_.string());
  }

  void Append(const json &record) {
    const std::string payload = record.dump();
    std::string frame = std::to_string(payload.size());
    frame.push_back(' ');
    frame += payload;
    frame.push_back('\n');
    const char *data = frame.data();
    size_t left = frame.size();
    while (left > 0) {
      const ssize_t n = ::write(fd_, data, left);
      if (n < 0) {
        if (errno == EINTR) continue;
        ThrowErrno("write to " + path_.string());
      }
      data += n;
      left -= static_cast<size_t>(n);
    }
    if (sync_ && ::fdatasync(fd_) != 0) ThrowErrno("fdatasync " + path_.string());
  }

 private:
  std::filesystem::path path_;
  bool sync_;
  int fd_ = -1;
};

struct Store::State {
  std::map<std::string, RawText> texts;
  std::map<std::string, SentenceRecord> sentences;
  std::map<std::string, Expert> experts;
  std::map<std::string, std::string> expert_by_name;
  std::map<std::string, Assignment> assignments;
  std::map<std::string, AnnotationRecord> annotations;

  long long next_text = 0;
  long long next_sentence = 0;
  long long next_expert = 0;
  long long next_assignment = 0;
  long long next_annotation = 0;

  std::unique_ptr<Log> text_log;
  std::unique_ptr<Log> sentence_log;
  std::unique_ptr<Log> expert_log;
  std::unique_ptr<Log> assignment_log;
  std::unique_ptr<Log> annotation_log;

  // Sentences sorted by (text id, index).
  std::vector<const SentenceRecord *> OrderedSentences() const {
    std::vector<const SentenceRecord *> ordered;
    ordered.reserve(sentences.size());
    for (const auto &[id, s] : sentences) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(), [](const auto *a, const auto *b) {
      return std::tie(a->text_id, a->index, a->id) < std::tie(b->text_id, b->index, b->id);
    });
    return ordered;
  }

  const AnnotationRecord *FindAnnotation(const std::string &sentence_id,
                                         const std::string &expert_id, Mode mode) const {
    for (const auto &[id, r] : annotations) {
      if (r.sentence_id == sentence_id && r.expert_id == expert_id && r.mode() == mode) {
        return &r;
      }
    }
    return nullptr;
  }
};

std::unique_ptr<Store> Store::Open(const std::filesystem::path &dir, StoreOptions options) {
  std::unique_ptr<Store> store(new Store(dir, std::move(options)));
  store->Load();
  return store;
}

Store::Store(std::filesystem::path dir, StoreOptions options)
    : dir_(std::move(dir)), options_(std::move(options)), state_(std::make_unique<State>()) {
  if (options_.redundancy < 1) throw Error("redundancy must be at least 1");
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create store directory " + dir_.string() + ": " + ec.message());
  const auto lock_path = dir_ / "LOCK";
  lock_fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (lock_fd_ < 0) ThrowErrno("cannot open " + lock_path.string());
  if (::flock(lock_fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(lock_fd_);
    lock_fd_ = -1;
    throw IoError("store directory " + dir_.string() + " is locked by another process");
  }
}

Store::~Store() {
  state_.reset();
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
  }
}

long long Store::Now() const {
  if (options_.clock) return options_.clock();
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

void Store::Load() {
  auto &s = *state_;
  s.text_log = std::make_unique<Log>(dir_ / "texts.log", options_.sync);
  s.sentence_log = std::make_unique<Log>(dir_ / "sentences.log", options_.sync);
  s.expert_log = std::make_unique<Log>(dir_ / "experts.log", options_.sync);
  s.assignment_log = std::make_unique<Log>(dir_ / "assignments.log", options_.sync);
  s.annotation_log = std::make_unique<Log>(dir_ / "annotations.log", options_.sync);

  const auto track = [](long long &counter, const std::string &id, char prefix) {
    if (const auto n = GeneratedIdNumber(id, prefix)) counter = std::max(counter, *n);
  };
  try {
    for (const auto &j : s.text_log->ReadAll()) {
      RawText t = TextFromJson(j);
      track(s.next_text, t.id, 't');
      s.texts[t.id] = std::move(t);
    }
    for (const auto &j : s.sentence_log->ReadAll()) {
      SentenceRecord r = SentenceFromJson(j);
      track(s.next_sentence, r.id, 's');
      s.sentences[r.id] = std::move(r);
    }
    for (const auto &j : s.expert_log->ReadAll()) {
      Expert e = ExpertFromJson(j);
      track(s.next_expert, e.id, 'e');
      s.expert_by_name[e.name] = e.id;
      s.experts[e.id] = std::move(e);
    }
    for (const auto &j : s.assignment_log->ReadAll()) {
      Assignment a = AssignmentFromJson(j);
      track(s.next_assignment, a.id, 'a');
      s.assignments[a.id] = std::move(a);
    }
    for (const auto &j : s.annotation_log->ReadAll()) {
      AnnotationRecord r = AnnotationFromJson(j);
      track(s.next_annotation, r.id, 'n');
      s.annotations[r.id] = std::move(r);
    }
  } catch (const json::exception &e) {
    throw FormatError("store record is missing fields: " + std::string(e.what()));
  }

  // The annotation record is written before its assignment update, so a
  // crash in between leaves the assignment one state behind.
  for (auto &[id, r] : s.annotations) {
    if (r.assignment_id.empty()) continue;
    const auto it = s.assignments.find(r.assignment_id);
    if (it == s.assignments.end()) continue;
    const AssignmentState want = r.state == AnnotationState::kConfirmed
                                     ? AssignmentState::kConfirmed
                                     : AssignmentState::kSubmitted;
    if (it->second.state != want) it->second.state = want;
  }

  s.text_log->Open();
  s.sentence_log->Open();
  s.expert_log->Open();
  s.assignment_log->Open();
  s.annotation_log->Open();
}

std::string Store::NewId(char prefix, long long &counter) {
  std::string id;
  do {
    std::string digits = std::to_string(++counter);
    id = std::string(1, prefix) +
         std::string(kIdDigits > digits.size() ? kIdDigits - digits.size() : 0, '0') + digits;
  } while (state_->texts.count(id) || state_->sentences.count(id) ||
           state_->experts.count(id) || state_->assignments.count(id) ||
           state_->annotations.count(id));
  return id;
}

void Store::PutText(const RawText &text) {
  if (text.id.empty()) throw FormatError("text id is empty");
  if (text.body.empty()) throw FormatError("text body is empty");
  if (text.category.empty()) throw FormatError("text category is empty");
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  if (s.texts.count(text.id)) throw ConflictError("duplicate text id " + text.id);
  s.text_log->Append(ToJson(text));
  s.texts[text.id] = text;
}

void Store::PutSentence(const SentenceRecord &sentence) {
  if (sentence.id.empty()) throw FormatError("sentence id is empty");
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  if (s.sentences.count(sentence.id)) throw ConflictError("duplicate sentence id " + sentence.id);
  if (!s.texts.count(sentence.text_id)) throw NotFoundError("unknown text " + sentence.text_id);
  s.sentence_log->Append(ToJson(sentence));
  s.sentences[sentence.id] = sentence;
}

void Store::PutExpert(const Expert &expert) {
  if (expert.id.empty()) throw FormatError("expert id is empty");
  if (expert.name.empty()) throw FormatError("expert name is empty");
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  if (s.experts.count(expert.id)) throw ConflictError("duplicate expert id " + expert.id);
  if (s.expert_by_name.count(expert.name)) {
    throw ConflictError("expert name '" + expert.name + "' is taken");
  }
  s.expert_log->Append(ToJson(expert));
  s.experts[expert.id] = expert;
  s.expert_by_name[expert.name] = expert.id;
}

void Store::PutAssignment(const Assignment &assignment) {
  if (assignment.id.empty()) throw FormatError("assignment id is empty");
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  if (s.assignments.count(assignment.id)) {
    throw ConflictError("duplicate assignment id " + assignment.id);
  }
  if (!s.sentences.count(assignment.sentence_id)) {
    throw NotFoundError("unknown sentence " + assignment.sentence_id);
  }
  if (!s.experts.count(assignment.expert_id)) {
    throw NotFoundError("unknown expert " + assignment.expert_id);
  }
  if (assignment.state != AssignmentState::kReleased) {
    int live = 0;
    for (const auto &[id, a] : s.assignments) {
      if (a.sentence_id == assignment.sentence_id && a.mode == assignment.mode &&
          a.state != AssignmentState::kReleased) {
        ++live;
      }
      if (assignment.state == AssignmentState::kPending &&
          a.expert_id == assignment.expert_id && a.mode == assignment.mode &&
          a.state == AssignmentState::kPending) {
        throw ConflictError("expert " + assignment.expert_id + " already holds a pending " +
                            std::string(ModeCode(assignment.mode)) + " assignment");
      }
    }
    if (live >= options_.redundancy) {
      throw ConflictError("sentence " + assignment.sentence_id + " is fully assigned");
    }
  }
  s.assignment_log->Append(ToJson(assignment));
  s.assignments[assignment.id] = assignment;
}

void Store::PutAnnotation(const AnnotationRecord &annotation) {
  if (annotation.id.empty()) throw FormatError("annotation id is empty");
  CheckWellFormed(annotation.sentence);
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  if (s.annotations.count(annotation.id)) {
    throw ConflictError("duplicate annotation id " + annotation.id);
  }
  if (!s.sentences.count(annotation.sentence_id)) {
    throw NotFoundError("unknown sentence " + annotation.sentence_id);
  }
  if (!s.experts.count(annotation.expert_id)) {
    throw NotFoundError("unknown expert " + annotation.expert_id);
  }
  if (s.FindAnnotation(annotation.sentence_id, annotation.expert_id, annotation.mode())) {
    throw ConflictError("expert " + annotation.expert_id + " already annotated sentence " +
                        annotation.sentence_id + " in mode " +
                        std::string(ModeCode(annotation.mode())));
  }
  s.annotation_log->Append(ToJson(annotation));
  s.annotations[annotation.id] = annotation;
}

namespace {

template <typename Map>
typename Map::mapped_type GetOrThrow(const Map &map, const std::string &id, const char *kind) {
  const auto it = map.find(id);
  if (it == map.end()) throw NotFoundError(std::string("unknown ") + kind + " " + id);
  return it->second;
}

template <typename Map>
std::vector<typename Map::mapped_type> Values(const Map &map) {
  std::vector<typename Map::mapped_type> values;
  values.reserve(map.size());
  for (const auto &[id, v] : map) values.push_back(v);
  return values;
}

}  // namespace

RawText Store::GetText(const std::string &id) const {
  std::shared_lock lock(mutex_);
  return GetOrThrow(state_->texts, id, "text");
}

SentenceRecord Store::GetSentence(const std::string &id) const {
  std::shared_lock lock(mutex_);
  return GetOrThrow(state_->sentences, id, "sentence");
}

Expert Store::GetExpert(const std::string &id) const {
  std::shared_lock lock(mutex_);
  return GetOrThrow(state_->experts, id, "expert");
}

Assignment Store::GetAssignment(const std::string &id) const {
  std::shared_lock lock(mutex_);
  return GetOrThrow(state_->assignments, id, "assignment");
}

AnnotationRecord Store::GetAnnotation(const std::string &id) const {
  std::shared_lock lock(mutex_);
  return GetOrThrow(state_->annotations, id, "annotation");
}

std::optional<Expert> Store::FindExpertByName(const std::string &name) const {
  std::shared_lock lock(mutex_);
  const auto it = state_->expert_by_name.find(name);
  if (it == state_->expert_by_name.end()) return std::nullopt;
  return state_->experts.at(it->second);
}

std::vector<RawText> Store::ListTexts() const {
  std::shared_lock lock(mutex_);
  return Values(state_->texts);
}

std::vector<Expert> Store::ListExperts() const {
  std::shared_lock lock(mutex_);
  return Values(state_->experts);
}

std::vector<Assignment> Store::ListAssignments() const {
  std::shared_lock lock(mutex_);
  return Values(state_->assignments);
}

std::vector<AnnotationRecord> Store::ListAnnotations() const {
  std::shared_lock lock(mutex_);
  return Values(state_->annotations);
}

std::vector<SentenceRecord> Store::ListSentences(const SentenceFilter &filter) const {
  std::shared_lock lock(mutex_);
  const auto &s = *state_;
  std::set<std::string> annotated;
  if (filter.unannotated_in) {
    for (const auto &[id, r] : s.annotations) {
      if (r.mode() == *filter.unannotated_in) annotated.insert(r.sentence_id);
    }
  }
  std::vector<SentenceRecord> result;
  for (const auto *sentence : s.OrderedSentences()) {
    if (filter.text_id && sentence->text_id != *filter.text_id) continue;
    if (annotated.count(sentence->id)) continue;
    result.push_back(*sentence);
  }
  return result;
}

StoreCounts Store::Counts() const {
  std::shared_lock lock(mutex_);
  const auto &s = *state_;
  return {s.texts.size(), s.sentences.size(), s.experts.size(), s.assignments.size(),
          s.annotations.size()};
}

std::pair<RawText, std::vector<SentenceRecord>> Store::AddText(
    std::string body, std::string category, Script script,
    const std::vector<std::string> &surfaces, const std::vector<TokenizedSentence> &sentences) {
  if (body.empty()) throw FormatError("text body is empty");
  if (category.empty()) throw FormatError("text category is empty");
  if (surfaces.size() != sentences.size()) throw Error("surfaces and sentences differ in length");

  std::unique_lock lock(mutex_);
  auto &s = *state_;
  RawText text;
  text.id = NewId('t', s.next_text);
  text.body = std::move(body);
  text.category = std::move(category);
  text.script = script;
  text.created_at = Now();

  std::vector<SentenceRecord> records;
  for (size_t i = 0; i < surfaces.size(); ++i) {
    SentenceRecord record;
    record.id = NewId('s', s.next_sentence);
    record.text_id = text.id;
    record.index = static_cast<int>(i);
    record.surface = surfaces[i];
    record.tokens = sentences[i].tokens;
    record.separators = sentences[i].separators;
    records.push_back(std::move(record));
  }

  s.text_log->Append(ToJson(text));
  s.texts[text.id] = text;
  for (const auto &record : records) {
    s.sentence_log->Append(ToJson(record));
    s.sentences[record.id] = record;
  }
  return {text, records};
}

Expert Store::AddExpert(const std::string &name, const std::string &credential_hash) {
  if (name.empty()) throw FormatError("expert name is empty");
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  if (s.expert_by_name.count(name)) throw ConflictError("expert name '" + name + "' is taken");
  Expert expert{NewId('e', s.next_expert), name, credential_hash, Now()};
  s.expert_log->Append(ToJson(expert));
  s.experts[expert.id] = expert;
  s.expert_by_name[name] = expert.id;
  return expert;
}

std::optional<SentenceRecord> Store::NextUnassigned(Mode mode) const {
  std::shared_lock lock(mutex_);
  const auto &s = *state_;
  std::set<std::string> covered;
  for (const auto &[id, a] : s.assignments) {
    if (a.mode == mode && a.state != AssignmentState::kReleased) covered.insert(a.sentence_id);
  }
  for (const auto *sentence : s.OrderedSentences()) {
    if (!covered.count(sentence->id)) return *sentence;
  }
  return std::nullopt;
}

std::optional<Assignment> Store::IssueAssignment(const std::string &expert_id, Mode mode) {
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  if (!s.experts.count(expert_id)) throw NotFoundError("unknown expert " + expert_id);

  std::map<std::string, int> live;
  std::set<std::string> mine;
  for (const auto &[id, a] : s.assignments) {
    if (a.mode != mode) continue;
    if (a.expert_id == expert_id && a.state == AssignmentState::kPending) return a;
    if (a.state == AssignmentState::kReleased) continue;
    ++live[a.sentence_id];
    if (a.expert_id == expert_id) mine.insert(a.sentence_id);
  }
  for (const auto &[id, r] : s.annotations) {
    if (r.expert_id == expert_id && r.mode() == mode) mine.insert(r.sentence_id);
  }

  for (const auto *sentence : s.OrderedSentences()) {
    if (mine.count(sentence->id)) continue;
    const auto it = live.find(sentence->id);
    if (it != live.end() && it->second >= options_.redundancy) continue;
    Assignment assignment;
    assignment.id = NewId('a', s.next_assignment);
    assignment.sentence_id = sentence->id;
    assignment.expert_id = expert_id;
    assignment.mode = mode;
    assignment.state = AssignmentState::kPending;
    assignment.issued_at = Now();
    s.assignment_log->Append(ToJson(assignment));
    s.assignments[assignment.id] = assignment;
    return assignment;
  }
  return std::nullopt;
}

AnnotationRecord Store::SubmitAnnotation(const std::string &assignment_id,
                                         const std::string &expert_id,
                                         const AnnotatedSentence &sentence,
                                         std::vector<Finding> warnings) {
  CheckWellFormed(sentence);
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  const auto it = s.assignments.find(assignment_id);
  if (it == s.assignments.end()) throw NotFoundError("unknown assignment " + assignment_id);
  Assignment assignment = it->second;
  if (assignment.expert_id != expert_id) {
    throw ConflictError("assignment " + assignment_id + " belongs to another expert");
  }
  if (assignment.state != AssignmentState::kPending) {
    throw ConflictError("assignment " + assignment_id + " is " +
                        std::string(ToString(assignment.state)) + ", not PENDING");
  }
  if (sentence.mode != assignment.mode) {
    throw ConflictError("annotation mode does not match assignment mode");
  }
  if (s.FindAnnotation(assignment.sentence_id, expert_id, assignment.mode)) {
    throw ConflictError("sentence " + assignment.sentence_id + " already annotated by " +
                        expert_id);
  }

  AnnotationRecord record;
  record.id = NewId('n', s.next_annotation);
  record.sentence_id = assignment.sentence_id;
  record.expert_id = expert_id;
  record.assignment_id = assignment_id;
  record.sentence = sentence;
  record.state = AnnotationState::kDraft;
  record.submitted_at = Now();
  record.warnings = std::move(warnings);

  s.annotation_log->Append(ToJson(record));
  s.annotations[record.id] = record;
  assignment.state = AssignmentState::kSubmitted;
  s.assignment_log->Append(ToJson(assignment));
  it->second = assignment;
  return record;
}

AnnotationRecord Store::ConfirmAnnotation(const std::string &annotation_id,
                                          const std::optional<std::string> &expert_id) {
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  const auto it = s.annotations.find(annotation_id);
  if (it == s.annotations.end()) throw NotFoundError("unknown annotation " + annotation_id);
  AnnotationRecord record = it->second;
  if (expert_id && record.expert_id != *expert_id) {
    throw ConflictError("annotation " + annotation_id + " belongs to another expert");
  }
  if (record.state == AnnotationState::kConfirmed) {
    throw ConflictError("annotation " + annotation_id + " already confirmed");
  }
  Assignment *assignment = nullptr;
  if (!record.assignment_id.empty()) {
    const auto a = s.assignments.find(record.assignment_id);
    if (a != s.assignments.end()) {
      if (a->second.state != AssignmentState::kSubmitted) {
        throw ConflictError("assignment " + record.assignment_id + " is " +
                            std::string(ToString(a->second.state)) + ", not SUBMITTED");
      }
      assignment = &a->second;
    }
  }

  record.state = AnnotationState::kConfirmed;
  s.annotation_log->Append(ToJson(record));
  it->second = record;
  if (assignment != nullptr) {
    Assignment updated = *assignment;
    updated.state = AssignmentState::kConfirmed;
    s.assignment_log->Append(ToJson(updated));
    *assignment = updated;
  }
  return record;
}

std::vector<Assignment> Store::ReleaseStale(long long age_seconds) {
  std::unique_lock lock(mutex_);
  auto &s = *state_;
  const long long now = Now();
  std::vector<Assignment> released;
  for (auto &[id, a] : s.assignments) {
    if (a.state != AssignmentState::kPending || now - a.issued_at < age_seconds) continue;
    Assignment updated = a;
    updated.state = AssignmentState::kReleased;
    s.assignment_log->Append(ToJson(updated));
    a = updated;
    released.push_back(updated);
  }
  return released;
}

std::vector<CorpusRecord> Store::ExportView() const {
  std::shared_lock lock(mutex_);
  const auto &s = *state_;
  std::vector<CorpusRecord> records;
  for (const auto &[id, r] : s.annotations) {
    if (r.state != AnnotationState::kConfirmed) continue;
    const auto sentence = s.sentences.find(r.sentence_id);
    if (sentence == s.sentences.end()) continue;
    CorpusRecord record;
    record.text_id = sentence->second.text_id;
    const auto text = s.texts.find(record.text_id);
    if (text != s.texts.end()) record.category = text->second.category;
    record.sentence_id = r.sentence_id;
    record.sentence_index = sentence->second.index;
    record.annotator = r.expert_id;
    record.sentence = r.sentence;
    records.push_back(std::move(record));
  }
  std::sort(records.begin(), records.end(), [](const CorpusRecord &a, const CorpusRecord &b) {
    return std::make_tuple(a.text_id, a.sentence_index, ModeCode(a.sentence.mode), a.annotator) <
           std::make_tuple(b.text_id, b.sentence_index, ModeCode(b.sentence.mode), b.annotator);
  });
  return records;
}

std::vector<std::string> Store::CheckInvariants() const {
  std::shared_lock lock(mutex_);
  const auto &s = *state_;
  std::vector<std::string> problems;

  std::map<std::pair<std::string, Mode>, int> live;
  std::map<std::pair<std::string, Mode>, int> pending;
  for (const auto &[id, a] : s.assignments) {
    if (a.state != AssignmentState::kReleased) ++live[{a.sentence_id, a.mode}];
    if (a.state == AssignmentState::kPending) ++pending[{a.expert_id, a.mode}];
  }
  for (const auto &[key, n] : live) {
    if (n > options_.redundancy) {
      problems.push_back("sentence " + key.first + " has " + std::to_string(n) +
                         " live assignments in mode " + std::string(ModeCode(key.second)));
    }
  }
  for (const auto &[key, n] : pending) {
    if (n > 1) {
      problems.push_back("expert " + key.first + " holds " + std::to_string(n) +
                         " pending assignments in mode " + std::string(ModeCode(key.second)));
    }
  }

  std::set<std::tuple<std::string, std::string, Mode>> seen;
  for (const auto &[id, r] : s.annotations) {
    if (!seen.insert({r.sentence_id, r.expert_id, r.mode()}).second) {
      problems.push_back("duplicate annotation for sentence " + r.sentence_id + " by " +
                         r.expert_id);
    }
    if (r.assignment_id.empty()) continue;
    const auto a = s.assignments.find(r.assignment_id);
    if (a == s.assignments.end()) {
      problems.push_back("annotation " + id + " references unknown assignment");
      continue;
    }
    const AssignmentState want = r.state == AnnotationState::kConfirmed
                                     ? AssignmentState::kConfirmed
                                     : AssignmentState::kSubmitted;
    if (a->second.state != want) {
      problems.push_back("annotation " + id + " is " + std::string(ToString(r.state)) +
                         " but assignment " + a->first + " is " +
                         std::string(ToString(a->second.state)));
    }
  }

  std::map<std::string, std::vector<int>> indices;
  for (const auto &[id, sentence] : s.sentences) {
    indices[sentence.text_id].push_back(sentence.index);
    if (sentence.separators.size() != sentence.tokens.size() + 1) {
      problems.push_back("sentence " + id + " has mismatched separators");
      continue;
    }
    std::string rebuilt = sentence.separators[0];
    for (size_t i = 0; i < sentence.tokens.size(); ++i) {
      rebuilt += sentence.tokens[i] + sentence.separators[i + 1];
    }
    if (rebuilt != sentence.surface) {
      problems.push_back("sentence " + id + " tokens do not rebuild its surface");
    }
  }
  for (auto &[text_id, list] : indices) {
    std::sort(list.begin(), list.end());
    for (size_t i = 0; i < list.size(); ++i) {
      if (list[i] != static_cast<int>(i)) {
        problems.push_back("text " + text_id + " sentence indices are not contiguous");
        break;
      }
    }
  }
  return problems;
}

}  // namespace uzannot
