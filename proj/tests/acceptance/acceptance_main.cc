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

// Prints one PASS or FAIL line per acceptance criterion; exits non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "service_harness.h"
#include "test_support.h"
#include "uzannot/annotation.h"
#include "uzannot/cli.h"
#include "uzannot/corpus_format.h"
#include "uzannot/tagset.h"
#include "uzannot/validate.h"

namespace uzannot::acceptance {
namespace {

using nlohmann::json;
using testing::Reply;
using testing::ServiceHarness;
using testing::TestDataPath;

// Collects failure reasons for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string &what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string> &failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

bool Run(const std::string &name, double budget_seconds, const std::function<void(Check &)> &body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception &e) {
    check.Expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  check.Expect(seconds < budget_seconds, "took " + std::to_string(seconds) + " s, budget " +
                                             std::to_string(budget_seconds) + " s");
  const bool passed = check.failures().empty();
  std::cout << (passed ? "PASS " : "FAIL ") << name << " (" << static_cast<int>(seconds * 1000)
            << " ms)";
  for (const auto &f : check.failures()) std::cout << "\n    " << f;
  std::cout << std::endl;
  return passed;
}

Mode GoldenMode(size_t index) { return index % 2 == 0 ? Mode::kMorphological : Mode::kSyntactic; }

void GoldenRoundTrip(Check &check) {
  const auto lines = testing::ReadLines(TestDataPath("golden_lines.txt"));
  check.Expect(lines.size() == 10, "expected 10 golden lines, got " + std::to_string(lines.size()));
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string out = SerializeLine(ParseLine(lines[i], GoldenMode(i)));
    check.Expect(out == lines[i], "line " + std::to_string(i + 1) + " became: " + out);
  }
}

void RegistryManifest(Check &check) {
  const ClassManifest &manifest = ClassManifest::Published();
  const LoadResult full =
      LoadRegistryFile(TestDataPath("complete_tagset.tsv").string(), manifest, /*strict=*/true);
  check.Expect(full.warnings.empty(), "strict load produced warnings");
  check.Expect(full.registry.TagsByKind(TagKind::kMorphological).size() == 102,
               "morphological tag count is not 102");
  check.Expect(manifest.total() == 102, "manifest total is not 102");
  for (const auto &[word_class, expected] : manifest.counts()) {
    const size_t actual = full.registry.TagsByClass(word_class).size();
    check.Expect(actual == static_cast<size_t>(expected),
                 std::string(ToString(word_class)) + " has " + std::to_string(actual));
  }
  std::set<std::string> syntactic;
  for (const auto *tag : full.registry.TagsByKind(TagKind::kSyntactic)) syntactic.insert(tag->code);
  const std::set<std::string> expected_syntactic = {"EG", "OK", "FK", "QA", "SA", "VL", "VS",
                                                    "VH", "PH", "OH", "SH", "MH", "UN", "KR"};
  check.Expect(syntactic == expected_syntactic, "syntactic codes differ");

  // Seed: non-strict, only shortfall warnings. Shortfalls come from an
  // independent row count of the seed file.
  const LoadResult seed = LoadSeedRegistry();
  std::map<std::string, int> rows;
  std::istringstream in{std::string(EmbeddedSeedTagset())};
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream split(line);
    for (std::string f; std::getline(split, f, '\t');) fields.push_back(f);
    if (fields.size() >= 3 && fields[1] == "M") ++rows[fields[2]];
  }
  std::set<std::string> warned;
  for (const auto &w : seed.warnings) {
    check.Expect(w.actual < w.expected, "warning is not a shortfall: " + w.message);
    if (w.word_class) warned.insert(std::string(ToString(*w.word_class)));
  }
  for (const auto &[word_class, expected] : manifest.counts()) {
    const std::string name(ToString(word_class));
    const bool short_of_manifest = rows[name] < expected;
    check.Expect(short_of_manifest == (warned.count(name) == 1),
                 "warning mismatch for " + name);
  }
}

void ValidationRules(Check &check) {
  const Registry &seed = testing::SeedRegistry();
  const auto &suite = testing::MutationSuite();
  check.Expect(suite.size() >= 20, "mutation suite has fewer than 20 lines");
  std::set<Rule> rules_covered;
  for (const auto &mutation : suite) {
    bool detected = false;
    for (const auto &f : testing::CheckLine(mutation.line, mutation.mode, seed)) {
      detected |= f.severity == Severity::kError && f.rule == mutation.rule;
    }
    rules_covered.insert(mutation.rule);
    check.Expect(detected, "missed " + std::string(ToString(mutation.rule)) + ": " + mutation.line);
  }
  for (Rule r : {Rule::kM1, Rule::kM2, Rule::kM3, Rule::kS1, Rule::kP0}) {
    check.Expect(rules_covered.count(r) == 1, "no mutation for " + std::string(ToString(r)));
  }

  const auto lines = testing::ReadLines(TestDataPath("golden_lines.txt"));
  for (size_t i = 0; i < lines.size(); ++i) {
    for (const auto &f : testing::CheckLine(lines[i], GoldenMode(i), seed)) {
      check.Expect(f.severity != Severity::kError,
                   "golden line " + std::to_string(i + 1) + ": " + f.message);
    }
  }
  const auto *km = seed.Lookup("KM");
  const auto *vvs = seed.Lookup("VVS");
  check.Expect(km && km->status == TagStatus::kInferred, "KM is not flagged inferred");
  check.Expect(vvs && vvs->status == TagStatus::kUnconfirmed, "VVS is not flagged unconfirmed");
}

void PropertySuite(Check &check) {
  const Registry &registry = testing::CompleteRegistry();
  testing::SentenceGenerator generator(registry, 20260101);
  std::vector<CorpusRecord> records;
  for (int i = 0; i < 1000; ++i) {
    CorpusRecord record = generator.NextRecord();
    const AnnotatedSentence &s = record.sentence;
    check.Expect(!Validate(s, registry).HasErrors(), "generated sentence has errors");
    const std::string line = SerializeLine(s);
    check.Expect(ParseLine(line, s.mode) == s, "line round-trip failed: " + line);
    records.push_back(std::move(record));
  }
  std::istringstream xml(ExportXml(records));
  check.Expect(ImportXml(xml) == records, "XML round-trip differs");
  std::istringstream txt(ExportTxt(records));
  const auto from_txt = ImportTxt(txt);
  bool same = from_txt.size() == records.size();
  for (size_t i = 0; same && i < records.size(); ++i) same = SameTxtFields(from_txt[i], records[i]);
  check.Expect(same, "TXT round-trip differs");
}

struct ExpectedSentence {
  std::string surface;
  std::string morphological;
  std::string syntactic;
};

void EndToEnd(Check &check) {
  const std::vector<ExpectedSentence> sentences = {
      {"Anvar to'satdan eshik yoniga keldi.",
       "Anvar/SOT to'satdan/HRV eshik/NOT yoniga/JOT keldi/SFL/3B/OTZ.",
       "Anvar/EG to'satdan/VH eshik+yoniga/OH keldi/FK."},
      {"Ilon yassi yuzada harakatlana olmaydi.",
       "Ilon/NOT yassi/XSF yuzada/JOT harakatlana+olmaydi/KFSQ.",
       "Ilon/EG yassi/SA yuzada/OH harakatlana+olmaydi/FK."},
      {"Men biroz toza havo olish uchun derazani ochdim.",
       "Men/KOL biroz/MIRV toza/XSF havo/MOT olish/HFL uchun/KM derazani/NOT ochdim/SFL/1B/OTZ.",
       "Men/EG biroz/PH toza+havo+olish+uchun/MH derazani/VS ochdim/FK."},
  };
  std::map<std::string, const ExpectedSentence *> by_surface;
  for (const auto &s : sentences) by_surface[s.surface] = &s;

  ServiceHarness harness(testing::SeedRegistry());
  const std::vector<std::string> tokens = {harness.RegisterAndLogin("aziza"),
                                           harness.RegisterAndLogin("bobur")};
  const Reply ingest = harness.Post(
      "/api/texts",
      {{"body",
        "Anvar to'satdan eshik yoniga keldi. Илон ясси юзада ҳаракатлана олмайди. "
        "Men biroz toza havo olish uchun derazani ochdim."},
       {"category", "adabiyot"}},
      tokens[0]);
  check.Expect(ingest.status == 201, "ingest: " + ingest.body);
  check.Expect(ingest.json.value("sentence_count", 0) == 3, "ingest did not yield 3 sentences");

  // Both experts pull work in turn until neither gets any, in both modes.
  std::map<std::string, int> grants;  // "<sentence>/<mode>" -> count
  std::vector<std::pair<std::string, std::string>> annotations;  // id, owner token
  for (const std::string mode : {"M", "S"}) {
    std::vector<bool> done(tokens.size(), false);
    for (size_t turn = 0; !(done[0] && done[1]); turn = (turn + 1) % tokens.size()) {
      if (done[turn]) continue;
      const Reply next = harness.Get("/api/assignments/next?mode=" + mode, tokens[turn]);
      if (next.status == 204) {
        done[turn] = true;
        continue;
      }
      check.Expect(next.status == 200, "next: " + next.body);
      if (next.status != 200) return;
      const std::string surface = next.json["surface"];
      ++grants[next.json["sentence_id"].get<std::string>() + "/" + mode];
      const auto it = by_surface.find(surface);
      check.Expect(it != by_surface.end(), "unexpected surface: " + surface);
      if (it == by_surface.end()) return;
      const std::string line = mode == "M" ? it->second->morphological : it->second->syntactic;
      const Reply submitted = harness.Post(
          "/api/annotations", {{"assignment_id", next.json["assignment_id"]}, {"line", line}},
          tokens[turn]);
      check.Expect(submitted.status == 201, "submit: " + submitted.body);
      if (submitted.status == 201) {
        annotations.emplace_back(submitted.json["annotation_id"], tokens[turn]);
      }
    }
  }
  check.Expect(grants.size() == 6, "expected 6 grants, got " + std::to_string(grants.size()));
  for (const auto &[key, n] : grants) check.Expect(n == 1, key + " granted twice");

  for (const auto &[id, token] : annotations) {
    const Reply r = harness.Post("/api/annotations/" + id + "/confirm", json::object(), token);
    check.Expect(r.status == 200, "confirm: " + r.body);
  }

  const auto stored = harness.store().ExportView();
  check.Expect(stored.size() == 6, "store exports " + std::to_string(stored.size()) + " records");
  const Reply xml = harness.Get("/api/export?format=xml", tokens[1]);
  std::istringstream xml_in(xml.body);
  check.Expect(ImportXml(xml_in) == stored, "XML re-import differs from the store");
  const Reply txt = harness.Get("/api/export?format=txt", tokens[1]);
  std::istringstream txt_in(txt.body);
  const auto from_txt = ImportTxt(txt_in);
  bool same = from_txt.size() == stored.size();
  for (size_t i = 0; same && i < stored.size(); ++i) same = SameTxtFields(from_txt[i], stored[i]);
  check.Expect(same, "TXT re-import differs from the store");
  check.Expect(harness.store().CheckInvariants().empty(), "store invariants broken");

  // Race: 32 clients ask at once for 10 sentences.
  ServiceHarness race(testing::SeedRegistry(), /*redundancy=*/1);
  const std::string admin = race.RegisterAndLogin("admin");
  race.Post("/api/texts",
            {{"body", "Bir. Ikki. Uch. To'rt. Besh. Olti. Yetti. Sakkiz. To'qqiz. O'n."},
             {"category", "race"}},
            admin);
  std::vector<std::string> clients;
  for (int i = 0; i < 32; ++i) clients.push_back(race.RegisterAndLogin("c" + std::to_string(i)));
  std::vector<Reply> replies(clients.size());
  std::vector<std::thread> threads;
  for (size_t i = 0; i < clients.size(); ++i) {
    threads.emplace_back(
        [&, i] { replies[i] = race.Get("/api/assignments/next?mode=M", clients[i]); });
  }
  for (auto &t : threads) t.join();
  std::set<std::string> granted;
  size_t grant_count = 0;
  for (const auto &r : replies) {
    if (r.status != 200) continue;
    ++grant_count;
    granted.insert(r.json["sentence_id"].get<std::string>());
  }
  check.Expect(grant_count == granted.size(), "a sentence was granted twice");
  check.Expect(grant_count == 10, "race granted " + std::to_string(grant_count) + " of 10");
}

void Stats(Check &check) {
  const auto golden = TestDataPath("golden.txt");
  std::ostringstream out;
  std::ostringstream err;
  check.Expect(cli::CorpusStats(golden, cli::CorpusFormat::kTxt, {out, err}) == cli::kExitOk,
               "stats failed: " + err.str());
  std::map<std::string, long> reported;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    const size_t tab = line.find('\t');
    if (tab != std::string::npos) reported[line.substr(0, tab)] = std::stol(line.substr(tab + 1));
  }

  // Independent count straight from the file text.
  long units = 0;
  long words = 0;
  std::set<std::string> ids;
  for (const auto &line : testing::ReadLines(golden)) {
    if (line.rfind("## ", 0) == 0) {
      const size_t at = line.find("sentence=") + 9;
      ids.insert(line.substr(at, line.find(' ', at) - at));
      continue;
    }
    std::istringstream pieces(line);
    for (std::string piece; pieces >> piece;) {
      ++units;
      words += 1 + static_cast<long>(std::count(piece.begin(), piece.end(), '+'));
    }
  }
  constexpr long kHandCountedWords = 84;
  check.Expect(reported["sentences"] == 5, "sentences: " + std::to_string(reported["sentences"]));
  check.Expect(static_cast<long>(ids.size()) == 5, "independent sentence count is not 5");
  check.Expect(reported["units"] == units, "units " + std::to_string(reported["units"]) +
                                               " vs independent " + std::to_string(units));
  check.Expect(reported["words"] == words, "words " + std::to_string(reported["words"]) +
                                               " vs independent " + std::to_string(words));
  check.Expect(words == kHandCountedWords, "independent word count is not the hand count");
}

}  // namespace
}  // namespace uzannot::acceptance

int main() {
  using namespace uzannot::acceptance;
  bool ok = true;
  ok &= Run("golden-round-trip", 1, GoldenRoundTrip);
  ok &= Run("registry-manifest", 5, RegistryManifest);
  ok &= Run("validation-rules", 5, ValidationRules);
  ok &= Run("property-suite", 10, PropertySuite);
  ok &= Run("end-to-end-workflow", 30, EndToEnd);
  ok &= Run("stats", 5, Stats);
  return ok ? 0 : 1;
}
