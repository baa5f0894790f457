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

#include "uzannot/service.h"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "str_util.h"
#include "uzannot/corpus_format.h"
#include "uzannot/ingest.h"
#include "uzannot/stats.h"
#include "uzannot/validate.h"

namespace uzannot {

using nlohmann::json;

namespace {

constexpr char kJson[] = "application/json";

// Carries an HTTP status and a JSON body out of a handler.
class HttpError : public std::runtime_error {
 public:
  HttpError(int status, const std::string &message)
      : HttpError(status, json{{"error", message}}, 0) {}
  static HttpError WithBody(int status, json body) { return HttpError(status, std::move(body), 0); }

  int status() const { return status_; }
  const json &body() const { return body_; }

 private:
  HttpError(int status, json body, int)
      : std::runtime_error(body.value("error", "")), status_(status), body_(std::move(body)) {}

  int status_;
  json body_;
};

void Reply(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

template <typename Handler>
httplib::Server::Handler Guard(Handler handler) {
  return [handler](const httplib::Request &req, httplib::Response &res) {
    try {
      handler(req, res);
    } catch (const HttpError &e) {
      Reply(res, e.status(), e.body());
    } catch (const NotFoundError &e) {
      Reply(res, 404, {{"error", e.what()}});
    } catch (const ConflictError &e) {
      Reply(res, 409, {{"error", e.what()}});
    } catch (const FormatError &e) {
      Reply(res, 400, {{"error", e.what()}});
    } catch (const std::exception &e) {
      Reply(res, 500, {{"error", e.what()}});
    }
  };
}

json ParseBody(const httplib::Request &req) {
  try {
    json body = json::parse(req.body);
    if (!body.is_object()) throw HttpError(400, "request body must be a JSON object");
    return body;
  } catch (const json::parse_error &) {
    throw HttpError(400, "request body is not valid JSON");
  }
}

std::string RequireString(const json &body, const char *field) {
  const auto it = body.find(field);
  if (it == body.end() || !it->is_string()) {
    throw HttpError(400, std::string("missing string field '") + field + "'");
  }
  return it->get<std::string>();
}

Mode RequireMode(const httplib::Request &req, const char *param) {
  const auto mode = ParseModeCode(req.get_param_value(param));
  if (!mode) throw HttpError(400, std::string("query parameter '") + param + "' must be M or S");
  return *mode;
}

json FindingJson(const Finding &f) {
  return {{"severity", ToString(f.severity)},
          {"item", f.item_index},
          {"rule", ToString(f.rule)},
          {"message", f.message}};
}

json FindingsJson(const std::vector<Finding> &findings) {
  json out = json::array();
  for (const auto &f : findings) out.push_back(FindingJson(f));
  return out;
}

json TagJson(const TagDefinition &tag) {
  json out = {{"code", tag.code},
              {"kind", tag.kind == TagKind::kMorphological ? "M" : "S"},
              {"slot", ToString(tag.slot)},
              {"description", tag.description},
              {"example", tag.example},
              {"status", ToString(tag.status)}};
  out["word_class"] = tag.word_class ? json(ToString(*tag.word_class)) : json(nullptr);
  return out;
}

json AnnotationJson(const AnnotationRecord &record) {
  return {{"annotation_id", record.id},
          {"assignment_id", record.assignment_id},
          {"sentence_id", record.sentence_id},
          {"expert_id", record.expert_id},
          {"mode", ModeCode(record.mode())},
          {"state", ToString(record.state)},
          {"line", SerializeLine(record.sentence)},
          {"submitted_at", record.submitted_at},
          {"findings", FindingsJson(record.warnings)}};
}

std::string BearerToken(const httplib::Request &req) {
  const std::string header = req.get_header_value("Authorization");
  constexpr std::string_view kPrefix = "Bearer ";
  if (!std::string_view(header).starts_with(kPrefix)) return {};
  return std::string(internal::TrimAscii(std::string_view(header).substr(kPrefix.size())));
}

}  // namespace

ServiceConfig ServiceConfig::FromEnvironment() {
  ServiceConfig config;
  if (const char *addr = std::getenv("UZANNOT_ADDR"); addr && *addr) {
    const std::string_view value(addr);
    const size_t colon = value.rfind(':');
    if (colon == std::string_view::npos) throw Error("UZANNOT_ADDR must be host:port");
    const auto port = internal::ParseInt<int>(value.substr(colon + 1));
    if (!port || *port < 0 || *port > 65535) throw Error("UZANNOT_ADDR has a bad port");
    config.host = std::string(value.substr(0, colon));
    config.port = *port;
  }
  if (const char *data = std::getenv("UZANNOT_DATA"); data && *data) config.data_dir = data;
  if (const char *tagset = std::getenv("UZANNOT_TAGSET"); tagset && *tagset) {
    config.tagset_path = tagset;
  }
  if (const char *redundancy = std::getenv("UZANNOT_REDUNDANCY"); redundancy && *redundancy) {
    const auto value = internal::ParseInt<int>(redundancy);
    if (!value || *value < 1) throw Error("UZANNOT_REDUNDANCY must be a positive integer");
    config.redundancy = *value;
  }
  return config;
}

AnnotationService::AnnotationService(Store &store, const Registry &registry,
                                     std::unique_ptr<PassphraseHasher> hasher,
                                     ServiceOptions options)
    : store_(store), registry_(registry), hasher_(std::move(hasher)), options_(options) {}

std::string AnnotationService::OpenSession(const std::string &expert_id, long long *expires_at) {
  const std::string token = RandomHex(32);
  *expires_at = store_.Now() + options_.session_ttl_seconds;
  std::lock_guard lock(sessions_mutex_);
  sessions_[token] = {expert_id, *expires_at};
  return token;
}

std::optional<std::string> AnnotationService::Authenticate(const std::string &token) {
  if (token.empty()) return std::nullopt;
  const long long now = store_.Now();
  std::lock_guard lock(sessions_mutex_);
  const auto it = sessions_.find(token);
  if (it == sessions_.end()) return std::nullopt;
  if (it->second.expires_at <= now) {
    sessions_.erase(it);
    return std::nullopt;
  }
  return it->second.expert_id;
}

void AnnotationService::Install(httplib::Server &server) {
  const auto require_expert = [this](const httplib::Request &req) {
    const auto expert = Authenticate(BearerToken(req));
    if (!expert) throw HttpError(401, "missing, invalid or expired session token");
    return *expert;
  };

  server.Post("/api/experts", Guard([this](const httplib::Request &req, httplib::Response &res) {
    const json body = ParseBody(req);
    const std::string name = RequireString(body, "name");
    const std::string passphrase = RequireString(body, "passphrase");
    if (name.empty()) throw HttpError(400, "name is empty");
    if (passphrase.empty()) throw HttpError(400, "passphrase is empty");
    if (store_.FindExpertByName(name)) throw HttpError(409, "expert name is taken");
    const Expert expert = store_.AddExpert(name, hasher_->Hash(passphrase));
    Reply(res, 201, {{"expert_id", expert.id}, {"name", expert.name}});
  }));

  server.Post("/api/sessions", Guard([this](const httplib::Request &req, httplib::Response &res) {
    const json body = ParseBody(req);
    const std::string name = RequireString(body, "name");
    const std::string passphrase = RequireString(body, "passphrase");
    const auto expert = store_.FindExpertByName(name);
    if (!expert || !hasher_->Verify(expert->credential_hash, passphrase)) {
      throw HttpError(401, "unknown name or wrong passphrase");
    }
    long long expires_at = 0;
    const std::string token = OpenSession(expert->id, &expires_at);
    Reply(res, 201, {{"token", token}, {"expert_id", expert->id}, {"expires_at", expires_at}});
  }));

  server.Post("/api/texts",
              Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
                require_expert(req);
                const json body = ParseBody(req);
                IngestResult result;
                try {
                  result = IngestText(store_, RequireString(body, "body"),
                                      RequireString(body, "category"));
                } catch (const TransliterationError &e) {
                  throw HttpError(422, e.what());
                }
                Reply(res, 201,
                      {{"text_id", result.text.id},
                       {"sentence_count", result.sentences.size()},
                       {"script", ToString(result.text.script)}});
              }));

  server.Get("/api/assignments/next",
             Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
               const std::string expert_id = require_expert(req);
               const Mode mode = RequireMode(req, "mode");
               const auto assignment = store_.IssueAssignment(expert_id, mode);
               if (!assignment) {
                 res.status = 204;
                 return;
               }
               const SentenceRecord sentence = store_.GetSentence(assignment->sentence_id);
               Reply(res, 200,
                     {{"assignment_id", assignment->id},
                      {"sentence_id", sentence.id},
                      {"text_id", sentence.text_id},
                      {"index", sentence.index},
                      {"mode", ModeCode(mode)},
                      {"surface", sentence.surface},
                      {"tokens", sentence.tokens}});
             }));

  server.Post("/api/annotations",
              Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
                const std::string expert_id = require_expert(req);
                const json body = ParseBody(req);
                const std::string assignment_id = RequireString(body, "assignment_id");
                const std::string line = RequireString(body, "line");

                const Assignment assignment = store_.GetAssignment(assignment_id);
                if (assignment.expert_id != expert_id) {
                  throw HttpError(409, "assignment belongs to another expert");
                }
                if (assignment.state != AssignmentState::kPending) {
                  throw HttpError(409, "assignment is " +
                                           std::string(ToString(assignment.state)) +
                                           ", not PENDING");
                }

                AnnotatedSentence sentence;
                try {
                  sentence = ParseLine(line, assignment.mode);
                } catch (const LineSyntaxError &e) {
                  Finding finding{Severity::kError, e.item_index(), Rule::kP0, e.what()};
                  throw HttpError::WithBody(422, json{{"error", "annotation line does not parse"},
                                            {"findings", json::array({FindingJson(finding)})}});
                }
                const ValidationReport report = Validate(sentence, registry_);
                if (report.HasErrors()) {
                  throw HttpError::WithBody(422, json{{"error", "annotation has validation errors"},
                                            {"findings", FindingsJson(report.findings)}});
                }
                const AnnotationRecord record =
                    store_.SubmitAnnotation(assignment_id, expert_id, sentence, report.findings);
                Reply(res, 201, AnnotationJson(record));
              }));

  server.Get(R"(/api/annotations/([A-Za-z0-9_-]+))",
             Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
               require_expert(req);
               Reply(res, 200, AnnotationJson(store_.GetAnnotation(req.matches[1].str())));
             }));

  server.Post(R"(/api/annotations/([A-Za-z0-9_-]+)/confirm)",
              Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
                const std::string expert_id = require_expert(req);
                const AnnotationRecord record =
                    store_.ConfirmAnnotation(req.matches[1].str(), expert_id);
                Reply(res, 200, AnnotationJson(record));
              }));

  server.Get("/api/tagset",
             Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
               require_expert(req);
               const Mode mode = RequireMode(req, "kind");
               const TagKind kind =
                   mode == Mode::kMorphological ? TagKind::kMorphological : TagKind::kSyntactic;
               json tags = json::array();
               for (const auto *tag : registry_.TagsByKind(kind)) tags.push_back(TagJson(*tag));
               json out = {{"kind", ModeCode(mode)}, {"count", tags.size()}, {"tags", tags}};
               if (kind == TagKind::kMorphological) {
                 json groups = json::array();
                 for (WordClass cls : kAllWordClasses) {
                   json members = json::array();
                   for (const auto *tag : registry_.TagsByClass(cls)) members.push_back(tag->code);
                   groups.push_back({{"word_class", ToString(cls)}, {"codes", members}});
                 }
                 out["groups"] = groups;
               }
               Reply(res, 200, out);
             }));

  server.Get("/api/export",
             Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
               require_expert(req);
               const std::string format = req.get_param_value("format");
               const auto records = store_.ExportView();
               if (format == "txt") {
                 res.set_content(ExportTxt(records), "text/plain; charset=utf-8");
               } else if (format == "xml") {
                 res.set_content(ExportXml(records), "application/xml; charset=utf-8");
               } else {
                 throw HttpError(400, "format must be txt or xml");
               }
             }));

  server.Get("/api/stats",
             Guard([this, require_expert](const httplib::Request &req, httplib::Response &res) {
               require_expert(req);
               const StoreStats stats = ComputeStoreStats(store_);
               json categories = json::object();
               for (const auto &[name, counts] : stats.categories) {
                 categories[name] = {{"texts", counts.texts},
                                     {"sentences", counts.sentences},
                                     {"words", counts.words}};
               }
               Reply(res, 200,
                     {{"texts", stats.texts},
                      {"sentences", stats.sentences},
                      {"words", stats.words},
                      {"confirmed",
                       {{"M", stats.confirmed_morphological},
                        {"S", stats.confirmed_syntactic}}},
                      {"categories", categories}});
             }));
}

}  // namespace uzannot
