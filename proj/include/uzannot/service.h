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

#ifndef UZANNOT_SERVICE_H_
#define UZANNOT_SERVICE_H_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "uzannot/credentials.h"
#include "uzannot/store.h"
#include "uzannot/tagset.h"
#include "uzannot/textpipe.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace uzannot {

// Settings read from UZANNOT_ADDR, UZANNOT_DATA, UZANNOT_TAGSET and
// UZANNOT_REDUNDANCY.
struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = "uzannot-data";
  std::optional<std::string> tagset_path;
  int redundancy = 1;

  // Throws Error on malformed values.
  static ServiceConfig FromEnvironment();
};

struct ServiceOptions {
  long long session_ttl_seconds = 12 * 60 * 60;
};

// The HTTP API of the annotation workflow. Request and response bodies are
// JSON objects; see docs/api.md. Handlers are stateless apart from the
// session table; all persistent state goes through the Store.
class AnnotationService {
 public:
  AnnotationService(Store &store, const Registry &registry,
                    std::unique_ptr<PassphraseHasher> hasher, ServiceOptions options = {});

  // Registers every endpoint on |server|.
  void Install(httplib::Server &server);

  // Expert id bound to a live session token.
  std::optional<std::string> Authenticate(const std::string &token);

 private:
  struct Session {
    std::string expert_id;
    long long expires_at = 0;
  };

  std::string OpenSession(const std::string &expert_id, long long *expires_at);

  Store &store_;
  const Registry &registry_;
  std::unique_ptr<PassphraseHasher> hasher_;
  ServiceOptions options_;

  std::mutex sessions_mutex_;
  std::unordered_map<std::string, Session> sessions_;
};

}  // namespace uzannot

#endif  // UZANNOT_SERVICE_H_
