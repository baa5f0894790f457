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

// HTTP server for the annotation workflow. Configured from the environment:
// UZANNOT_ADDR (host:port), UZANNOT_DATA, UZANNOT_TAGSET, UZANNOT_REDUNDANCY.

#include <csignal>
#include <iostream>
#include <memory>

#include <httplib.h>

#include "uzannot/credentials.h"
#include "uzannot/errors.h"
#include "uzannot/service.h"
#include "uzannot/store.h"
#include "uzannot/tagset.h"

namespace {

httplib::Server *g_server = nullptr;

void HandleSignal(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int main() {
  using namespace uzannot;
  try {
    const ServiceConfig config = ServiceConfig::FromEnvironment();
    LoadResult tagset = LoadTagsetOrSeed(config.tagset_path);
    for (const auto &w : tagset.warnings) std::cerr << "tagset: " << w.message << '\n';

    StoreOptions options;
    options.redundancy = config.redundancy;
    auto store = Store::Open(config.data_dir, options);

    AnnotationService service(*store, tagset.registry,
                              std::make_unique<Argon2Hasher>(Argon2Hasher::Interactive()));
    httplib::Server server;
    server.new_task_queue = [] { return new httplib::ThreadPool(16); };
    service.Install(server);

    g_server = &server;
    std::signal(SIGINT, HandleSignal);
    std::signal(SIGTERM, HandleSignal);
    std::cerr << "listening on " << config.host << ':' << config.port << '\n';
    if (!server.listen(config.host, config.port)) {
      std::cerr << "cannot listen on " << config.host << ':' << config.port << '\n';
      return 1;
    }
  } catch (const Error &e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
