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

#ifndef UZANNOT_TESTS_SUPPORT_SERVICE_HARNESS_H_
#define UZANNOT_TESTS_SUPPORT_SERVICE_HARNESS_H_

#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "test_support.h"
#include "uzannot/service.h"
#include "uzannot/store.h"

namespace uzannot::testing {

struct Reply {
  int status = 0;
  std::string body;
  nlohmann::json json;  // null unless the body is JSON
};

// Runs the annotation service on an ephemeral localhost port over a store in a
// temporary directory.
class ServiceHarness {
 public:
  explicit ServiceHarness(const Registry &registry, int redundancy = 1,
                          ServiceOptions options = {});
  ~ServiceHarness();

  int port() const { return port_; }
  Store &store() { return *store_; }

  // Sets the store clock; 0 returns to the system clock.
  void SetClock(long long now) { now_ = now; }

  Reply Get(const std::string &path, const std::string &token = "") const;
  Reply Post(const std::string &path, const nlohmann::json &body,
             const std::string &token = "") const;
  Reply PostRaw(const std::string &path, const std::string &body,
                const std::string &token = "") const;

  // Registers |name| and logs in; returns the session token.
  std::string RegisterAndLogin(const std::string &name, const std::string &passphrase = "pw");

 private:
  TempDir dir_;
  std::atomic<long long> now_{0};
  std::unique_ptr<Store> store_;
  std::unique_ptr<AnnotationService> service_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace uzannot::testing

#endif  // UZANNOT_TESTS_SUPPORT_SERVICE_HARNESS_H_
