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

#include "service_harness.h"

#include <chrono>
#include <stdexcept>

namespace uzannot::testing {

namespace {

Reply ToReply(const httplib::Result &result) {
  if (!result) throw std::runtime_error("HTTP request failed: " + httplib::to_string(result.error()));
  Reply reply;
  reply.status = result->status;
  reply.body = result->body;
  reply.json = nlohmann::json::parse(result->body, nullptr, /*allow_exceptions=*/false);
  if (reply.json.is_discarded()) reply.json = nullptr;
  return reply;
}

httplib::Headers AuthHeaders(const std::string &token) {
  if (token.empty()) return {};
  return {{"Authorization", "Bearer " + token}};
}

}  // namespace

ServiceHarness::ServiceHarness(const Registry &registry, int redundancy, ServiceOptions options) {
  StoreOptions store_options;
  store_options.sync = false;
  store_options.redundancy = redundancy;
  store_options.clock = [this]() -> long long {
    const long long now = now_.load();
    if (now != 0) return now;
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  };
  store_ = Store::Open(dir_.path(), store_options);
  service_ = std::make_unique<AnnotationService>(
      *store_, registry, std::make_unique<Argon2Hasher>(Argon2Hasher::Minimal()), options);
  server_.new_task_queue = [] { return new httplib::ThreadPool(40); };
  service_->Install(server_);
  port_ = server_.bind_to_any_port("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("cannot bind a local port");
  thread_ = std::thread([this] { server_.listen_after_bind(); });
  server_.wait_until_ready();
}

ServiceHarness::~ServiceHarness() {
  server_.stop();
  if (thread_.joinable()) thread_.join();
}

Reply ServiceHarness::Get(const std::string &path, const std::string &token) const {
  httplib::Client client("127.0.0.1", port_);
  return ToReply(client.Get(path, AuthHeaders(token)));
}

Reply ServiceHarness::Post(const std::string &path, const nlohmann::json &body,
                           const std::string &token) const {
  return PostRaw(path, body.dump(), token);
}

Reply ServiceHarness::PostRaw(const std::string &path, const std::string &body,
                              const std::string &token) const {
  httplib::Client client("127.0.0.1", port_);
  return ToReply(client.Post(path, AuthHeaders(token), body, "application/json"));
}

std::string ServiceHarness::RegisterAndLogin(const std::string &name,
                                             const std::string &passphrase) {
  const Reply registered = Post("/api/experts", {{"name", name}, {"passphrase", passphrase}});
  if (registered.status != 201) throw std::runtime_error("register failed: " + registered.body);
  const Reply session = Post("/api/sessions", {{"name", name}, {"passphrase", passphrase}});
  if (session.status != 201) throw std::runtime_error("login failed: " + session.body);
  return session.json.at("token").get<std::string>();
}

}  // namespace uzannot::testing
