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

#include "uzannot/credentials.h"

#include <sodium.h>

#include <vector>

#include "uzannot/errors.h"

namespace uzannot {

namespace {

void EnsureSodium() {
  static const int status = sodium_init();
  if (status < 0) throw Error("libsodium failed to initialize");
}

}  // namespace

Argon2Hasher::Argon2Hasher(unsigned long long ops_limit, size_t mem_limit)
    : ops_limit_(ops_limit), mem_limit_(mem_limit) {
  EnsureSodium();
}

Argon2Hasher Argon2Hasher::Interactive() {
  return Argon2Hasher(crypto_pwhash_OPSLIMIT_INTERACTIVE, crypto_pwhash_MEMLIMIT_INTERACTIVE);
}

Argon2Hasher Argon2Hasher::Minimal() {
  return Argon2Hasher(crypto_pwhash_OPSLIMIT_MIN, crypto_pwhash_MEMLIMIT_MIN);
}

std::string Argon2Hasher::Hash(std::string_view passphrase) const {
  char out[crypto_pwhash_STRBYTES];
  if (crypto_pwhash_str(out, passphrase.data(), passphrase.size(), ops_limit_, mem_limit_) != 0) {
    throw Error("passphrase hashing failed (out of memory)");
  }
  return out;
}

bool Argon2Hasher::Verify(std::string_view hash, std::string_view passphrase) const {
  const std::string terminated(hash);
  return crypto_pwhash_str_verify(terminated.c_str(), passphrase.data(), passphrase.size()) == 0;
}

std::string RandomHex(size_t bytes) {
  EnsureSodium();
  std::vector<unsigned char> raw(bytes);
  randombytes_buf(raw.data(), raw.size());
  std::string hex(bytes * 2 + 1, '\0');
  sodium_bin2hex(hex.data(), hex.size(), raw.data(), raw.size());
  hex.pop_back();
  return hex;
}

}  // namespace uzannot
