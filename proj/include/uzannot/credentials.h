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

#ifndef UZANNOT_CREDENTIALS_H_
#define UZANNOT_CREDENTIALS_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace uzannot {

// Turns passphrases into self-describing salted hashes and checks them.
class PassphraseHasher {
 public:
  virtual ~PassphraseHasher() = default;
  virtual std::string Hash(std::string_view passphrase) const = 0;
  virtual bool Verify(std::string_view hash, std::string_view passphrase) const = 0;
};

// Argon2id through libsodium's crypto_pwhash_str. The encoded hash carries
// its own salt and cost parameters, so stores stay readable when the costs
// change.
class Argon2Hasher : public PassphraseHasher {
 public:
  Argon2Hasher(unsigned long long ops_limit, size_t mem_limit);

  // libsodium's interactive costs; the service default.
  static Argon2Hasher Interactive();
  // The smallest permitted costs, for tests.
  static Argon2Hasher Minimal();

  std::string Hash(std::string_view passphrase) const override;
  bool Verify(std::string_view hash, std::string_view passphrase) const override;

 private:
  unsigned long long ops_limit_;
  size_t mem_limit_;
};

// |bytes| bytes from the system CSPRNG, hex encoded.
std::string RandomHex(size_t bytes);

}  // namespace uzannot

#endif  // UZANNOT_CREDENTIALS_H_
