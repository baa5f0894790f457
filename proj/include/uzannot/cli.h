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

#ifndef UZANNOT_CLI_H_
#define UZANNOT_CLI_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace uzannot::cli {

// Stable exit codes for scripted use.
enum ExitCode : int {
  kExitOk = 0,
  kExitFindings = 1,  // validation findings or malformed corpus lines
  kExitFailure = 2,   // I/O failure, unreadable or unparseable file, locked store
};

enum class CorpusFormat { kTxt, kXml };

// Picks the format from |flag| ("txt"/"xml") or else the file extension.
CorpusFormat ResolveFormat(const std::optional<std::string> &flag,
                           const std::filesystem::path &path);

struct Streams {
  std::ostream &out;
  std::ostream &err;
};

int Ingest(const std::filesystem::path &data_dir, const std::filesystem::path &input,
           const std::string &category, Streams io);

// Writes the confirmed corpus to |out_path| ("-" for stdout).
int Export(const std::filesystem::path &data_dir, CorpusFormat format,
           const std::string &out_path, Streams io);

// Prints each finding as line:item:severity:rule: message. Lines without a header
// are validated as syntactic when every code is a syntactic tag, otherwise
// as morphological. For XML input "line" is the 1-based sentence number.
int Validate(const std::filesystem::path &corpus, const std::optional<std::string> &tagset,
             CorpusFormat format, Streams io);

// Statistics of a corpus file.
int CorpusStats(const std::filesystem::path &corpus, CorpusFormat format, Streams io);

// Statistics of the store.
int StoreStats(const std::filesystem::path &data_dir, Streams io);

int ReleaseStale(const std::filesystem::path &data_dir, long long age_seconds, Streams io);

}  // namespace uzannot::cli

#endif  // UZANNOT_CLI_H_
