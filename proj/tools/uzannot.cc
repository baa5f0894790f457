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

// Command line front end for the annotation store and corpus files.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uzannot/cli.h"
#include "uzannot/errors.h"

namespace {

std::string DefaultDataDir() {
  const char *env = std::getenv("UZANNOT_DATA");
  return env != nullptr && *env != '\0' ? env : "uzannot-data";
}

}  // namespace

int main(int argc, char **argv) {
  using namespace uzannot::cli;

  CLI::App app{"uzannot: Uzbek corpus annotation tools"};
  app.require_subcommand(1);
  std::string data_dir = DefaultDataDir();
  app.add_option("--data", data_dir, "store directory (default $UZANNOT_DATA or ./uzannot-data)");

  std::string ingest_file;
  std::string category;
  auto *ingest = app.add_subcommand("ingest", "split, transliterate and store a raw text");
  ingest->add_option("file", ingest_file, "UTF-8 text file")->required();
  ingest->add_option("--category", category, "text category, e.g. news")->required();

  std::optional<std::string> format;
  std::string out_path = "-";
  auto *exp = app.add_subcommand("export", "write confirmed annotations");
  exp->add_option("--format", format, "txt or xml")->check(CLI::IsMember({"txt", "xml"}));
  exp->add_option("-o,--output", out_path, "output file, - for stdout");

  std::string corpus;
  std::optional<std::string> tagset;
  auto *validate = app.add_subcommand("validate", "check an annotated corpus file");
  validate->add_option("file", corpus, "corpus file (.txt or .xml)")->required();
  validate->add_option("--tagset", tagset, "tagset TSV; defaults to $UZANNOT_TAGSET or the seed");
  validate->add_option("--format", format, "txt or xml")->check(CLI::IsMember({"txt", "xml"}));

  std::optional<std::string> stats_file;
  auto *stats = app.add_subcommand("stats", "counts for a corpus file, or the store if none given");
  stats->add_option("file", stats_file, "corpus file");
  stats->add_option("--format", format, "txt or xml")->check(CLI::IsMember({"txt", "xml"}));

  long long age = 0;
  auto *release = app.add_subcommand("release-stale", "reopen pending assignments older than --age");
  release->add_option("--age", age, "age in seconds")->required();

  CLI11_PARSE(app, argc, argv);

  Streams io{std::cout, std::cerr};
  try {
    if (ingest->parsed()) return Ingest(data_dir, ingest_file, category, io);
    if (exp->parsed()) return Export(data_dir, ResolveFormat(format, out_path), out_path, io);
    if (validate->parsed()) {
      if (!tagset) {
        const char *env = std::getenv("UZANNOT_TAGSET");
        if (env != nullptr && *env != '\0') tagset = env;
      }
      return Validate(corpus, tagset, ResolveFormat(format, corpus), io);
    }
    if (stats->parsed()) {
      if (stats_file) return CorpusStats(*stats_file, ResolveFormat(format, *stats_file), io);
      return StoreStats(data_dir, io);
    }
    if (release->parsed()) return ReleaseStale(data_dir, age, io);
  } catch (const uzannot::Error &e) {
    std::cerr << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
