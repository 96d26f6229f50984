// Copyright 2026 The NIF Forge Authors.
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


#ifndef NIF_FORGE_PIPELINE_H_
#define NIF_FORGE_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nif_forge/enricher.h"
#include "nif_forge/extractor.h"
#include "nif_forge/nif.h"
#include "nif_forge/profile.h"
#include "nif_forge/rdf.h"
#include "nif_forge/stats.h"

namespace nif_forge {

struct JobConfig {
  std::string language = "en";
  std::string corpus_version = "2016-10";
  std::filesystem::path profile_path;  // file or directory
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output;  // empty: standard output
  RdfFormat format = RdfFormat::kNTriples;
  int workers = 1;
  bool mark_enriched = false;
  std::optional<std::string> fetch_endpoint;
  double fetch_rate = 1.0;

  // Throws std::invalid_argument when an invariant does not hold.
  void Check() const;
};

// The profile compiled into the tool (same content as
// profiles/default.json).
std::string_view BuiltinProfileJson();

// Profile lookup: an explicit path (a JSON file, or a directory holding
// default.json and {lang}.json), else the directory named by
// NIF_FORGE_PROFILE_DIR, else the built-in profile.
CleaningProfile LoadJobProfile(const JobConfig &config);

// Metadata for an article stored as {dir}/{name}.html.
ArticleMeta MetaForFile(const std::filesystem::path &file,
                        std::string_view language, std::string_view version);

// Clean + Extract for one article.
NifDocument ExtractArticle(std::string_view html, const ArticleMeta &meta,
                           const CleaningProfile &profile,
                           ExtractionDiagnostics *diagnostics = nullptr);

// Expands directories to their *.html/*.htm files (sorted); files are kept.
std::vector<std::filesystem::path> CollectHtmlInputs(
    const std::vector<std::filesystem::path> &inputs);

// Runs fn(0..n-1) on |workers| threads.
void ParallelFor(std::size_t n, int workers,
                 const std::function<void(std::size_t)> &fn);

// Writes documents ordered by context URI. Shards are serialized in
// parallel and concatenated by one writer, so the bytes do not depend on
// |workers|.
std::size_t WriteCorpus(const std::vector<NifDocument> &docs, RdfFormat format,
                        std::ostream &out, const SerializeOptions &options,
                        int workers);

// Subcommands. Each returns the process exit status; data goes to |out|
// (or the configured output file), diagnostics to |log|.
int RunExtract(const JobConfig &config, std::ostream &out, std::ostream &log);
int RunEnrich(const JobConfig &config, std::ostream &out, std::ostream &log);
int RunValidate(const std::filesystem::path &path, bool json, int workers,
                std::ostream &out, std::ostream &log);
int RunStats(const std::filesystem::path &path, std::string_view language,
             std::ostream &out, std::ostream &log);
int RunKappa(const std::filesystem::path &csv, std::ostream &out,
             std::ostream &log);
int RunFetch(const std::vector<std::string> &titles, const JobConfig &config,
             std::ostream &log);

}  // namespace nif_forge

#endif  // NIF_FORGE_PIPELINE_H_
