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


// nif-forge: converts rendered Wikipedia articles into NIF corpora,
// enriches their links and checks the result.
//
//   nif-forge extract  --lang en --input html/ --output corpus.nt
//   nif-forge enrich   --input corpus.nt --output enriched.nt
//   nif-forge validate enriched.nt
//   nif-forge stats    enriched.nt
//   nif-forge fetch    --endpoint http://localhost:8080/render --input html/ Berlin

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nif_forge/pipeline.h"

namespace {

void AddJobOptions(CLI::App *cmd, nif_forge::JobConfig *config,
                   std::vector<std::string> *inputs, std::string *format) {
  cmd->add_option("--lang", config->language, "Wiki language code")
      ->capture_default_str();
  cmd->add_option("--dbpv", config->corpus_version, "Corpus version tag")
      ->capture_default_str();
  cmd->add_option("--profile", config->profile_path,
                  "Cleaning profile file or directory");
  cmd->add_option("-i,--input", *inputs, "Input files or directories");
  cmd->add_option("-o,--output", config->output, "Output file (default: stdout)");
  cmd->add_option("--format", *format, "Output format")
      ->check(CLI::IsMember({"nt", "ttl"}))
      ->capture_default_str();
  cmd->add_option("-j,--workers", config->workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--mark-enriched", config->mark_enriched,
                "Tag enriched links with a provenance triple");
}

void FinishJob(nif_forge::JobConfig *config, const std::vector<std::string> &inputs,
               const std::vector<std::string> &positional,
               const std::string &format) {
  for (const std::string &in : inputs) config->inputs.emplace_back(in);
  for (const std::string &in : positional) config->inputs.emplace_back(in);
  config->format = format == "ttl" ? nif_forge::RdfFormat::kTurtle
                                   : nif_forge::RdfFormat::kNTriples;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Wikipedia HTML to NIF corpus tool"};
  app.require_subcommand(1);

  nif_forge::JobConfig config;
  std::vector<std::string> inputs, positional;
  std::string format = "nt";

  CLI::App *extract = app.add_subcommand("extract", "HTML articles to NIF");
  AddJobOptions(extract, &config, &inputs, &format);
  extract->add_option("articles", positional, "Input files or directories");

  CLI::App *enrich = app.add_subcommand("enrich", "Add links to unlinked anchors");
  AddJobOptions(enrich, &config, &inputs, &format);
  enrich->add_option("corpus", positional, "N-Triples corpus");

  std::string validate_path;
  bool text_report = false;
  int validate_workers = 1;
  CLI::App *validate = app.add_subcommand("validate", "Check a corpus");
  validate->add_option("corpus", validate_path, "N-Triples corpus")->required();
  validate->add_flag("--text", text_report, "Human-readable report");
  validate->add_option("-j,--workers", validate_workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string stats_path, kappa_path;
  std::string stats_lang = "en";
  CLI::App *stats = app.add_subcommand("stats", "Corpus statistics (TSV)");
  stats->add_option("corpus", stats_path, "N-Triples corpus");
  stats->add_option("--lang", stats_lang, "Language label for the table");
  stats->add_option("--kappa", kappa_path,
                    "Fleiss' kappa of a judgment CSV (item,count1,...)");

  std::vector<std::string> titles;
  std::string titles_file;
  std::string endpoint;
  CLI::App *fetch = app.add_subcommand("fetch", "Download rendered articles");
  AddJobOptions(fetch, &config, &inputs, &format);
  fetch->add_option("--endpoint", endpoint, "Render endpoint URL")->required();
  fetch->add_option("--rate", config.fetch_rate, "Requests per second")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fetch->add_option("--titles-file", titles_file, "File with one title per line");
  fetch->add_option("titles", titles, "Article titles");

  CLI11_PARSE(app, argc, argv);

  if (extract->parsed()) {
    FinishJob(&config, inputs, positional, format);
    return nif_forge::RunExtract(config, std::cout, std::cerr);
  }
  if (enrich->parsed()) {
    FinishJob(&config, inputs, positional, format);
    return nif_forge::RunEnrich(config, std::cout, std::cerr);
  }
  if (validate->parsed()) {
    return nif_forge::RunValidate(validate_path, !text_report, validate_workers,
                                  std::cout, std::cerr);
  }
  if (stats->parsed()) {
    if (!kappa_path.empty()) {
      return nif_forge::RunKappa(kappa_path, std::cout, std::cerr);
    }
    if (stats_path.empty()) {
      std::cerr << "stats: a corpus or --kappa is required\n";
      return 2;
    }
    return nif_forge::RunStats(stats_path, stats_lang, std::cout, std::cerr);
  }
  if (fetch->parsed()) {
    FinishJob(&config, inputs, positional, format);
    config.fetch_endpoint = endpoint;
    if (!titles_file.empty()) {
      std::ifstream in(titles_file);
      if (!in) {
        std::cerr << "error: cannot read " << titles_file << '\n';
        return 2;
      }
      for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) titles.push_back(line);
      }
    }
    return nif_forge::RunFetch(titles, config, std::cerr);
  }
  return 2;
}
