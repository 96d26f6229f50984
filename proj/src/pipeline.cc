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


#include "nif_forge/pipeline.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nif_forge/cleaner.h"
#include "nif_forge/fetch.h"
#include "nif_forge/validator.h"

namespace nif_forge {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kBuiltinProfile = R"json({
  "search": [
    "h1", "h2", "h3", "h4", "h5", "h6",
    "p"
  ],
  "remove": [
    "script", "style", "noscript",
    "table", "figure", "div.thumb", "div.navbox", "div.reflist",
    "div.hatnote", "div.toc", "#toc", ".mw-editsection", ".noprint",
    "sup.reference", "sup.noprint", "span.mw-cite-backlink",
    "ol.references", "#catlinks", "#siteSub", "#contentSub", "#jump-to-nav"
  ],
  "replace": [
    {"selector": "br", "replacement": " "}
  ]
})json";

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading " + path.string());
  return buf.str();
}

// Runs |fn| against the configured output file, or |fallback| when none is
// set. Returns false (after logging) on I/O failure.
bool WithOutput(const fs::path &output, std::ostream &fallback, std::ostream &log,
                const std::function<void(std::ostream &)> &fn) {
  if (output.empty()) {
    fn(fallback);
    fallback.flush();
    if (!fallback) {
      log << "error: cannot write to standard output\n";
      return false;
    }
    return true;
  }
  if (output.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(output.parent_path(), ec);
  }
  std::ofstream file(output, std::ios::binary | std::ios::trunc);
  if (!file) {
    log << "error: cannot open " << output.string() << " for writing\n";
    return false;
  }
  try {
    fn(file);
    file.close();
  } catch (const std::ios_base::failure &e) {
    log << "error: writing " << output.string() << ": " << e.what() << '\n';
    return false;
  }
  if (!file) {
    log << "error: writing " << output.string() << " failed\n";
    return false;
  }
  return true;
}

}  // namespace

void JobConfig::Check() const {
  if (workers < 1) throw std::invalid_argument("--workers must be at least 1");
  if (language.empty()) throw std::invalid_argument("--lang must not be empty");
  if (corpus_version.empty()) {
    throw std::invalid_argument("--dbpv must not be empty");
  }
  if (fetch_endpoint && !(fetch_rate > 0.0)) {
    throw std::invalid_argument("--rate must be positive");
  }
}

std::string_view BuiltinProfileJson() { return kBuiltinProfile; }

CleaningProfile LoadJobProfile(const JobConfig &config) {
  fs::path path = config.profile_path;
  if (path.empty()) {
    if (const char *dir = std::getenv("NIF_FORGE_PROFILE_DIR"); dir && *dir) {
      path = dir;
    }
  }
  if (path.empty()) {
    CleaningProfile profile = LoadProfile(kBuiltinProfile, "*");
    profile.language = config.language;
    return profile;
  }
  std::error_code ec;
  if (fs::is_directory(path, ec)) return ResolveProfile(path, config.language);
  if (!fs::exists(path, ec)) {
    throw ProfileError("profile not found: " + path.string());
  }
  return LoadProfileFile(path, config.language);
}

ArticleMeta MetaForFile(const fs::path &file, std::string_view language,
                        std::string_view version) {
  ArticleMeta meta;
  meta.title = NormalizeArticleName(file.stem().string());
  meta.language = std::string(language);
  meta.corpus_version = std::string(version);
  meta.source_url = "https://" + meta.language + ".wikipedia.org/wiki/" + meta.title;
  return meta;
}

NifDocument ExtractArticle(std::string_view html, const ArticleMeta &meta,
                           const CleaningProfile &profile,
                           ExtractionDiagnostics *diagnostics) {
  return Extract(Clean(html, profile, meta.source_url), meta, diagnostics);
}

std::vector<fs::path> CollectHtmlInputs(const std::vector<fs::path> &inputs) {
  std::vector<fs::path> files;
  for (const fs::path &input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto &entry : fs::directory_iterator(input)) {
        const std::string ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".html" || ext == ".htm")) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(input)) {
      files.push_back(input);
    } else {
      throw std::runtime_error("input not found: " + input.string());
    }
  }
  return files;
}

void ParallelFor(std::size_t n, int workers,
                 const std::function<void(std::size_t)> &fn) {
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= n || error) return;
          i = next++;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::size_t WriteCorpus(const std::vector<NifDocument> &docs, RdfFormat format,
                        std::ostream &out, const SerializeOptions &options,
                        int workers) {
  std::vector<const NifDocument *> order;
  for (const NifDocument &d : docs) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(),
                   [](const NifDocument *a, const NifDocument *b) {
                     return a->context.uri < b->context.uri;
                   });
  const std::string language = order.empty() ? "en" : order.front()->key.language;
  std::vector<std::string> shards(order.size());
  std::vector<std::size_t> counts(order.size());
  ParallelFor(order.size(), workers, [&](std::size_t i) {
    std::ostringstream shard;
    counts[i] = WriteDocumentBody(*order[i], format, shard, options, language);
    shards[i] = std::move(shard).str();
  });
  if (format == RdfFormat::kTurtle) out << TurtleHeader(language);
  std::size_t total = 0;
  for (std::size_t i = 0; i < shards.size(); ++i) {
    out << shards[i];
    total += counts[i];
  }
  if (!out) throw std::ios_base::failure("write to the RDF sink failed");
  return total;
}

int RunExtract(const JobConfig &config, std::ostream &out, std::ostream &log) {
  CleaningProfile profile;
  std::vector<fs::path> files;
  try {
    config.Check();
    profile = LoadJobProfile(config);
    files = CollectHtmlInputs(config.inputs);
  } catch (const ProfileError &e) {
    log << "profile error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    log << "error: " << e.what() << '\n';
    return 2;
  }
  if (files.empty()) log << "warning: no input articles\n";

  std::vector<std::optional<NifDocument>> results(files.size());
  std::vector<std::string> errors(files.size());
  ParallelFor(files.size(), config.workers, [&](std::size_t i) {
    try {
      const ArticleMeta meta =
          MetaForFile(files[i], config.language, config.corpus_version);
      results[i] = ExtractArticle(ReadFile(files[i]), meta, profile);
    } catch (const std::exception &e) {
      errors[i] = e.what();
    }
  });
  std::vector<NifDocument> docs;
  SummaryAccumulator summary;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!results[i]) {
      ++failures;
      log << "error: " << files[i].string() << ": " << errors[i] << '\n';
      continue;
    }
    summary.Add(*results[i]);
    docs.push_back(std::move(*results[i]));
  }
  SerializeOptions options;
  options.mark_enriched = config.mark_enriched;
  const bool written = WithOutput(config.output, out, log, [&](std::ostream &o) {
    WriteCorpus(docs, config.format, o, options, config.workers);
  });
  if (!written) return 1;
  std::ostream &table = config.output.empty() ? log : out;
  WriteSummaryTsv(table, config.language, summary.Finish());
  if (failures > 0) {
    log << failures << " of " << files.size() << " articles failed\n";
  }
  return (failures > 0 && failures == files.size()) ? 1 : 0;
}

int RunEnrich(const JobConfig &config, std::ostream &out, std::ostream &log) {
  EnrichOptions enrich_options;
  try {
    config.Check();
    if (config.inputs.size() != 1) {
      throw std::invalid_argument("enrich reads exactly one N-Triples corpus");
    }
    enrich_options.excluded_sections =
        LoadJobProfile(config).EffectiveExcludedSections();
  } catch (const ProfileError &e) {
    log << "profile error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    log << "error: " << e.what() << '\n';
    return 2;
  }
  std::ifstream in(config.inputs.front(), std::ios::binary);
  if (!in) {
    log << "error: cannot read " << config.inputs.front().string() << '\n';
    return 2;
  }
  SerializeOptions options;
  options.mark_enriched = config.mark_enriched;
  EnrichmentReport total;
  bool parse_failed = false;
  const bool written = WithOutput(config.output, out, log, [&](std::ostream &o) {
    if (config.format == RdfFormat::kTurtle) o << TurtleHeader(config.language);
    const std::size_t batch_size = 64 * static_cast<std::size_t>(config.workers);
    std::vector<NifDocument> batch;
    auto flush = [&] {
      std::vector<std::string> shards(batch.size());
      std::vector<EnrichmentReport> reports(batch.size());
      ParallelFor(batch.size(), config.workers, [&](std::size_t i) {
        EnrichResult r = Enrich(batch[i], enrich_options);
        reports[i] = r.report;
        std::ostringstream shard;
        WriteDocumentBody(r.document, config.format, shard, options,
                          config.language);
        shards[i] = std::move(shard).str();
      });
      for (std::size_t i = 0; i < batch.size(); ++i) {
        o << shards[i];
        total += reports[i];
      }
      batch.clear();
    };
    try {
      ForEachDocument(in, [&](NifDocument &&doc) {
        batch.push_back(std::move(doc));
        if (batch.size() >= batch_size) flush();
      });
      flush();
    } catch (const ParseError &e) {
      log << "parse error: " << e.what() << '\n';
      parse_failed = true;
    }
  });
  if (parse_failed || !written) return 1;
  std::ostream &table = config.output.empty() ? log : out;
  WriteEnrichmentTsv(table, config.language, total);
  return 0;
}

int RunValidate(const fs::path &path, bool json, int workers, std::ostream &out,
                std::ostream &log) {
  ValidationReport report;
  try {
    report = ValidateCorpus(path, workers);
  } catch (const std::exception &e) {
    log << "error: " << e.what() << '\n';
    return 2;
  }
  if (json) {
    WriteReportJsonLines(out, report);
    log << report.checked_triples << " triples in " << report.documents
        << " documents checked, " << report.violations.size()
        << " violations, " << report.dropped_codepoints
        << " ill-formed sequences dropped\n";
  } else {
    WriteReportText(out, report);
  }
  return report.ok() ? 0 : 1;
}

int RunStats(const fs::path &path, std::string_view language, std::ostream &out,
             std::ostream &log) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    log << "error: cannot read " << path.string() << '\n';
    return 2;
  }
  SummaryAccumulator summary;
  try {
    ForEachDocument(in, [&](NifDocument &&doc) { summary.Add(doc); });
  } catch (const ParseError &e) {
    log << "parse error: " << e.what() << '\n';
    return 1;
  }
  WriteSummaryTsv(out, language, summary.Finish());
  return 0;
}

int RunKappa(const fs::path &csv, std::ostream &out, std::ostream &log) {
  std::ifstream in(csv);
  if (!in) {
    log << "error: cannot read " << csv.string() << '\n';
    return 2;
  }
  try {
    const JudgmentMatrix m = ReadJudgmentCsv(in);
    const double kappa = FleissKappa(m);
    std::uint64_t raters = 0;
    for (std::uint64_t c : m.rows.front()) raters += c;
    out << "Items\tCategories\tRaters\tFleiss' kappa\n"
        << m.rows.size() << '\t' << m.rows.front().size() << '\t' << raters
        << '\t' << std::fixed << std::setprecision(4) << kappa << '\n';
  } catch (const StatsError &e) {
    log << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int RunFetch(const std::vector<std::string> &titles, const JobConfig &config,
             std::ostream &log) {
  try {
    config.Check();
    if (!config.fetch_endpoint) throw std::invalid_argument("--endpoint is required");
    if (titles.empty()) throw std::invalid_argument("no titles to fetch");
  } catch (const std::exception &e) {
    log << "error: " << e.what() << '\n';
    return 2;
  }
  const fs::path dir = !config.inputs.empty() ? config.inputs.front()
                       : !config.output.empty() ? config.output
                                                : fs::path(".");
  std::vector<FetchOutcome> outcomes;
  try {
    FetchOptions options;
    options.endpoint = *config.fetch_endpoint;
    options.rate = config.fetch_rate;
    FetchClient client(options);
    outcomes = client.FetchAll(titles, dir);
  } catch (const std::exception &e) {
    log << "error: " << e.what() << '\n';
    return 2;
  }
  std::size_t failed = 0;
  for (const FetchOutcome &o : outcomes) {
    if (o.ok) {
      log << "saved " << o.file.string() << '\n';
    } else {
      ++failed;
      log << "failed " << o.title << " after " << o.attempts
          << " attempt(s): " << o.error << '\n';
    }
  }
  log << outcomes.size() - failed << " of " << outcomes.size()
      << " titles fetched\n";
  return failed > 0 ? 1 : 0;
}

}  // namespace nif_forge
