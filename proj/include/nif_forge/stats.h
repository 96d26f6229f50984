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


#ifndef NIF_FORGE_STATS_H_
#define NIF_FORGE_STATS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nif_forge/nif.h"

namespace nif_forge {

class StatsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CorpusSummary {
  std::size_t articles = 0;
  std::size_t paragraphs = 0;
  std::size_t links = 0;
  double mean_links_per_article = 0.0;  // links / articles
  double median_links_per_article = 0.0;

  bool operator==(const CorpusSummary &) const = default;
};

// Collects per-article counts. Partial accumulators from different workers
// merge in any order to the same summary.
class SummaryAccumulator {
 public:
  void Add(const NifDocument &doc);
  void AddCounts(std::size_t paragraphs, std::size_t links);
  void Merge(const SummaryAccumulator &other);
  CorpusSummary Finish() const;

 private:
  std::size_t paragraphs_ = 0;
  std::size_t links_ = 0;
  std::vector<std::size_t> per_article_links_;
};

CorpusSummary Summarize(const std::vector<NifDocument> &docs);

// Median of a multiset; the mean of the two central values for even sizes
// and 0 for an empty one.
double Median(std::vector<std::size_t> values);

// 100 * (after - before) / before, rounded half-up to two decimals, computed
// in exact integer arithmetic. 0 when before == 0. Throws StatsError if
// after < before.
double PercentNew(std::uint64_t before, std::uint64_t after);

// Item-by-category rating counts for Fleiss' kappa.
struct JudgmentMatrix {
  std::vector<std::vector<std::uint64_t>> rows;
};

// Fleiss' kappa. Requires >= 2 items, >= 2 categories, the same rater count
// n >= 2 on every row. By convention the degenerate case where every item
// is unanimous and all fall in one category (chance agreement 1) yields
// exactly 1.0. Throws StatsError otherwise.
double FleissKappa(const JudgmentMatrix &m);

// Reads "item,count1,...,countK" lines. A first line whose count fields are
// not all integers is treated as a header. Throws StatsError.
JudgmentMatrix ReadJudgmentCsv(std::istream &in);

// Two-decimal rendering used by every table ("35.23").
std::string FormatFixed2(double value);

// TSV tables with fixed column names.
void WriteSummaryTsv(std::ostream &out, std::string_view language,
                     const CorpusSummary &summary);
struct EnrichmentReport;
void WriteEnrichmentTsv(std::ostream &out, std::string_view language,
                        const EnrichmentReport &report);

}  // namespace nif_forge

#endif  // NIF_FORGE_STATS_H_
