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


#include "nif_forge/stats.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "nif_forge/enricher.h"

namespace nif_forge {

void SummaryAccumulator::Add(const NifDocument &doc) {
  AddCounts(CountParagraphs(doc), CountLinks(doc));
}

void SummaryAccumulator::AddCounts(std::size_t paragraphs, std::size_t links) {
  paragraphs_ += paragraphs;
  links_ += links;
  per_article_links_.push_back(links);
}

void SummaryAccumulator::Merge(const SummaryAccumulator &other) {
  paragraphs_ += other.paragraphs_;
  links_ += other.links_;
  per_article_links_.insert(per_article_links_.end(),
                            other.per_article_links_.begin(),
                            other.per_article_links_.end());
}

CorpusSummary SummaryAccumulator::Finish() const {
  CorpusSummary s;
  s.articles = per_article_links_.size();
  s.paragraphs = paragraphs_;
  s.links = links_;
  if (s.articles > 0) {
    s.mean_links_per_article =
        static_cast<double>(links_) / static_cast<double>(s.articles);
  }
  s.median_links_per_article = Median(per_article_links_);
  return s;
}

CorpusSummary Summarize(const std::vector<NifDocument> &docs) {
  SummaryAccumulator acc;
  for (const NifDocument &doc : docs) acc.Add(doc);
  return acc.Finish();
}

double Median(std::vector<std::size_t> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = static_cast<double>(values[mid]);
  if (values.size() % 2 == 1) return upper;
  const double lower = static_cast<double>(
      *std::max_element(values.begin(), values.begin() + mid));
  return (lower + upper) / 2.0;
}

double PercentNew(std::uint64_t before, std::uint64_t after) {
  if (after < before) {
    throw StatsError("after (" + std::to_string(after) +
                     ") is smaller than before (" + std::to_string(before) +
                     ")");
  }
  if (before == 0) return 0.0;
  // hundredths = floor(10000 * delta / before + 1/2)
  using u128 = unsigned __int128;
  const u128 num = u128{20000} * (after - before) + before;
  const u128 den = u128{2} * before;
  const auto hundredths = static_cast<std::uint64_t>(num / den);
  return static_cast<double>(hundredths) / 100.0;
}

double FleissKappa(const JudgmentMatrix &m) {
  const std::size_t items = m.rows.size();
  if (items < 2) throw StatsError("need at least 2 items");
  const std::size_t categories = m.rows[0].size();
  if (categories < 2) throw StatsError("need at least 2 categories");
  std::uint64_t n = 0;
  for (std::uint64_t c : m.rows[0]) n += c;
  if (n < 2) throw StatsError("need at least 2 raters per item");

  std::vector<double> column(categories, 0.0);
  double p_bar = 0.0;
  for (std::size_t i = 0; i < items; ++i) {
    const auto &row = m.rows[i];
    if (row.size() != categories) {
      throw StatsError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " categories, expected " +
                       std::to_string(categories));
    }
    std::uint64_t sum = 0, pairs = 0;
    for (std::size_t j = 0; j < categories; ++j) {
      sum += row[j];
      pairs += row[j] * (row[j] - (row[j] > 0 ? 1 : 0));
      column[j] += static_cast<double>(row[j]);
    }
    if (sum != n) {
      throw StatsError("row " + std::to_string(i + 1) + " sums to " +
                       std::to_string(sum) + ", expected " + std::to_string(n));
    }
    p_bar += static_cast<double>(pairs) / static_cast<double>(n * (n - 1));
  }
  p_bar /= static_cast<double>(items);
  const double total = static_cast<double>(items * n);
  double p_e = 0.0;
  for (double c : column) p_e += (c / total) * (c / total);
  if (p_e >= 1.0) return 1.0;  // every rating in one category
  return (p_bar - p_e) / (1.0 - p_e);
}

namespace {

std::vector<std::string> SplitCsv(const std::string &line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool ParseCount(std::string_view s, std::uint64_t *out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

JudgmentMatrix ReadJudgmentCsv(std::istream &in) {
  JudgmentMatrix m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = SplitCsv(line);
    if (fields.size() < 2) {
      throw StatsError("line " + std::to_string(line_no) + ": no counts");
    }
    std::vector<std::uint64_t> row;
    bool numeric = true;
    for (std::size_t i = 1; i < fields.size() && numeric; ++i) {
      std::uint64_t v;
      numeric = ParseCount(fields[i], &v);
      row.push_back(v);
    }
    if (!numeric) {
      if (m.rows.empty() && line_no == 1) continue;  // header
      throw StatsError("line " + std::to_string(line_no) +
                       ": counts must be non-negative integers");
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::string FormatFixed2(double value) {
  const auto hundredths = static_cast<long long>(std::floor(value * 100.0 + 0.5));
  std::string frac = std::to_string(std::llabs(hundredths) % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (hundredths < 0 ? "-" : "") + std::to_string(std::llabs(hundredths) / 100) +
         "." + frac;
}

void WriteSummaryTsv(std::ostream &out, std::string_view language,
                     const CorpusSummary &s) {
  out << "Language\tArticles\tParagraphs\tLinks\tMean per article\t"
         "Median per article\n";
  out << language << '\t' << s.articles << '\t' << s.paragraphs << '\t'
      << s.links << '\t' << FormatFixed2(s.mean_links_per_article) << '\t'
      << FormatFixed2(s.median_links_per_article) << '\n';
}

void WriteEnrichmentTsv(std::ostream &out, std::string_view language,
                        const EnrichmentReport &r) {
  out << "Language\tAnnotations before enrichment\tUnique annotations\t"
         "Annotations after enrichment\t% of new annotations\n";
  out << language << '\t' << r.links_before << '\t' << r.unique_anchors << '\t'
      << r.links_after << '\t' << FormatFixed2(r.percent_new) << '\n';
}

}  // namespace nif_forge
