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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nif_forge/builder.h"
#include "nif_forge/enricher.h"
#include "nif_forge/nif.h"
#include "nif_forge/pipeline.h"
#include "nif_forge/rdf.h"
#include "nif_forge/stats.h"
#include "nif_forge/unicode.h"
#include "nif_forge/validator.h"
#include "support/fixtures.h"
#include "support/oracle.h"

namespace nif_forge {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failure notes for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string &what) {
    if (!ok && notes_.size() < 5) notes_.push_back(what);
    if (!ok) ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  std::string Notes() const {
    std::string s;
    for (const std::string &n : notes_) s += "; " + n;
    if (failures_ > notes_.size()) {
      s += "; (" + std::to_string(failures_ - notes_.size()) + " more)";
    }
    return s;
  }

 private:
  std::vector<std::string> notes_;
  std::size_t failures_ = 0;
};

std::string Report(const Check &c, const std::string &summary) {
  return summary + c.Notes();
}

// 1. Enricher against the brute-force greedy oracle.
bool OracleEquivalence(std::string *detail) {
  Check c;
  std::mt19937_64 rng(20161001);
  testing::RandomDocOptions options;
  options.max_words = 300;
  options.max_links = 8;
  std::vector<NifDocument> docs;
  for (int i = 0; i < 200; ++i) docs.push_back(testing::RandomDocument(rng, options));

  const auto start = Clock::now();
  std::vector<EnrichResult> results;
  for (const NifDocument &d : docs) results.push_back(Enrich(d));
  const double elapsed = Seconds(start);

  std::size_t compared = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const testing::OracleResult oracle = testing::BruteForceEnrich(docs[i]);
    std::vector<testing::OracleLink> expected = testing::LinkSet(docs[i]);
    expected.insert(expected.end(), oracle.added.begin(), oracle.added.end());
    std::sort(expected.begin(), expected.end());
    const std::vector<testing::OracleLink> actual = testing::LinkSet(results[i].document);
    c.Expect(actual == expected, "document " + std::to_string(i) + " differs");
    c.Expect(results[i].report.per_section_skipped == oracle.skipped,
             "document " + std::to_string(i) + " skipped count differs");
    compared += oracle.added.size();
  }
  c.Expect(elapsed < 10.0, "enrichment took " + std::to_string(elapsed) + " s");
  *detail = Report(c, "200 documents, " + std::to_string(compared) +
                          " added links compared, " + std::to_string(elapsed) +
                          " s");
  return c.ok();
}

// 2. "East Berlin" shadows the inner "Berlin".
bool EastBerlin(std::string *detail) {
  Check c;
  DocumentBuilder b(testing::TestMeta("Berlin_Wall"));
  const std::string text =
      "Berlin was divided after the war. East Berlin was the capital of the "
      "GDR. Many people fled from East Berlin to the west.";
  const std::size_t first_east = CodePointLength(text.substr(0, text.find("East Berlin")));
  b.AddParagraph(text, {{0, 6, "http://dbpedia.org/resource/Berlin"},
                        {first_east, first_east + 11,
                         "http://dbpedia.org/resource/East_Berlin"}});
  const NifDocument doc = b.Finish();
  const EnrichResult r = Enrich(doc);
  const std::size_t later = CodePointLength(text.substr(0, text.rfind("East Berlin")));

  std::vector<const LinkAnnotation *> added;
  ForEachSection(r.document.context, [&](const NifSection &s) {
    for (const auto &p : s.paragraphs) {
      for (const auto &l : p.links) {
        if (l.provenance == Provenance::kEnriched) added.push_back(&l);
      }
    }
  });
  c.Expect(added.size() == 1, std::to_string(added.size()) + " links added");
  if (!added.empty()) {
    const LinkAnnotation &l = *added.front();
    c.Expect(l.begin == later && l.end == later + 11 && l.anchor == "East Berlin" &&
                 l.target == "http://dbpedia.org/resource/East_Berlin",
             "added link is " + l.anchor + " " + std::to_string(l.begin) + "," +
                 std::to_string(l.end));
  }
  for (const LinkAnnotation *l : added) {
    c.Expect(!(l->begin == later + 5 && l->end == later + 11),
             "inner Berlin linked");
  }
  *detail = Report(c, "later East Berlin at " + std::to_string(later) + "," +
                          std::to_string(later + 11) + ", inner Berlin unlinked");
  return c.ok();
}

// 3. percent_new on reference before/after counts.
bool TableArithmetic(std::string *detail) {
  Check c;
  struct Row {
    const char *language;
    std::uint64_t before, after;
    double want, tolerance;
  };
  const Row rows[] = {
      {"French", 55347176, 74843900, 35.23, 0.0},
      {"Cebuano", 24878067, 26222416, 5.40, 0.0},
      {"German", 50116852, 63347163, 26.39, 0.01},
      {"Total", 432720520, 542965191, 25.48, 0.0},
      // Asserted from the counts, not a rounded label.
      {"English", 127227173, 168988631, 32.82, 0.0},
  };
  std::string got;
  for (const Row &row : rows) {
    const double v = PercentNew(row.before, row.after);
    got += std::string(" ") + row.language + "=" + FormatFixed2(v);
    c.Expect(std::fabs(v - row.want) <= row.tolerance + 1e-9,
             std::string(row.language) + " gives " + FormatFixed2(v));
  }
  *detail = Report(c, got.substr(1));
  return c.ok();
}

// 4. Offsets of the golden fixtures.
bool OffsetContract(std::string *detail) {
  Check c;
  std::size_t spans = 0, links = 0;
  bool siberia = false;
  for (const std::string &name : testing::GoldenNames()) {
    const NifDocument doc = testing::ExtractGolden(name);
    for (const Violation &v : CheckOffsets(doc)) {
      c.Expect(false, name + ": " + v.rule + " " + v.subject + " " + v.detail);
    }
    const std::u32string text = DecodeUtf8(doc.context.text);
    ForEachSection(doc.context, [&](const NifSection &s) {
      if (s.title) {
        ++spans;
        c.Expect(EncodeUtf8(std::u32string_view(text).substr(
                     s.title->begin, s.title->end - s.title->begin)) == s.title->text,
                 name + ": title " + s.title->uri);
      }
      for (const NifParagraph &p : s.paragraphs) {
        ++spans;
        c.Expect(p.begin <= p.end && p.end <= text.size(), name + ": " + p.uri);
        for (const LinkAnnotation &l : p.links) {
          ++spans;
          ++links;
          c.Expect(l.end - l.begin == CodePointLength(l.anchor),
                   name + ": length of " + l.uri);
          c.Expect(l.end <= text.size() &&
                       EncodeUtf8(std::u32string_view(text).substr(
                           l.begin, l.end - l.begin)) == l.anchor,
                   name + ": anchorOf of " + l.uri);
          if (name == "United_States" && l.begin == 7913 && l.end == 7920 &&
              l.anchor == "Siberia" &&
              l.uri == "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&char=7913,7920") {
            siberia = true;
          }
        }
      }
    });
  }
  c.Expect(testing::GoldenNames().size() == 10, "golden set is not 10 articles");
  c.Expect(siberia, "no (7913, 7920, Siberia) link in United_States");
  *detail = Report(c, std::to_string(testing::GoldenNames().size()) + " articles, " +
                          std::to_string(spans) + " spans, " +
                          std::to_string(links) + " links, Siberia 7913,7920 " +
                          (siberia ? "found" : "missing"));
  return c.ok();
}

constexpr std::string_view kNif = "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#";

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string Join(const std::vector<std::string> &lines) {
  std::string out;
  for (const std::string &l : lines) out += l + "\n";
  return out;
}

Triple ParseOne(const std::string &line) {
  ParsedTriple t;
  ParseNTriplesLine(line, 1, &t);
  return t.triple;
}

bool Is(const Triple &t, std::string_view local) {
  return t.predicate.size() == kNif.size() + local.size() &&
         t.predicate.compare(0, kNif.size(), kNif) == 0 &&
         t.predicate.compare(kNif.size(), std::string::npos, local) == 0;
}

enum class Mutation { kOffset, kAnchor, kChain };

// Applies one mutation of |kind| to the N-Triples |lines|. Returns false if
// the corpus offers no site for it.
bool Mutate(std::vector<std::string> *lines, Mutation kind, std::mt19937_64 &rng,
            std::string *what) {
  std::vector<std::size_t> sites;
  std::vector<Triple> triples;
  for (const std::string &l : *lines) triples.push_back(ParseOne(l));
  switch (kind) {
    case Mutation::kOffset: {
      for (std::size_t i = 0; i < triples.size(); ++i) {
        if (Is(triples[i], "beginIndex") || Is(triples[i], "endIndex")) sites.push_back(i);
      }
      if (sites.empty()) return false;
      const std::size_t i = sites[rng() % sites.size()];
      Triple t = triples[i];
      const long long v = std::stoll(t.object.value);
      const long long nv = (v == 0 || rng() % 2 == 0) ? v + 1 : v - 1;
      t.object.value = std::to_string(nv);
      (*lines)[i] = FormatNTriple(t);
      *what = "offset " + std::to_string(v) + "->" + std::to_string(nv);
      return true;
    }
    case Mutation::kAnchor: {
      for (std::size_t i = 0; i < triples.size(); ++i) {
        if (Is(triples[i], "anchorOf") && !triples[i].object.value.empty()) sites.push_back(i);
      }
      if (sites.empty()) return false;
      const std::size_t i = sites[rng() % sites.size()];
      Triple t = triples[i];
      std::u32string anchor = DecodeUtf8(t.object.value);
      const std::size_t pos = rng() % anchor.size();
      anchor[pos] = anchor[pos] == U'Q' ? U'Z' : U'Q';
      t.object.value = EncodeUtf8(anchor);
      (*lines)[i] = FormatNTriple(t);
      *what = "anchor character at " + std::to_string(pos);
      return true;
    }
    case Mutation::kChain: {
      // Pairs of chain pointers in one document with different objects.
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      const char *relations[] = {"nextParagraph", "nextSection"};
      for (const char *rel : relations) {
        for (std::size_t i = 0; i < triples.size(); ++i) {
          if (!Is(triples[i], rel)) continue;
          for (std::size_t j = i + 1; j < triples.size(); ++j) {
            if (Is(triples[j], rel) &&
                triples[j].object.value != triples[i].object.value &&
                DocumentPrefix(triples[i].subject) == DocumentPrefix(triples[j].subject)) {
              pairs.emplace_back(i, j);
            }
          }
        }
      }
      // first/last swaps on one container.
      for (std::size_t i = 0; i < triples.size(); ++i) {
        for (const auto &[first, last] :
             {std::pair{"firstParagraph", "lastParagraph"},
              std::pair{"firstSection", "lastSection"}}) {
          if (!Is(triples[i], first)) continue;
          for (std::size_t j = 0; j < triples.size(); ++j) {
            if (Is(triples[j], last) && triples[j].subject == triples[i].subject &&
                triples[j].object.value != triples[i].object.value) {
              pairs.emplace_back(i, j);
            }
          }
        }
      }
      if (pairs.empty()) return false;
      const auto [i, j] = pairs[rng() % pairs.size()];
      Triple a = triples[i], b = triples[j];
      std::swap(a.object, b.object);
      (*lines)[i] = FormatNTriple(a);
      (*lines)[j] = FormatNTriple(b);
      *what = "chain swap " + a.predicate.substr(kNif.size()) + "/" +
              b.predicate.substr(kNif.size());
      return true;
    }
  }
  return false;
}

// 5. Every injected mutation is flagged; twins stay clean.
bool MutationDetection(std::string *detail) {
  Check c;
  std::mt19937_64 rng(7);
  std::size_t detected = 0, clean = 0, by_kind[3] = {0, 0, 0};
  std::size_t corpora = 0;
  while (corpora < 200) {
    std::vector<NifDocument> docs;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
      NifDocument d = testing::RandomDocument(rng);
      docs.push_back(Enrich(d).document);
    }
    SerializeOptions options;
    options.mark_enriched = true;
    std::ostringstream out;
    SerializeCorpus(docs, RdfFormat::kNTriples, out, options);
    const std::vector<std::string> twin = Lines(out.str());
    std::vector<std::string> mutated = twin;
    const auto kind = static_cast<Mutation>(corpora % 3);
    std::string what;
    if (!Mutate(&mutated, kind, rng, &what)) continue;  // no site: redraw
    ++corpora;
    ++by_kind[static_cast<int>(kind)];

    std::istringstream twin_in(Join(twin));
    const ValidationReport twin_report = ValidateStream(twin_in, 2);
    if (twin_report.ok()) {
      ++clean;
    } else {
      c.Expect(false, "false positive " + twin_report.violations.front().rule + " " +
                          twin_report.violations.front().detail);
    }
    std::istringstream mutated_in(Join(mutated));
    const ValidationReport report = ValidateStream(mutated_in, 2);
    if (!report.ok()) {
      ++detected;
    } else {
      c.Expect(false, "undetected " + what);
    }
  }
  *detail = Report(c, std::to_string(detected) + "/200 detected (offset " +
                          std::to_string(by_kind[0]) + ", anchor " +
                          std::to_string(by_kind[1]) + ", chain " +
                          std::to_string(by_kind[2]) + "), " +
                          std::to_string(clean) + "/200 twins clean");
  return c.ok();
}

// 6. Round-trip and byte determinism.
bool RoundTrip(std::string *detail) {
  Check c;
  std::mt19937_64 rng(99);
  SerializeOptions marked;
  marked.mark_enriched = true;
  std::vector<NifDocument> docs;
  for (int i = 0; i < 100; ++i) {
    testing::RandomDocOptions options;
    options.random_provenance = i % 2 == 0;
    NifDocument d = testing::RandomDocument(rng, options);
    if (i % 4 == 0) d = Enrich(d).document;
    docs.push_back(d);

    // Provenance only survives when it is written; unmarked output is
    // checked on documents whose links are all original.
    const bool all_original = [&] {
      bool ok = true;
      ForEachSection(d.context, [&](const NifSection &s) {
        for (const auto &p : s.paragraphs)
          for (const auto &l : p.links) ok = ok && l.provenance == Provenance::kOriginal;
      });
      return ok;
    }();
    for (const SerializeOptions &opts : {marked, SerializeOptions{}}) {
      if (!opts.mark_enriched && !all_original) continue;
      std::ostringstream out;
      Serialize(d, RdfFormat::kNTriples, out, opts);
      const std::vector<NifDocument> back = ParseString(out.str());
      c.Expect(back.size() == 1 && back.front() == d,
               "document " + std::to_string(i) + " does not round-trip" +
                   (opts.mark_enriched ? " (marked)" : ""));
    }
  }
  std::string runs[3];
  for (std::string &run : runs) {
    std::ostringstream out;
    SerializeCorpus(docs, RdfFormat::kNTriples, out, marked);
    run = out.str();
  }
  c.Expect(runs[0] == runs[1] && runs[1] == runs[2], "serialization differs across runs");
  for (RdfFormat format : {RdfFormat::kNTriples, RdfFormat::kTurtle}) {
    std::ostringstream one, eight;
    WriteCorpus(docs, format, one, marked, 1);
    WriteCorpus(docs, format, eight, marked, 8);
    c.Expect(one.str() == eight.str(), "workers 1 and 8 differ");
    if (format == RdfFormat::kNTriples) c.Expect(one.str() == runs[0], "WriteCorpus differs");
  }
  *detail = Report(c, "100 documents round-trip, 3 runs and workers 1/8 byte-identical (" +
                          std::to_string(runs[0].size()) + " bytes)");
  return c.ok();
}

// 7. Minted URIs equal the reference strings.
bool UriScheme(std::string *detail) {
  Check c;
  const DocumentKey key{"en", "United_States", "2016-10"};
  const std::string context = MintUri(key, UnitKind::kContext);
  const std::string paragraph = MintUri(key, UnitKind::kParagraph, 7860, 8740);
  const std::string link = MintUri(key, UnitKind::kLink, 7913, 7920);
  c.Expect(context == "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&nif=context",
           context);
  c.Expect(paragraph ==
               "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&nif=paragraph&char=7860,8740",
           paragraph);
  c.Expect(link == "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&char=7913,7920",
           link);
  // The golden article emits the same strings.
  const NifDocument us = testing::ExtractGolden("United_States");
  bool found = false;
  ForEachSection(us.context, [&](const NifSection &s) {
    for (const auto &p : s.paragraphs) found = found || p.uri == paragraph;
  });
  c.Expect(us.context.uri == context, "golden context URI " + us.context.uri);
  c.Expect(found, "golden paragraph URI missing");
  *detail = Report(c, context + " | " + paragraph);
  return c.ok();
}

// 8. Fleiss' kappa.
bool Kappa(std::string *detail) {
  Check c;
  const double unanimous = FleissKappa({{{3, 0}, {0, 3}, {3, 0}}});
  const double unanimous3 = FleissKappa({{{0, 4, 0}, {4, 0, 0}, {0, 0, 4}}});
  const JudgmentMatrix hand{{{2, 1}, {1, 2}, {3, 0}, {0, 3}}};
  const double third = FleissKappa(hand);
  c.Expect(unanimous == 1.0 && unanimous3 == 1.0, "unanimous matrix is not 1.0");
  c.Expect(std::fabs(third - 1.0 / 3.0) <= 1e-9, "hand matrix gives " + std::to_string(third));

  std::mt19937_64 rng(50);
  double worst = 0;
  for (int round = 0; round < 50; ++round) {
    JudgmentMatrix m;
    const std::size_t items = 3 + rng() % 15, cats = 2 + rng() % 4, raters = 2 + rng() % 6;
    for (std::size_t i = 0; i < items; ++i) {
      std::vector<std::uint64_t> row(cats, 0);
      for (std::size_t r = 0; r < raters; ++r) row[rng() % cats]++;
      m.rows.push_back(row);
    }
    double base;
    try {
      base = FleissKappa(m);
    } catch (const StatsError &) {
      --round;  // single-category draw; redraw
      continue;
    }
    JudgmentMatrix s = m;
    std::shuffle(s.rows.begin(), s.rows.end(), rng);
    std::vector<std::size_t> perm(cats);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto &row : s.rows) {
      std::vector<std::uint64_t> p(cats);
      for (std::size_t k = 0; k < cats; ++k) p[perm[k]] = row[k];
      row = p;
    }
    worst = std::max(worst, std::fabs(FleissKappa(s) - base));
  }
  c.Expect(worst <= 1e-12, "shuffle changes kappa by " + std::to_string(worst));
  std::ostringstream os;
  os.precision(12);
  os << "unanimous=1.0, hand=" << third << ", 50 shuffles max diff " << worst;
  *detail = Report(c, os.str());
  return c.ok();
}

// 9. extract + enrich + validate on 1000 synthetic articles.
bool Throughput(std::string *detail) {
  Check c;
  std::mt19937_64 rng(2016);
  std::vector<std::string> pages;
  std::size_t bytes = 0;
  for (int i = 0; i < 1000; ++i) {
    pages.push_back(testing::SyntheticArticleHtml(rng, 2048));
    bytes += pages.back().size();
  }
  const int workers = static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
  const auto start = Clock::now();
  const CleaningProfile profile = LoadJobProfile(JobConfig{});
  std::vector<NifDocument> docs(pages.size());
  ParallelFor(pages.size(), workers, [&](std::size_t i) {
    docs[i] = Enrich(ExtractArticle(pages[i], testing::TestMeta("Synthetic_" + std::to_string(i)),
                                    profile))
                  .document;
  });
  std::ostringstream out;
  SerializeOptions options;
  options.mark_enriched = true;
  WriteCorpus(docs, RdfFormat::kNTriples, out, options, workers);
  std::istringstream in(out.str());
  const ValidationReport report = ValidateStream(in, workers);
  const double elapsed = Seconds(start);
  c.Expect(report.ok(), std::to_string(report.violations.size()) + " violations");
  c.Expect(report.documents == 1000, std::to_string(report.documents) + " documents validated");
  c.Expect(elapsed < 120.0, "took " + std::to_string(elapsed) + " s");
  *detail = Report(c, "1000 articles, mean " + std::to_string(bytes / 1000) + " bytes, " +
                          std::to_string(report.checked_triples) + " triples, " +
                          std::to_string(elapsed) + " s on " + std::to_string(workers) +
                          " worker(s)");
  return c.ok();
}

}  // namespace
}  // namespace nif_forge

int main() {
  struct Criterion {
    const char *name;
    std::function<bool(std::string *)> run;
  };
  const Criterion criteria[] = {
      {"1 enrichment oracle equivalence", nif_forge::OracleEquivalence},
      {"2 East Berlin shadows Berlin", nif_forge::EastBerlin},
      {"3 percent_new table arithmetic", nif_forge::TableArithmetic},
      {"4 offset contract on golden set", nif_forge::OffsetContract},
      {"5 mutation detection", nif_forge::MutationDetection},
      {"6 round-trip and determinism", nif_forge::RoundTrip},
      {"7 URI scheme bit-exactness", nif_forge::UriScheme},
      {"8 Fleiss kappa", nif_forge::Kappa},
      {"9 throughput", nif_forge::Throughput},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(&detail);
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << ": " << detail << std::endl;
    if (!ok) ++failed;
  }
  std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
