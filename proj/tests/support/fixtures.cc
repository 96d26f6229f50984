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


#include "support/fixtures.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nif_forge/builder.h"
#include "nif_forge/pipeline.h"
#include "nif_forge/unicode.h"

namespace nif_forge::testing {

namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kWords = {
    "the",    "of",     "and",   "in",      "river",   "city",   "was",
    "a",      "Berliner", "Berlin2", "Zürich", "naïve", "Straße", "北京",
    "𝄞",      "München", "East",  "West",    "Berlin",  "art",    "Ölberg",
    "x",      "1990",   "East-Berlin", "rivers", "Zürichsee", "city-state"};

const std::vector<std::string> kAnchors = {
    "Berlin",  "East Berlin", "Zürich",  "北京",       "naïve art",
    "river",   "𝄞",           "Straße",  "city of Berlin", "West Berlin",
    "art",     "East"};

const std::vector<std::string> kTitles = {
    "History",  "Geography",  "See also", "SEE ALSO",     "  references ",
    "External links", "Notes", "Early life", "Straße", "Bibliography",
    "Culture"};

std::size_t Pick(std::mt19937_64 &rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool Chance(std::mt19937_64 &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

std::string TargetFor(const std::string &anchor, bool alternate) {
  std::string name = anchor;
  std::replace(name.begin(), name.end(), ' ', '_');
  return "http://dbpedia.org/resource/" + NormalizeArticleName(name) +
         (alternate ? "_(disambiguation)" : "");
}

}  // namespace

fs::path TestDataDir() { return NIF_FORGE_TEST_DATA; }
fs::path SourceDir() { return NIF_FORGE_SOURCE_DIR; }

std::string ReadTestFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path MakeTempDir(const std::string &prefix) {
  static std::mt19937_64 rng(std::random_device{}());
  for (;;) {
    fs::path dir = fs::temp_directory_path() /
                   (prefix + "-" + std::to_string(rng() % 100000000));
    if (fs::create_directories(dir)) return dir;
  }
}

ArticleMeta TestMeta(std::string title, std::string language) {
  ArticleMeta meta;
  meta.title = std::move(title);
  meta.language = std::move(language);
  meta.corpus_version = "2016-10";
  meta.source_url = "https://" + meta.language + ".wikipedia.org/wiki/" + meta.title;
  return meta;
}

std::vector<std::string> GoldenNames() {
  std::vector<std::string> names;
  for (const auto &entry : fs::directory_iterator(TestDataDir() / "golden")) {
    if (entry.path().extension() == ".html") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

NifDocument ExtractGolden(const std::string &name) {
  const fs::path path = TestDataDir() / "golden" / (name + ".html");
  JobConfig config;
  const CleaningProfile profile = LoadJobProfile(config);
  return ExtractArticle(ReadTestFile(path), MetaForFile(path, "en", "2016-10"),
                        profile);
}

NifDocument RandomDocument(std::mt19937_64 &rng, const RandomDocOptions &options) {
  ArticleMeta meta = TestMeta("Random_" + std::to_string(rng() % 1000000));
  DocumentBuilder builder(meta);

  const std::size_t total_words =
      std::uniform_int_distribution<std::size_t>(10, options.max_words)(rng);
  const std::size_t section_count = 1 + Pick(rng, 5);
  std::size_t words_left = total_words;
  std::size_t links_left = Pick(rng, options.max_links + 1);
  std::vector<std::string> first_target_used;

  for (std::size_t s = 0; s < section_count && words_left > 0; ++s) {
    if (s > 0 || Chance(rng, 0.5)) {
      builder.OpenSection(2 + static_cast<int>(Pick(rng, 3)),
                          kTitles[Pick(rng, kTitles.size())]);
    }
    const std::size_t paragraphs = 1 + Pick(rng, 3);
    for (std::size_t p = 0; p < paragraphs && words_left > 0; ++p) {
      const std::size_t budget = std::min<std::size_t>(
          words_left, 1 + Pick(rng, total_words / (section_count * 2) + 2));
      std::string text;
      std::size_t length = 0;
      std::vector<LinkSpec> links;
      std::size_t used = 0;
      auto append = [&](const std::string &piece) {
        text += piece;
        length += CodePointLength(piece);
      };
      while (used < budget) {
        if (!text.empty()) append(Chance(rng, 0.1) ? "(" : " ");
        if (Chance(rng, 0.2)) {
          const std::string &anchor = kAnchors[Pick(rng, kAnchors.size())];
          const std::size_t words = CountTokens(anchor);
          if (links_left > 0 && Chance(rng, 0.5)) {
            LinkSpec link;
            link.begin = length;
            append(anchor);
            link.end = length;
            link.target = TargetFor(anchor, Chance(rng, 0.3));
            if (options.random_provenance && Chance(rng, 0.2)) {
              link.provenance = Provenance::kEnriched;
            }
            links.push_back(std::move(link));
            --links_left;
          } else {
            append(anchor);
          }
          used += words;
        } else {
          append(kWords[Pick(rng, kWords.size())]);
          ++used;
        }
        if (Chance(rng, 0.15)) append(std::string(1, ",.;)"[Pick(rng, 4)]));
      }
      words_left -= std::min(words_left, used);
      builder.AddParagraph(text, links);
    }
  }
  return builder.Finish();
}

std::string SyntheticArticleHtml(std::mt19937_64 &rng, std::size_t bytes) {
  std::string html = "<html><body><div id=\"content\">\n";
  std::size_t section = 0;
  while (html.size() < bytes) {
    if (section > 0 || Chance(rng, 0.5)) {
      const std::string &title = kTitles[Pick(rng, kTitles.size())];
      html += "<h2>" + title + "<span class=\"mw-editsection\">[edit]</span></h2>\n";
    }
    ++section;
    for (std::size_t p = 1 + Pick(rng, 3); p > 0 && html.size() < bytes; --p) {
      html += "<p>";
      for (std::size_t w = 20 + Pick(rng, 40); w > 0; --w) {
        if (Chance(rng, 0.08)) {
          const std::string &anchor = kAnchors[Pick(rng, kAnchors.size())];
          std::string name = anchor;
          std::replace(name.begin(), name.end(), ' ', '_');
          html += "<a href=\"/wiki/" + name + "\">" + anchor + "</a>";
        } else if (Chance(rng, 0.1)) {
          html += kAnchors[Pick(rng, kAnchors.size())];
        } else {
          html += kWords[Pick(rng, kWords.size())];
        }
        if (Chance(rng, 0.03)) {
          html += "<sup class=\"reference\"><a href=\"#cite_note-1\">[1]</a></sup>";
        }
        html += w > 1 ? (Chance(rng, 0.1) ? "\n  " : " ") : "";
      }
      html += ".</p>\n";
    }
  }
  html += "</div></body></html>\n";
  return html;
}

NifDocument TwoSectionDocument() {
  DocumentBuilder builder(TestMeta("Two_sections"));
  builder.OpenSection(2, "First section");
  builder.AddParagraph("Alpha alpha link and beta.",
                       {{6, 16, "http://dbpedia.org/resource/Alpha"},
                        {21, 25, "https://example.org/beta"}});
  builder.AddParagraph("Gamma starts this one.",
                       {{0, 5, "http://dbpedia.org/resource/Gamma"}});
  builder.OpenSection(2, "Second section");
  builder.AddParagraph("Ends with delta",
                       {{10, 15, "http://dbpedia.org/resource/Delta_(letter)"}});
  return builder.Finish();
}

}  // namespace nif_forge::testing
