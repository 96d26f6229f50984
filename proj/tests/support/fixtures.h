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


#ifndef NIF_FORGE_TESTS_SUPPORT_FIXTURES_H_
#define NIF_FORGE_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "nif_forge/nif.h"

namespace nif_forge::testing {

std::filesystem::path TestDataDir();
std::filesystem::path SourceDir();

std::string ReadTestFile(const std::filesystem::path &path);

// A fresh empty directory under the system temp dir.
std::filesystem::path MakeTempDir(const std::string &prefix);

ArticleMeta TestMeta(std::string title = "Test_article",
                     std::string language = "en");

// Extracts tests/data/golden/{name}.html with the built-in profile.
NifDocument ExtractGolden(const std::string &name);
std::vector<std::string> GoldenNames();

struct RandomDocOptions {
  std::size_t max_words = 300;
  std::size_t max_links = 8;
  // Mark some links as enriched, to exercise provenance handling.
  bool random_provenance = true;
};

// A random article over a small vocabulary that is dense in boundary traps
// ("Berlin" inside "East Berlin", "Berliner", "Berlin2"), non-ASCII and
// astral code points, and section titles that are excluded by default.
NifDocument RandomDocument(std::mt19937_64 &rng,
                           const RandomDocOptions &options = {});

// Roughly |bytes| of article HTML with headings, paragraphs and links.
std::string SyntheticArticleHtml(std::mt19937_64 &rng, std::size_t bytes);

// The structure fixture: two sections, three paragraphs, four
// links, built directly (not through HTML).
NifDocument TwoSectionDocument();

}  // namespace nif_forge::testing

#endif  // NIF_FORGE_TESTS_SUPPORT_FIXTURES_H_
