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

#ifndef NIF_FORGE_BUILDER_H_
#define NIF_FORGE_BUILDER_H_

#include <string>
#include <string_view>
#include <vector>

#include "nif_forge/nif.h"

namespace nif_forge {

// A link inside a paragraph, in code points relative to the paragraph text.
struct LinkSpec {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string target;
  Provenance provenance = Provenance::kOriginal;
};

// Accumulates an article block by block and lays out the context string:
// every title and every paragraph is followed by one "\n" that belongs to
// no title or paragraph span. A section spans from its first block to the
// separator after its last block (including subsections), so section spans
// never coincide with link spans.
//
// Heading levels: 2 opens a top-level section, deeper levels nest under the
// nearest shallower open section. Paragraphs before any heading go to an
// untitled lead section, which any heading closes.
class DocumentBuilder {
 public:
  // Throws NifError if the title or corpus version is empty.
  explicit DocumentBuilder(ArticleMeta meta);

  void OpenSection(int level, std::string_view title);

  // Empty text is ignored. Throws NifError if links are out of bounds,
  // unordered, overlapping or empty.
  void AddParagraph(std::string_view text, const std::vector<LinkSpec> &links);

  NifDocument Finish();

 private:
  struct Open {
    int level;
    NifSection *section;
  };

  void Append(std::string_view text);
  void ExtendOpenSections();
  NifSection *Push(int level);

  ArticleMeta meta_;
  NifDocument doc_;
  std::size_t length_ = 0;  // code points in doc_.context.text
  std::vector<Open> open_;
};

}  // namespace nif_forge

#endif  // NIF_FORGE_BUILDER_H_
