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

#ifndef NIF_FORGE_EXTRACTOR_H_
#define NIF_FORGE_EXTRACTOR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nif_forge/cleaner.h"
#include "nif_forge/html/dom.h"
#include "nif_forge/nif.h"

namespace nif_forge {

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtractionDiagnostics {
  std::size_t empty_anchors = 0;   // <a> with no text
  std::size_t fragment_links = 0;  // same-page "#..." links
  std::size_t paragraphs = 0;
  std::size_t links = 0;
};

// DBpedia resource namespace for a wiki language:
// http://dbpedia.org/resource/ for English, http://{lang}.dbpedia.org/
// resource/ otherwise.
std::string ResourceNamespace(std::string_view language);

// Resolves an href against the article URL. Article links (/wiki/X,
// ./X, or absolute URLs to the same wiki host) become resource-namespace
// URIs with normalized percent-encoding; everything else is kept as the
// resolved URL with IRI-illegal characters escaped. Returns nullopt for
// fragment-only and empty hrefs.
std::optional<std::string> CanonicalLinkTarget(std::string_view href,
                                               std::string_view source_url,
                                               std::string_view language);

// Captures one anchor element whose text starts at |running_offset| in the
// context. The anchor text is the element's whitespace-collapsed text.
// Returns nullopt (and bumps |diagnostics| when given) for anchors with no
// text or a fragment-only href.
std::optional<LinkAnnotation> CaptureLink(
    const html::Node &anchor, std::size_t running_offset,
    std::string_view source_url, std::string_view language,
    ExtractionDiagnostics *diagnostics = nullptr);

// Walks a cleaned document and builds its NIF representation. Elements
// carrying the search marker are structure roots: h1-h6 open sections,
// anything else is a paragraph whose text (and <a> links) is accumulated.
// When the document carries no markers at all, h1-h6 and p are used.
//
// Text rules within a block: runs of HTML whitespace collapse to one space,
// leading and trailing whitespace is trimmed, text from replace rules is
// kept verbatim, script/style content is ignored.
//
// Throws ExtractionError when a heading root sits inside a paragraph root.
NifDocument Extract(const CleanedDocument &doc, const ArticleMeta &meta,
                    ExtractionDiagnostics *diagnostics = nullptr);

}  // namespace nif_forge

#endif  // NIF_FORGE_EXTRACTOR_H_
