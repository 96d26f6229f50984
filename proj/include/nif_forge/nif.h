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

#ifndef NIF_FORGE_NIF_H_
#define NIF_FORGE_NIF_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nif_forge {

class NifError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Namespaces of the emitted vocabulary.
namespace ns {
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kItsRdf = "http://www.w3.org/2005/11/its/rdf#";
inline constexpr std::string_view kNif =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#";
// Tool vocabulary: section titles and enrichment provenance.
inline constexpr std::string_view kForge = "https://w3id.org/nif-forge/ns#";
inline constexpr std::string_view kWikiBase = "http://nif.dbpedia.org/wiki/";
inline constexpr std::string_view kLexvo = "http://lexvo.org/id/iso639-3/";
}  // namespace ns

// Per-article inputs to extraction.
struct ArticleMeta {
  std::string title;  // URI-path-safe form, e.g. "United_States"
  std::string language;
  std::string corpus_version;  // e.g. "2016-10"
  std::string source_url;
  std::optional<std::string> revision;
  std::string predominant_language;  // lexvo URI; derived when empty

  bool operator==(const ArticleMeta &) const = default;
};

// The (language, article, version) triple every minted URI is based on.
struct DocumentKey {
  std::string language;
  std::string name;
  std::string version;

  bool operator==(const DocumentKey &) const = default;

  static DocumentKey FromMeta(const ArticleMeta &meta) {
    return {meta.language, meta.title, meta.corpus_version};
  }
};

enum class UnitKind { kContext, kSection, kParagraph, kTitle, kLink };

enum class LinkKind { kWord, kPhrase };
enum class Provenance { kOriginal, kEnriched };

// An RDF term. Literals carry an optional datatype IRI or language tag.
struct Term {
  enum class Type { kIri, kBlank, kLiteral };
  Type type = Type::kIri;
  std::string value;
  std::string datatype;
  std::string language;

  static Term Iri(std::string v) { return {Type::kIri, std::move(v), {}, {}}; }
  static Term Literal(std::string v, std::string datatype = {}) {
    return {Type::kLiteral, std::move(v), std::move(datatype), {}};
  }

  bool operator==(const Term &) const = default;
  auto operator<=>(const Term &) const = default;
};

struct Triple {
  std::string subject;  // IRI, or "_:label" for a blank node
  std::string predicate;
  Term object;

  bool operator==(const Triple &) const = default;
  auto operator<=>(const Triple &) const = default;
};

struct LinkAnnotation {
  std::string uri;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string anchor;
  std::string target;
  LinkKind kind = LinkKind::kWord;
  Provenance provenance = Provenance::kOriginal;
  std::string paragraph;          // nif:superString
  std::string reference_context;  // nif:referenceContext

  bool operator==(const LinkAnnotation &) const = default;
};

struct TitleSpan {
  std::string uri;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;
  std::string section;  // nif:superString
  std::string reference_context;

  bool operator==(const TitleSpan &) const = default;
};

struct NifParagraph {
  std::string uri;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<LinkAnnotation> links;  // sorted by begin
  std::optional<std::string> next_paragraph;
  std::string section;  // nif:superString
  std::string reference_context;

  bool operator==(const NifParagraph &) const = default;
};

struct NifSection {
  std::string uri;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::optional<TitleSpan> title;
  std::vector<NifParagraph> paragraphs;
  std::vector<NifSection> subsections;
  std::optional<std::string> first_paragraph;
  std::optional<std::string> last_paragraph;
  std::optional<std::string> first_section;  // of subsections
  std::optional<std::string> last_section;
  std::optional<std::string> next_section;
  std::string parent;  // context URI, or the enclosing section's URI
  std::string reference_context;

  bool operator==(const NifSection &) const = default;
};

struct NifContext {
  std::string uri;
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;  // code point length of text
  std::string source_url;
  std::string predominant_language;
  std::optional<std::string> first_section;
  std::optional<std::string> last_section;
  std::vector<NifSection> sections;

  bool operator==(const NifContext &) const = default;
};

// One article. |loose_links| are links read from a corpus without an
// enclosing paragraph (the extractor never produces them). |extra| holds
// triples outside the modeled vocabulary; they survive a parse/serialize
// round-trip unchanged.
struct NifDocument {
  DocumentKey key;
  NifContext context;
  std::vector<LinkAnnotation> loose_links;  // sorted by begin
  std::vector<Triple> extra;

  bool operator==(const NifDocument &) const = default;
};

// Mints the public identifier of one unit:
//   Context   base?dbpv={v}&nif=context
//   Section   base?dbpv={v}&char={begin},{end}
//   Link      base?dbpv={v}&char={begin},{end}
//   Paragraph base?dbpv={v}&nif=paragraph&char={begin},{end}
//   Title     base?dbpv={v}&nif=title&char={begin},{end}
// with base = http://nif.dbpedia.org/wiki/{lang}/{name}. The offsets are
// ignored for the context. Throws NifError if begin > end or the language,
// name or version is empty.
std::string MintUri(const DocumentKey &key, UnitKind unit,
                    std::size_t begin = 0, std::size_t end = 0);
inline std::string MintUri(const ArticleMeta &meta, UnitKind unit,
                           std::size_t begin = 0, std::size_t end = 0) {
  return MintUri(DocumentKey::FromMeta(meta), unit, begin, end);
}

// Inverse of MintUri for the context URI. Returns nullopt when |uri| is not
// a context URI of this scheme.
std::optional<DocumentKey> ParseContextUri(std::string_view uri);

// The document part of any minted URI (base?dbpv={v}); used to group
// triples per article.
std::string_view DocumentPrefix(std::string_view uri);

// Span encoded in a minted URI's char= parameter, if any.
std::optional<std::pair<std::size_t, std::size_t>> SpanFromUri(
    std::string_view uri);

// Word iff the anchor is exactly one whitespace-delimited token (any Unicode
// whitespace). Throws NifError on an empty anchor.
LinkKind ClassifyLink(std::string_view anchor);

// Article name in URI-path-safe form: spaces become underscores, characters
// outside the IRI-safe set are percent-encoded, existing escapes are
// normalized to upper-case hex.
std::string NormalizeArticleName(std::string_view name);

// lexvo ISO 639-3 URI for a wiki language code ("en" -> .../eng).
std::string PredominantLanguageUri(std::string_view language);

std::string_view ToString(UnitKind kind);
std::string_view ToString(LinkKind kind);

// Visits sections depth-first in document order.
void ForEachSection(const NifContext &context,
                    const std::function<void(const NifSection &)> &fn);
void ForEachSection(NifContext &context,
                    const std::function<void(NifSection &)> &fn);

// Total number of link annotations.
std::size_t CountLinks(const NifDocument &doc);
std::size_t CountParagraphs(const NifDocument &doc);

// Re-mints every URI and cross reference (chains, parents, reference
// contexts) from |doc|'s structure and spans.
void RebuildReferences(NifDocument *doc);

}  // namespace nif_forge

#endif  // NIF_FORGE_NIF_H_
