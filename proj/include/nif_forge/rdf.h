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


#ifndef NIF_FORGE_RDF_H_
#define NIF_FORGE_RDF_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nif_forge/nif.h"

namespace nif_forge {

enum class RdfFormat { kNTriples, kTurtle };

// Malformed input. line() is 1-based, or 0 when no single line is to blame.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SerializeOptions {
  // Adds forge:enriched "true"^^xsd:boolean to every enriched link.
  bool mark_enriched = false;
};

// Triples of one document in emission order: subjects ascending (byte
// order); per subject the predicates follow the fixed order
//   rdf:type, nif:beginIndex, nif:endIndex, nif:anchorOf, nif:isString,
//   nif:sourceUrl, nif:predLang, nif:firstSection, nif:lastSection,
//   nif:hasSection, nif:firstParagraph, nif:lastParagraph,
//   nif:hasParagraph, nif:nextSection, nif:nextParagraph,
//   nif:referenceContext, nif:superString, forge:hasTitle,
//   itsrdf:taIdentRef, forge:enriched
// followed by the document's extra triples in sorted order. Multi-valued
// predicates keep document order.
std::vector<Triple> ToTriples(const NifDocument &doc,
                              const SerializeOptions &options = {});

// Writes one document (Turtle output includes the prefix header). Returns
// the number of triples. Throws std::ios_base::failure if the sink fails.
std::size_t Serialize(const NifDocument &doc, RdfFormat format,
                      std::ostream &out, const SerializeOptions &options = {});

// Writes documents ordered by context URI. Turtle output has one header;
// the ex: prefix is bound to the first document's language.
std::size_t SerializeCorpus(const std::vector<NifDocument> &docs,
                            RdfFormat format, std::ostream &out,
                            const SerializeOptions &options = {});

// Building blocks for writers that merge per-document shards.
std::string TurtleHeader(std::string_view language);
std::size_t WriteDocumentBody(const NifDocument &doc, RdfFormat format,
                              std::ostream &out,
                              const SerializeOptions &options,
                              std::string_view turtle_language);

// N-Triples term and statement syntax.
std::string EscapeLiteral(std::string_view text);
std::string EscapeIri(std::string_view iri);
std::string FormatNTriple(const Triple &triple);

struct ParsedTriple {
  Triple triple;
  std::size_t line = 0;
};

// Parses one N-Triples line. Returns false for blank and comment lines.
// Throws ParseError (with |line_no|) on a syntax error.
bool ParseNTriplesLine(std::string_view line, std::size_t line_no,
                       ParsedTriple *out);

// Line-oriented N-Triples reader.
class NTriplesReader {
 public:
  explicit NTriplesReader(std::istream &in) : in_(in) {}

  // Reads the next triple. Returns false at end of input. A malformed line
  // throws ParseError unless |errors| is given, in which case the error is
  // appended and reading resumes at the next line. Bytes that are not UTF-8
  // are dropped and counted in dropped_sequences().
  bool Next(ParsedTriple *out, std::vector<ParseError> *errors = nullptr);

  std::size_t line() const { return line_; }
  std::size_t dropped_sequences() const { return dropped_; }
  // Lines that had bytes dropped.
  const std::vector<std::size_t> &lines_with_dropped_bytes() const {
    return dropped_lines_;
  }

 private:
  std::istream &in_;
  std::size_t line_ = 0;
  std::size_t dropped_ = 0;
  std::vector<std::size_t> dropped_lines_;
};

// Something in a document's triples that the model cannot express exactly:
// orphaned units, membership triples that disagree with nif:superString,
// or members missing from their container's membership list.
struct AssemblyIssue {
  std::string subject;
  std::string detail;
  std::size_t line = 0;
  bool fatal = false;  // the unit could not be attached and was dropped
};

// Builds one document from triples that share a document prefix.
// Membership comes from nif:superString; children are ordered by offset.
// Stored chain pointers (first/last/next) are kept as read. Triples outside
// the modeled vocabulary land in |extra|. Throws ParseError when there is
// no single context, an offset is not a non-negative integer, or a required
// field is missing.
NifDocument AssembleDocument(const std::vector<ParsedTriple> &triples,
                             std::vector<AssemblyIssue> *issues = nullptr);

// Parses a corpus. Documents come back ordered by context URI. Throws
// ParseError on syntax errors, on triples outside any document and on
// units that cannot be attached to their document.
std::vector<NifDocument> Parse(std::istream &in);
std::vector<NifDocument> ParseString(std::string_view text);

// Streams documents in input order with memory bounded by one document.
// Each document's triples must be contiguous, as Serialize() writes them.
// Same errors as Parse(), plus ParseError for a document whose triples are
// split across the input.
void ForEachDocument(std::istream &in,
                     const std::function<void(NifDocument &&)> &fn);

}  // namespace nif_forge

#endif  // NIF_FORGE_RDF_H_
