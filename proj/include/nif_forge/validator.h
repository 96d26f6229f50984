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


#ifndef NIF_FORGE_VALIDATOR_H_
#define NIF_FORGE_VALIDATOR_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nif_forge/nif.h"
#include "nif_forge/unicode.h"

namespace nif_forge {

// Stable rule identifiers.
namespace rules {
inline constexpr std::string_view kSubstring = "OFF-01";     // stored text != context slice
inline constexpr std::string_view kBounds = "OFF-02";        // begin > end, end > length
inline constexpr std::string_view kUriSpan = "OFF-03";       // char= disagrees with indices
inline constexpr std::string_view kChain = "STR-01";         // first/last/next pointers
inline constexpr std::string_view kContainment = "STR-02";   // child escapes parent
inline constexpr std::string_view kLinkClass = "STR-03";     // Word vs Phrase
inline constexpr std::string_view kReference = "STR-04";     // referenceContext
inline constexpr std::string_view kOverlap = "STR-05";       // overlapping siblings
inline constexpr std::string_view kSyntax = "SYN-01";
inline constexpr std::string_view kEncoding = "UNI-01";
}  // namespace rules

struct Violation {
  std::string rule;
  std::string subject;
  std::string detail;
  std::size_t line = 0;  // 0 when not tied to an input line

  bool operator==(const Violation &) const = default;
  std::strong_ordering operator<=>(const Violation &) const = default;
};

struct ValidationReport {
  std::size_t checked_triples = 0;
  std::size_t documents = 0;
  std::size_t dropped_codepoints = 0;  // ill-formed UTF-8 sequences
  std::vector<Violation> violations;   // sorted

  bool ok() const { return violations.empty(); }
};

// Drops ill-formed UTF-8; see SanitizeUtf8().
inline SanitizedText SanitizeUnicode(std::string_view bytes) {
  return SanitizeUtf8(bytes);
}

// At most one violation per span, the first of OFF-02, OFF-01, OFF-03 that
// applies. Sections and paragraphs carry no text of their own, so only
// their bounds and URIs are checked.
std::vector<Violation> CheckOffsets(const NifDocument &doc);

// STR-01 to STR-05.
std::vector<Violation> CheckStructure(const NifDocument &doc);

// Parses N-Triples from |in| and validates every document. Documents are
// the contiguous runs of triples sharing a document prefix, so memory use
// is bounded by the largest document. Syntax errors are reported and
// skipped. |workers| documents are checked concurrently.
ValidationReport ValidateStream(std::istream &in, int workers = 1);

// Throws std::runtime_error if |path| cannot be read.
ValidationReport ValidateCorpus(const std::filesystem::path &path,
                                int workers = 1);

// One JSON object per violation.
void WriteReportJsonLines(std::ostream &out, const ValidationReport &report);
// One line per violation and a summary line.
void WriteReportText(std::ostream &out, const ValidationReport &report);

}  // namespace nif_forge

#endif  // NIF_FORGE_VALIDATOR_H_
