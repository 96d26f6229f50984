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

#ifndef NIF_FORGE_ENRICHER_H_
#define NIF_FORGE_ENRICHER_H_

#include <string>
#include <vector>

#include "nif_forge/nif.h"

namespace nif_forge {

struct AnchorEntry {
  std::string anchor;
  std::string target;
  std::size_t length = 0;  // code points

  bool operator==(const AnchorEntry &) const = default;
};

// Anchors of one article, longest first; equal lengths keep the order of
// first occurrence. Each anchor appears once, with the target of its first
// occurrence.
using AnchorDictionary = std::vector<AnchorEntry>;

struct EnrichmentReport {
  std::size_t links_before = 0;
  std::size_t unique_anchors = 0;
  std::size_t links_after = 0;
  double percent_new = 0.0;
  // Boundary-aligned, non-overlapping matches that fell inside excluded
  // sections.
  std::size_t per_section_skipped = 0;

  // Sums counts; percent_new is recomputed from the totals.
  EnrichmentReport &operator+=(const EnrichmentReport &other);
};

struct EnrichOptions {
  std::vector<std::string> excluded_sections;  // default list when empty
};

AnchorDictionary CollectAnchors(const NifDocument &doc);

// True iff the section's trimmed title matches an excluded title
// case-insensitively, or an enclosing section of |doc| is excluded. The
// untitled lead section is never excluded. An empty |excluded_titles| means
// the default list.
bool IsExcludedSection(const NifDocument &doc, const NifSection &section,
                       const std::vector<std::string> &excluded_titles = {});

struct EnrichResult {
  NifDocument document;
  EnrichmentReport report;
};

// Links unlinked re-occurrences of the article's anchors. Matching is exact
// and case-sensitive; a match must be bounded by non-letter/non-digit code
// points (or the paragraph edge), lie inside one paragraph of a
// non-excluded section and overlap no existing or newly added link.
// Longer anchors are placed first; among equally long anchors the earlier
// position wins. Existing links are untouched.
EnrichResult Enrich(const NifDocument &doc, const EnrichOptions &options = {});

}  // namespace nif_forge

#endif  // NIF_FORGE_ENRICHER_H_
