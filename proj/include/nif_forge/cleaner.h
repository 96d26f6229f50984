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

#ifndef NIF_FORGE_CLEANER_H_
#define NIF_FORGE_CLEANER_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nif_forge/html/dom.h"
#include "nif_forge/profile.h"

namespace nif_forge {

class CleanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Attribute placed on every element matched by a search selector.
inline constexpr std::string_view kSearchMarker = "data-nif-search";

struct CleanedDocument {
  std::unique_ptr<html::Node> root;
  std::string source_url;
  std::string language;

  CleanedDocument Clone() const {
    return {root->Clone(), source_url, language};
  }
};

// Reduces rendered article HTML to corpus content:
//   1. remove: every element matched by a remove selector (matched against
//      the parsed tree, so selector order is irrelevant) is deleted with its
//      subtree;
//   2. replace: each remaining element matched by a replace selector is
//      swapped for a verbatim text node holding the replacement;
//   3. search: remaining elements matched by a search selector receive the
//      kSearchMarker attribute.
// Invalid UTF-8 in |html| is dropped before parsing. Throws CleanError on
// an empty input.
CleanedDocument Clean(std::string_view html, const CleaningProfile &profile,
                      std::string source_url = {});

}  // namespace nif_forge

#endif  // NIF_FORGE_CLEANER_H_
