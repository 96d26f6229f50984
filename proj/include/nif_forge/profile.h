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

#ifndef NIF_FORGE_PROFILE_H_
#define NIF_FORGE_PROFILE_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nif_forge/html/selector.h"

namespace nif_forge {

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReplaceRule {
  html::Selector selector;
  std::string replacement;
};

// Section titles in which enrichment never places new links.
std::vector<std::string> DefaultExcludedSections();

// Selector sets that drive HTML cleansing. Immutable once loaded; safe to
// share between threads.
//
// JSON schema:
//   {"search": [css], "remove": [css],
//    "replace": [{"selector": css, "replacement": text}],
//    "enrichment_excluded_sections": [title]}
// All keys are optional; any other key is rejected.
struct CleaningProfile {
  std::string language = "*";
  std::vector<html::Selector> search;
  std::vector<html::Selector> remove;
  std::vector<ReplaceRule> replace;
  // Unset means "use DefaultExcludedSections()".
  std::optional<std::vector<std::string>> excluded_sections;

  std::vector<std::string> EffectiveExcludedSections() const;

  // Appends |language_profile|'s entries after this (wildcard) profile's.
  CleaningProfile MergedWith(const CleaningProfile &language_profile) const;
};

// Parses a profile from JSON text. Throws ProfileError on malformed JSON,
// unknown keys, invalid selectors (the message names the selector) and
// replace entries without a replacement.
CleaningProfile LoadProfile(std::string_view json_text,
                            std::string_view language = "*");

CleaningProfile LoadProfileFile(const std::filesystem::path &path,
                                std::string_view language = "*");

// Builds the effective profile for |language| from a profile directory:
// default.json (wildcard) merged with {language}.json. Missing files
// contribute nothing.
CleaningProfile ResolveProfile(const std::filesystem::path &directory,
                               std::string_view language);

}  // namespace nif_forge

#endif  // NIF_FORGE_PROFILE_H_
