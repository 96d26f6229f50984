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

#include "nif_forge/profile.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nif_forge {

using json = nlohmann::json;

namespace {

html::Selector CompileSelector(const json &value, std::string_view key) {
  if (!value.is_string()) {
    throw ProfileError("profile key \"" + std::string(key) +
                       "\" must contain selector strings");
  }
  try {
    return html::Selector::Parse(value.get<std::string>());
  } catch (const html::SelectorError &e) {
    throw ProfileError(e.what());
  }
}

std::vector<html::Selector> CompileList(const json &value,
                                        std::string_view key) {
  if (!value.is_array()) {
    throw ProfileError("profile key \"" + std::string(key) +
                       "\" must be an array");
  }
  std::vector<html::Selector> out;
  for (const json &item : value) out.push_back(CompileSelector(item, key));
  return out;
}

}  // namespace

std::vector<std::string> DefaultExcludedSections() {
  return {"See also", "Notes", "Bibliography", "References", "External Links"};
}

std::vector<std::string> CleaningProfile::EffectiveExcludedSections() const {
  return excluded_sections.value_or(DefaultExcludedSections());
}

CleaningProfile CleaningProfile::MergedWith(
    const CleaningProfile &language_profile) const {
  CleaningProfile merged = *this;
  merged.language = language_profile.language;
  merged.search.insert(merged.search.end(), language_profile.search.begin(),
                       language_profile.search.end());
  merged.remove.insert(merged.remove.end(), language_profile.remove.begin(),
                       language_profile.remove.end());
  merged.replace.insert(merged.replace.end(), language_profile.replace.begin(),
                        language_profile.replace.end());
  if (language_profile.excluded_sections) {
    std::vector<std::string> titles = EffectiveExcludedSections();
    titles.insert(titles.end(), language_profile.excluded_sections->begin(),
                  language_profile.excluded_sections->end());
    merged.excluded_sections = std::move(titles);
  }
  return merged;
}

CleaningProfile LoadProfile(std::string_view json_text,
                            std::string_view language) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ProfileError(std::string("malformed profile JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ProfileError("profile must be a JSON object");

  CleaningProfile profile;
  profile.language = std::string(language);
  for (const auto &[key, value] : doc.items()) {
    if (key == "search") {
      profile.search = CompileList(value, key);
    } else if (key == "remove") {
      profile.remove = CompileList(value, key);
    } else if (key == "replace") {
      if (!value.is_array()) throw ProfileError("\"replace\" must be an array");
      for (const json &entry : value) {
        if (!entry.is_object() || !entry.contains("selector")) {
          throw ProfileError("replace entry needs a \"selector\"");
        }
        if (!entry.contains("replacement") ||
            !entry["replacement"].is_string()) {
          throw ProfileError("replace entry for selector " +
                             entry["selector"].dump() +
                             " is missing \"replacement\"");
        }
        for (const auto &[field, unused] : entry.items()) {
          if (field != "selector" && field != "replacement") {
            throw ProfileError("unknown replace entry key \"" + field + "\"");
          }
        }
        profile.replace.push_back(
            {CompileSelector(entry["selector"], key),
             entry["replacement"].get<std::string>()});
      }
    } else if (key == "enrichment_excluded_sections") {
      if (!value.is_array()) {
        throw ProfileError("\"enrichment_excluded_sections\" must be an array");
      }
      std::vector<std::string> titles;
      for (const json &t : value) {
        if (!t.is_string()) {
          throw ProfileError("excluded section titles must be strings");
        }
        titles.push_back(t.get<std::string>());
      }
      profile.excluded_sections = std::move(titles);
    } else {
      throw ProfileError("unknown profile key \"" + key + "\"");
    }
  }
  return profile;
}

CleaningProfile LoadProfileFile(const std::filesystem::path &path,
                                std::string_view language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot read profile " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return LoadProfile(buffer.str(), language);
  } catch (const ProfileError &e) {
    throw ProfileError(path.string() + ": " + e.what());
  }
}

CleaningProfile ResolveProfile(const std::filesystem::path &directory,
                               std::string_view language) {
  if (!std::filesystem::is_directory(directory)) {
    throw ProfileError("profile directory not found: " + directory.string());
  }
  CleaningProfile profile;
  const auto wildcard = directory / "default.json";
  if (std::filesystem::exists(wildcard)) profile = LoadProfileFile(wildcard);
  const auto specific = directory / (std::string(language) + ".json");
  if (std::filesystem::exists(specific)) {
    profile = profile.MergedWith(LoadProfileFile(specific, language));
  }
  profile.language = std::string(language);
  return profile;
}

}  // namespace nif_forge
