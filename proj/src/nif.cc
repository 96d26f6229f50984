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

#include "nif_forge/nif.h"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "nif_forge/unicode.h"

namespace nif_forge {

std::string MintUri(const DocumentKey &key, UnitKind unit, std::size_t begin,
                    std::size_t end) {
  if (key.language.empty() || key.name.empty() || key.version.empty()) {
    throw NifError("cannot mint URI: language, article name and version "
                   "must be non-empty");
  }
  if (unit != UnitKind::kContext && begin > end) {
    throw NifError("cannot mint URI: begin " + std::to_string(begin) +
                   " > end " + std::to_string(end));
  }
  std::string uri;
  uri.reserve(ns::kWikiBase.size() + key.name.size() + 48);
  uri += ns::kWikiBase;
  uri += key.language;
  uri += '/';
  uri += key.name;
  uri += "?dbpv=";
  uri += key.version;
  const std::string span =
      "char=" + std::to_string(begin) + "," + std::to_string(end);
  switch (unit) {
    case UnitKind::kContext:
      uri += "&nif=context";
      break;
    case UnitKind::kSection:
    case UnitKind::kLink:
      uri += "&" + span;
      break;
    case UnitKind::kParagraph:
      uri += "&nif=paragraph&" + span;
      break;
    case UnitKind::kTitle:
      uri += "&nif=title&" + span;
      break;
  }
  return uri;
}

std::optional<DocumentKey> ParseContextUri(std::string_view uri) {
  if (!uri.starts_with(ns::kWikiBase)) return std::nullopt;
  uri.remove_prefix(ns::kWikiBase.size());
  const std::size_t slash = uri.find('/');
  const std::size_t question = uri.find('?');
  if (slash == std::string_view::npos || question == std::string_view::npos ||
      slash > question) {
    return std::nullopt;
  }
  DocumentKey key;
  key.language = std::string(uri.substr(0, slash));
  key.name = std::string(uri.substr(slash + 1, question - slash - 1));
  std::string_view query = uri.substr(question + 1);
  constexpr std::string_view kSuffix = "&nif=context";
  if (!query.starts_with("dbpv=") || !query.ends_with(kSuffix)) {
    return std::nullopt;
  }
  query.remove_prefix(5);
  query.remove_suffix(kSuffix.size());
  if (query.find('&') != std::string_view::npos) return std::nullopt;
  key.version = std::string(query);
  if (key.language.empty() || key.name.empty() || key.version.empty()) {
    return std::nullopt;
  }
  return key;
}

std::string_view DocumentPrefix(std::string_view uri) {
  if (!uri.starts_with(ns::kWikiBase)) return {};
  const std::size_t question = uri.find('?');
  if (question == std::string_view::npos) return {};
  const std::size_t amp = uri.find('&', question);
  return uri.substr(0, amp);
}

std::optional<std::pair<std::size_t, std::size_t>> SpanFromUri(
    std::string_view uri) {
  const std::size_t question = uri.find('?');
  if (question == std::string_view::npos) return std::nullopt;
  const std::size_t at = uri.find("char=", question);
  if (at == std::string_view::npos) return std::nullopt;
  std::string_view rest = uri.substr(at + 5);
  std::size_t begin = 0, end = 0;
  auto [p1, e1] = std::from_chars(rest.data(), rest.data() + rest.size(), begin);
  if (e1 != std::errc() || p1 == rest.data() + rest.size() || *p1 != ',') {
    return std::nullopt;
  }
  auto [p2, e2] = std::from_chars(p1 + 1, rest.data() + rest.size(), end);
  if (e2 != std::errc() || p2 == p1 + 1) return std::nullopt;
  return std::make_pair(begin, end);
}

LinkKind ClassifyLink(std::string_view anchor) {
  const std::size_t tokens = CountTokens(anchor);
  if (tokens == 0) throw NifError("cannot classify an empty anchor");
  return tokens == 1 ? LinkKind::kWord : LinkKind::kPhrase;
}

std::string NormalizeArticleName(std::string_view name) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  auto is_hex = [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
           (c >= 'A' && c <= 'F');
  };
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto c = static_cast<unsigned char>(name[i]);
    if (c == ' ') {
      out.push_back('_');
    } else if (c == '%' && i + 2 < name.size() && is_hex(name[i + 1]) &&
               is_hex(name[i + 2])) {
      out.push_back('%');
      out.push_back(static_cast<char>(std::toupper(name[i + 1])));
      out.push_back(static_cast<char>(std::toupper(name[i + 2])));
      i += 2;
    } else if (c >= 0x80 || std::isalnum(c) ||
               std::string_view("-._~!$'()*+,;:@/").find(static_cast<char>(c)) !=
                   std::string_view::npos) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

std::string PredominantLanguageUri(std::string_view language) {
  static const std::unordered_map<std::string_view, std::string_view> kCodes = {
      {"ar", "ara"}, {"bg", "bul"}, {"ca", "cat"}, {"cs", "ces"},
      {"da", "dan"}, {"de", "deu"}, {"el", "ell"}, {"en", "eng"},
      {"eo", "epo"}, {"es", "spa"}, {"et", "est"}, {"eu", "eus"},
      {"fa", "fas"}, {"fi", "fin"}, {"fr", "fra"}, {"gl", "glg"},
      {"he", "heb"}, {"hi", "hin"}, {"hr", "hrv"}, {"hu", "hun"},
      {"hy", "hye"}, {"id", "ind"}, {"it", "ita"}, {"ja", "jpn"},
      {"kk", "kaz"}, {"ko", "kor"}, {"la", "lat"}, {"lt", "lit"},
      {"ms", "msa"}, {"nl", "nld"}, {"no", "nor"}, {"pl", "pol"},
      {"pt", "por"}, {"ro", "ron"}, {"ru", "rus"}, {"simple", "eng"},
      {"sk", "slk"}, {"sl", "slv"}, {"sr", "srp"}, {"sv", "swe"},
      {"th", "tha"}, {"tr", "tur"}, {"uk", "ukr"}, {"vi", "vie"},
      {"zh", "zho"}};
  std::string uri(ns::kLexvo);
  auto it = kCodes.find(language);
  uri += it != kCodes.end() ? it->second : language;
  return uri;
}

std::string_view ToString(UnitKind kind) {
  switch (kind) {
    case UnitKind::kContext: return "context";
    case UnitKind::kSection: return "section";
    case UnitKind::kParagraph: return "paragraph";
    case UnitKind::kTitle: return "title";
    case UnitKind::kLink: return "link";
  }
  return "unknown";
}

std::string_view ToString(LinkKind kind) {
  return kind == LinkKind::kWord ? "Word" : "Phrase";
}

namespace {

template <typename Section, typename Fn>
void VisitSections(std::vector<Section> &sections, const Fn &fn) {
  for (auto &section : sections) {
    fn(section);
    VisitSections(section.subsections, fn);
  }
}

void RebuildSections(const DocumentKey &key, const std::string &context_uri,
                     const std::string &parent,
                     std::vector<NifSection> *sections) {
  for (NifSection &s : *sections) {
    s.uri = MintUri(key, UnitKind::kSection, s.begin, s.end);
  }
  for (std::size_t i = 0; i < sections->size(); ++i) {
    NifSection &s = (*sections)[i];
    s.parent = parent;
    s.reference_context = context_uri;
    s.next_section = i + 1 < sections->size()
                         ? std::optional((*sections)[i + 1].uri)
                         : std::nullopt;
    if (s.title) {
      s.title->uri = MintUri(key, UnitKind::kTitle, s.title->begin, s.title->end);
      s.title->section = s.uri;
      s.title->reference_context = context_uri;
    }
    for (NifParagraph &p : s.paragraphs) {
      p.uri = MintUri(key, UnitKind::kParagraph, p.begin, p.end);
    }
    for (std::size_t j = 0; j < s.paragraphs.size(); ++j) {
      NifParagraph &p = s.paragraphs[j];
      p.section = s.uri;
      p.reference_context = context_uri;
      p.next_paragraph = j + 1 < s.paragraphs.size()
                             ? std::optional(s.paragraphs[j + 1].uri)
                             : std::nullopt;
      for (LinkAnnotation &link : p.links) {
        link.uri = MintUri(key, UnitKind::kLink, link.begin, link.end);
        link.paragraph = p.uri;
        link.reference_context = context_uri;
      }
    }
    s.first_paragraph = s.paragraphs.empty()
                            ? std::nullopt
                            : std::optional(s.paragraphs.front().uri);
    s.last_paragraph = s.paragraphs.empty()
                           ? std::nullopt
                           : std::optional(s.paragraphs.back().uri);
    RebuildSections(key, context_uri, s.uri, &s.subsections);
    s.first_section = s.subsections.empty()
                          ? std::nullopt
                          : std::optional(s.subsections.front().uri);
    s.last_section = s.subsections.empty()
                         ? std::nullopt
                         : std::optional(s.subsections.back().uri);
  }
}

}  // namespace

void ForEachSection(const NifContext &context,
                    const std::function<void(const NifSection &)> &fn) {
  VisitSections(const_cast<std::vector<NifSection> &>(context.sections),
                [&](const NifSection &s) { fn(s); });
}

void ForEachSection(NifContext &context,
                    const std::function<void(NifSection &)> &fn) {
  VisitSections(context.sections, fn);
}

std::size_t CountLinks(const NifDocument &doc) {
  std::size_t n = doc.loose_links.size();
  ForEachSection(doc.context, [&n](const NifSection &s) {
    for (const auto &p : s.paragraphs) n += p.links.size();
  });
  return n;
}

std::size_t CountParagraphs(const NifDocument &doc) {
  std::size_t n = 0;
  ForEachSection(doc.context,
                 [&n](const NifSection &s) { n += s.paragraphs.size(); });
  return n;
}

void RebuildReferences(NifDocument *doc) {
  NifContext &ctx = doc->context;
  ctx.uri = MintUri(doc->key, UnitKind::kContext);
  RebuildSections(doc->key, ctx.uri, ctx.uri, &ctx.sections);
  ctx.first_section = ctx.sections.empty()
                          ? std::nullopt
                          : std::optional(ctx.sections.front().uri);
  ctx.last_section = ctx.sections.empty()
                         ? std::nullopt
                         : std::optional(ctx.sections.back().uri);
  for (LinkAnnotation &link : doc->loose_links) {
    link.uri = MintUri(doc->key, UnitKind::kLink, link.begin, link.end);
    link.reference_context = ctx.uri;
  }
}

}  // namespace nif_forge
