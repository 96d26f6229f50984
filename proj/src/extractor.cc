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

#include "nif_forge/extractor.h"

#include <functional>
#include <vector>

#include "nif_forge/builder.h"
#include "nif_forge/unicode.h"

namespace nif_forge {

namespace {

using html::Node;

bool IsHtmlSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

int HeadingLevel(const Node &n) {
  const std::string &tag = n.name();
  if (tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6') {
    return tag[1] - '0';
  }
  return 0;
}

struct UrlParts {
  std::string scheme;
  std::string authority;
  std::string path;  // including query and fragment
};

bool HasScheme(std::string_view url) {
  if (url.empty() || !std::isalpha(static_cast<unsigned char>(url[0]))) {
    return false;
  }
  for (std::size_t i = 1; i < url.size(); ++i) {
    const char c = url[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return false;
}

UrlParts SplitUrl(std::string_view url) {
  UrlParts parts;
  if (!HasScheme(url)) {
    parts.path = std::string(url);
    return parts;
  }
  const std::size_t colon = url.find(':');
  parts.scheme = ToLowerAscii(url.substr(0, colon));
  std::string_view rest = url.substr(colon + 1);
  if (rest.starts_with("//")) {
    rest.remove_prefix(2);
    const std::size_t slash = rest.find_first_of("/?#");
    parts.authority = ToLowerAscii(rest.substr(0, slash));
    parts.path = slash == std::string_view::npos ? "" : std::string(rest.substr(slash));
  } else {
    parts.path = std::string(rest);
  }
  return parts;
}

std::string EscapeIri(std::string_view url) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : url) {
    const auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || std::string_view("<>\"{}|\\^`").find(ch) !=
                         std::string_view::npos) {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    } else {
      out.push_back(ch);
    }
  }
  return out;
}

std::string PercentDecode(std::string_view s) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() && hex(s[i + 1]) >= 0 &&
        hex(s[i + 2]) >= 0) {
      out.push_back(static_cast<char>(hex(s[i + 1]) * 16 + hex(s[i + 2])));
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

// Text of one block (title or paragraph) under the whitespace rules, with
// optional capture of the span covered by a link.
class BlockText {
 public:
  void AppendCollapsed(std::string_view text) {
    for (char c : text) {
      if (IsHtmlSpace(c)) {
        if (!out_.empty() && !last_is_space_) pending_space_ = true;
      } else {
        Emit(c);
        last_is_space_ = false;
      }
    }
  }

  void AppendVerbatim(std::string_view text) {
    if (text.empty()) return;
    if (IsHtmlSpace(text.front())) pending_space_ = false;
    for (char c : text) Emit(c);
    last_is_space_ = IsHtmlSpace(text.back());
  }

  void StartCapture() {
    capturing_ = true;
    capture_begin_.reset();
  }

  // Returns the captured [begin, end) span, or nullopt if nothing was
  // emitted since StartCapture().
  std::optional<std::pair<std::size_t, std::size_t>> StopCapture() {
    capturing_ = false;
    if (!capture_begin_) return std::nullopt;
    return std::make_pair(*capture_begin_, length_);
  }

  std::size_t length() const { return length_; }
  const std::string &text() const { return out_; }

 private:
  void Emit(char c) {
    const bool starts_code_point = (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    if (starts_code_point && pending_space_) {
      out_.push_back(' ');
      ++length_;
      pending_space_ = false;
    }
    if (starts_code_point && capturing_ && !capture_begin_) {
      capture_begin_ = length_;
    }
    out_.push_back(c);
    if (starts_code_point) ++length_;
  }

  std::string out_;
  std::size_t length_ = 0;
  bool pending_space_ = false;
  bool last_is_space_ = false;
  bool capturing_ = false;
  std::optional<std::size_t> capture_begin_;
};

class Walker {
 public:
  Walker(const CleanedDocument &doc, const ArticleMeta &meta,
         ExtractionDiagnostics *diagnostics)
      : doc_(doc), meta_(meta), diagnostics_(diagnostics), builder_(meta) {
    bool any_marker = false;
    doc.root->ForEach([&](const Node &n) {
      if (n.is_element() && n.HasAttribute(kSearchMarker)) any_marker = true;
    });
    use_markers_ = any_marker;
    source_url_ = doc.source_url.empty() ? meta.source_url : doc.source_url;
  }

  NifDocument Run() {
    Visit(*doc_.root);
    return builder_.Finish();
  }

 private:
  bool IsRoot(const Node &n) const {
    if (!n.is_element()) return false;
    if (use_markers_) return n.HasAttribute(kSearchMarker);
    return HeadingLevel(n) > 0 || n.name() == "p";
  }

  void Visit(const Node &node) {
    if (IsRoot(node)) {
      if (const int level = HeadingLevel(node); level > 0) {
        BlockText title;
        CollectText(node, node, /*in_link=*/true, &title, nullptr);
        builder_.OpenSection(level, title.text());
      } else {
        BlockText text;
        std::vector<LinkSpec> links;
        CollectText(node, node, /*in_link=*/false, &text, &links);
        if (!text.text().empty()) {
          builder_.AddParagraph(text.text(), links);
          diagnostics_->paragraphs++;
          diagnostics_->links += links.size();
        }
      }
      return;
    }
    if (node.is_element() && (node.name() == "script" || node.name() == "style")) {
      return;
    }
    for (const auto &child : node.children()) Visit(*child);
  }

  void CollectText(const Node &root, const Node &node, bool in_link,
                   BlockText *text, std::vector<LinkSpec> *links) {
    for (const auto &child_ptr : node.children()) {
      const Node &child = *child_ptr;
      if (child.is_text()) {
        if (child.verbatim()) {
          text->AppendVerbatim(child.text());
        } else {
          text->AppendCollapsed(child.text());
        }
        continue;
      }
      if (!child.is_element()) continue;
      if (child.name() == "script" || child.name() == "style") continue;
      if (IsRoot(child) && HeadingLevel(child) > 0 && HeadingLevel(root) == 0) {
        throw ExtractionError("heading <" + child.name() +
                              "> nested inside paragraph root <" + root.name() +
                              "> in article " + meta_.title);
      }
      const std::string *href = child.GetAttribute("href");
      if (!in_link && links != nullptr && child.name() == "a" && href != nullptr) {
        auto target = CanonicalLinkTarget(*href, source_url_, meta_.language);
        if (!target) {
          if (!href->empty()) diagnostics_->fragment_links++;
          CollectText(root, child, /*in_link=*/true, text, links);
          continue;
        }
        text->StartCapture();
        CollectText(root, child, /*in_link=*/true, text, links);
        if (auto span = text->StopCapture()) {
          links->push_back({span->first, span->second, std::move(*target)});
        } else {
          diagnostics_->empty_anchors++;
        }
        continue;
      }
      CollectText(root, child, in_link, text, links);
    }
  }

  const CleanedDocument &doc_;
  const ArticleMeta &meta_;
  ExtractionDiagnostics *diagnostics_;
  DocumentBuilder builder_;
  bool use_markers_ = false;
  std::string source_url_;
};

}  // namespace

std::string ResourceNamespace(std::string_view language) {
  if (language == "en" || language.empty()) return "http://dbpedia.org/resource/";
  return "http://" + std::string(language) + ".dbpedia.org/resource/";
}

std::optional<std::string> CanonicalLinkTarget(std::string_view href,
                                               std::string_view source_url,
                                               std::string_view language) {
  const std::string trimmed = TrimWhitespace(href);
  if (trimmed.empty() || trimmed.front() == '#') return std::nullopt;

  const UrlParts source = SplitUrl(source_url);
  const std::string origin =
      source.authority.empty()
          ? std::string()
          : (source.scheme.empty() ? "https" : source.scheme) + "://" +
                source.authority;
  std::string resolved;
  if (HasScheme(trimmed)) {
    resolved = trimmed;
  } else if (trimmed.starts_with("//")) {
    resolved = (source.scheme.empty() ? "https" : source.scheme) + ":" + trimmed;
  } else if (trimmed.front() == '/') {
    resolved = origin + trimmed;
  } else if (trimmed.starts_with("./")) {
    resolved = origin + "/wiki/" + trimmed.substr(2);
  } else {
    const std::size_t slash = source.path.rfind('/');
    const std::string dir =
        slash == std::string::npos ? "/" : source.path.substr(0, slash + 1);
    resolved = origin + dir + trimmed;
  }

  const UrlParts target = SplitUrl(resolved);
  const bool same_wiki = target.authority == source.authority;
  if (same_wiki && target.path.starts_with("/wiki/") &&
      target.path.find('?') == std::string::npos) {
    std::string title = target.path.substr(6);
    if (const std::size_t hash = title.find('#'); hash != std::string::npos) {
      title.resize(hash);
    }
    if (!title.empty()) {
      std::string decoded = PercentDecode(title);
      if (SanitizeUtf8(decoded).dropped > 0) decoded = title;
      return ResourceNamespace(language) + NormalizeArticleName(decoded);
    }
  }
  return EscapeIri(resolved);
}

std::optional<LinkAnnotation> CaptureLink(const html::Node &anchor,
                                          std::size_t running_offset,
                                          std::string_view source_url,
                                          std::string_view language,
                                          ExtractionDiagnostics *diagnostics) {
  ExtractionDiagnostics scratch;
  ExtractionDiagnostics *diag = diagnostics ? diagnostics : &scratch;
  const std::string *href = anchor.GetAttribute("href");
  if (href == nullptr) return std::nullopt;
  auto target = CanonicalLinkTarget(*href, source_url, language);
  if (!target) {
    diag->fragment_links++;
    return std::nullopt;
  }
  BlockText text;
  // Same traversal as paragraph collection, restricted to the anchor.
  std::function<void(const Node &)> walk = [&](const Node &n) {
    for (const auto &child : n.children()) {
      if (child->is_text()) {
        if (child->verbatim()) {
          text.AppendVerbatim(child->text());
        } else {
          text.AppendCollapsed(child->text());
        }
      } else if (child->is_element() && child->name() != "script" &&
                 child->name() != "style") {
        walk(*child);
      }
    }
  };
  walk(anchor);
  if (text.length() == 0) {
    diag->empty_anchors++;
    return std::nullopt;
  }
  LinkAnnotation link;
  link.begin = running_offset;
  link.end = running_offset + text.length();
  link.anchor = text.text();
  link.target = std::move(*target);
  link.kind = ClassifyLink(link.anchor);
  return link;
}

NifDocument Extract(const CleanedDocument &doc, const ArticleMeta &meta,
                    ExtractionDiagnostics *diagnostics) {
  ExtractionDiagnostics scratch;
  Walker walker(doc, meta, diagnostics ? diagnostics : &scratch);
  return walker.Run();
}

}  // namespace nif_forge
