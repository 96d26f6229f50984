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

#include "nif_forge/html/parser.h"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <vector>

#include "nif_forge/unicode.h"

namespace nif_forge::html {

namespace {

struct NamedReference {
  std::string_view name;
  char32_t codepoints[2];
};

constexpr NamedReference kNamedReferences[] = {
#include "entities.inc"
};

const NamedReference *LookupReference(std::string_view name) {
  auto it = std::lower_bound(
      std::begin(kNamedReferences), std::end(kNamedReferences), name,
      [](const NamedReference &ref, std::string_view n) { return ref.name < n; });
  if (it != std::end(kNamedReferences) && it->name == name) return &*it;
  return nullptr;
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsAsciiAlnum(char c) { return IsAsciiAlpha(c) || (c >= '0' && c <= '9'); }

bool IsHtmlSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

// Windows-1252 remapping for numeric references in the C1 range.
char32_t RemapC1(char32_t cp) {
  static constexpr std::array<char32_t, 32> kTable = {
      0x20AC, 0x81,   0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
      0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x8D,   0x017D, 0x8F,
      0x90,   0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
      0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x9D,   0x017E, 0x0178};
  if (cp >= 0x80 && cp <= 0x9F) return kTable[cp - 0x80];
  return cp;
}

// Tries to decode a reference at text[pos] == '&'. On success appends the
// result, returns the number of bytes consumed; returns 0 otherwise.
std::size_t DecodeOne(std::string_view text, std::size_t pos,
                      bool in_attribute, std::string *out) {
  std::size_t i = pos + 1;
  if (i < text.size() && text[i] == '#') {
    ++i;
    bool hex = false;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      hex = true;
      ++i;
    }
    const std::size_t digits_start = i;
    std::uint64_t value = 0;
    while (i < text.size()) {
      const char c = text[i];
      int d;
      if (c >= '0' && c <= '9') {
        d = c - '0';
      } else if (hex && c >= 'a' && c <= 'f') {
        d = c - 'a' + 10;
      } else if (hex && c >= 'A' && c <= 'F') {
        d = c - 'A' + 10;
      } else {
        break;
      }
      value = std::min<std::uint64_t>(value * (hex ? 16 : 10) + d, 0x110000);
      ++i;
    }
    if (i == digits_start) return 0;
    if (i < text.size() && text[i] == ';') ++i;
    char32_t cp = static_cast<char32_t>(value);
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      cp = 0xFFFD;
    }
    AppendUtf8(RemapC1(cp), out);
    return i - pos;
  }
  std::size_t end = i;
  while (end < text.size() && IsAsciiAlnum(text[end])) ++end;
  if (end == i) return 0;
  if (end < text.size() && text[end] == ';') {
    std::string name(text.substr(i, end - i + 1));
    if (const NamedReference *ref = LookupReference(name)) {
      for (char32_t cp : ref->codepoints) {
        if (cp != 0) AppendUtf8(cp, out);
      }
      return end + 1 - pos;
    }
  }
  // Legacy references without a terminating semicolon: longest prefix.
  for (std::size_t len = end - i; len > 0; --len) {
    const NamedReference *ref = LookupReference(text.substr(i, len));
    if (ref == nullptr) continue;
    const std::size_t after = i + len;
    if (in_attribute && after < text.size() &&
        (IsAsciiAlnum(text[after]) || text[after] == '=')) {
      return 0;
    }
    for (char32_t cp : ref->codepoints) {
      if (cp != 0) AppendUtf8(cp, out);
    }
    return after - pos;
  }
  return 0;
}

bool OneOf(std::string_view tag, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), tag) != set.end();
}

bool IsHeading(std::string_view tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

// Start tags that implicitly close an open <p>.
bool ClosesParagraph(std::string_view tag) {
  return IsHeading(tag) ||
         OneOf(tag, {"address", "article", "aside", "blockquote", "center",
                     "details", "dialog", "dir", "div", "dl", "fieldset",
                     "figcaption", "figure", "footer", "form", "header",
                     "hgroup", "hr", "li", "dd", "dt", "main", "menu", "nav",
                     "ol", "p", "pre", "section", "summary", "table", "ul"});
}

bool IsScopeBoundary(std::string_view tag) {
  return OneOf(tag, {"applet", "caption", "html", "table", "td", "th",
                     "marquee", "object", "template", "button"});
}

class TreeBuilder {
 public:
  TreeBuilder() : document_(Node::MakeDocument()) {
    stack_.push_back(document_.get());
  }

  std::unique_ptr<Node> Finish() { return std::move(document_); }

  void Text(std::string text) {
    if (text.empty()) return;
    Node *current = stack_.back();
    if (!current->children().empty() && current->children().back()->is_text()) {
      Node *last = current->children().back().get();
      last->set_text(last->text() + text);
      return;
    }
    current->AppendChild(Node::MakeText(std::move(text)));
  }

  void Comment(std::string text) {
    stack_.back()->AppendChild(Node::MakeComment(std::move(text)));
  }

  void StartTag(std::string name, std::vector<Attribute> attributes,
                bool self_closing) {
    if (ClosesParagraph(name)) CloseInScope("p", {});
    if (name == "li") {
      CloseInScope("li", {"ol", "ul"});
    } else if (name == "dt" || name == "dd") {
      CloseInScope("dt", {"dl"});
      CloseInScope("dd", {"dl"});
    } else if (IsHeading(name) && IsHeading(stack_.back()->name())) {
      stack_.pop_back();
    } else if (name == "tr") {
      CloseInScope("td", {"tr"});
      CloseInScope("th", {"tr"});
      CloseInScope("tr", {});
    } else if (name == "td" || name == "th") {
      CloseInScope("td", {"tr"});
      CloseInScope("th", {"tr"});
    } else if (name == "option") {
      if (stack_.back()->name() == "option") stack_.pop_back();
    } else if (name == "a") {
      CloseInScope("a", {});
    }
    auto element = Node::MakeElement(std::move(name));
    for (Attribute &attr : attributes) {
      if (!element->HasAttribute(attr.name)) {
        element->SetAttribute(attr.name, std::move(attr.value));
      }
    }
    const bool is_void = IsVoidElement(element->name());
    Node *node = stack_.back()->AppendChild(std::move(element));
    if (!is_void && !self_closing) stack_.push_back(node);
  }

  void EndTag(const std::string &name) {
    if (name == "br") {
      StartTag("br", {}, false);
      return;
    }
    for (std::size_t i = stack_.size(); i > 1; --i) {
      if (stack_[i - 1]->name() == name) {
        stack_.resize(i - 1);
        return;
      }
      // A heading end tag closes any open heading, as browsers do.
      if (IsHeading(name) && IsHeading(stack_[i - 1]->name())) {
        stack_.resize(i - 1);
        return;
      }
    }
  }

 private:
  // Pops up to and including the innermost open |tag|, unless a scope
  // boundary (or one of |extra_boundaries|) sits above it.
  void CloseInScope(std::string_view tag,
                    std::initializer_list<std::string_view> extra_boundaries) {
    for (std::size_t i = stack_.size(); i > 1; --i) {
      const std::string &open = stack_[i - 1]->name();
      if (open == tag) {
        stack_.resize(i - 1);
        return;
      }
      if (IsScopeBoundary(open) || OneOf(open, extra_boundaries)) return;
    }
  }

  std::unique_ptr<Node> document_;
  std::vector<Node *> stack_;
};

class Tokenizer {
 public:
  Tokenizer(std::string_view input, TreeBuilder *builder)
      : in_(input), builder_(builder) {}

  void Run() {
    std::size_t text_start = 0;
    while (pos_ < in_.size()) {
      if (in_[pos_] != '<') {
        ++pos_;
        continue;
      }
      const std::size_t tag_start = pos_;
      if (!TryMarkup()) {
        ++pos_;
        continue;
      }
      // Flush text preceding the markup we just consumed.
      FlushText(text_start, tag_start);
      EmitPending();
      text_start = pos_;
      if (!raw_text_tag_.empty()) {
        ConsumeRawText();
        text_start = pos_;
      }
    }
    FlushText(text_start, in_.size());
  }

 private:
  enum class Pending { kNone, kStart, kEnd, kComment };

  void FlushText(std::size_t begin, std::size_t end) {
    if (end > begin) {
      builder_->Text(DecodeCharacterReferences(in_.substr(begin, end - begin)));
    }
  }

  void EmitPending() {
    switch (pending_) {
      case Pending::kStart:
        builder_->StartTag(name_, std::move(attributes_), self_closing_);
        break;
      case Pending::kEnd:
        builder_->EndTag(name_);
        break;
      case Pending::kComment:
        builder_->Comment(std::move(comment_));
        break;
      case Pending::kNone:
        break;
    }
    pending_ = Pending::kNone;
    attributes_.clear();
  }

  // Parses markup at pos_ ('<'). Returns false when the '<' is literal text.
  bool TryMarkup() {
    std::string_view rest = in_.substr(pos_);
    if (rest.starts_with("<!--")) {
      const std::size_t close = in_.find("-->", pos_ + 4);
      const std::size_t end = close == std::string_view::npos ? in_.size() : close;
      comment_ = std::string(in_.substr(pos_ + 4, end - pos_ - 4));
      pos_ = close == std::string_view::npos ? in_.size() : close + 3;
      pending_ = Pending::kComment;
      return true;
    }
    if (rest.starts_with("<!") || rest.starts_with("<?")) {
      const std::size_t close = in_.find('>', pos_);
      pos_ = close == std::string_view::npos ? in_.size() : close + 1;
      pending_ = Pending::kNone;
      return true;
    }
    if (rest.size() >= 3 && rest[1] == '/' && IsAsciiAlpha(rest[2])) {
      pos_ += 2;
      name_ = ReadTagName();
      const std::size_t close = in_.find('>', pos_);
      pos_ = close == std::string_view::npos ? in_.size() : close + 1;
      pending_ = Pending::kEnd;
      return true;
    }
    if (rest.size() >= 2 && IsAsciiAlpha(rest[1])) {
      ++pos_;
      name_ = ReadTagName();
      ReadAttributes();
      pending_ = Pending::kStart;
      if (!self_closing_ &&
          OneOf(name_, {"script", "style", "textarea", "title", "xmp"})) {
        raw_text_tag_ = name_;
      }
      return true;
    }
    return false;
  }

  std::string ReadTagName() {
    const std::size_t start = pos_;
    while (pos_ < in_.size() && !IsHtmlSpace(in_[pos_]) && in_[pos_] != '/' &&
           in_[pos_] != '>') {
      ++pos_;
    }
    return ToLowerAscii(in_.substr(start, pos_ - start));
  }

  void ReadAttributes() {
    self_closing_ = false;
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (IsHtmlSpace(c)) {
        ++pos_;
        continue;
      }
      if (c == '>') {
        ++pos_;
        return;
      }
      if (c == '/') {
        ++pos_;
        self_closing_ = pos_ < in_.size() && in_[pos_] == '>';
        continue;
      }
      self_closing_ = false;
      const std::size_t name_start = pos_++;
      while (pos_ < in_.size() && !IsHtmlSpace(in_[pos_]) && in_[pos_] != '/' &&
             in_[pos_] != '>' && in_[pos_] != '=') {
        ++pos_;
      }
      Attribute attr;
      attr.name = ToLowerAscii(in_.substr(name_start, pos_ - name_start));
      std::size_t look = pos_;
      while (look < in_.size() && IsHtmlSpace(in_[look])) ++look;
      if (look < in_.size() && in_[look] == '=') {
        pos_ = look + 1;
        while (pos_ < in_.size() && IsHtmlSpace(in_[pos_])) ++pos_;
        attr.value = ReadAttributeValue();
      }
      attributes_.push_back(std::move(attr));
    }
  }

  std::string ReadAttributeValue() {
    if (pos_ >= in_.size()) return {};
    const char quote = in_[pos_];
    std::size_t start, end;
    if (quote == '"' || quote == '\'') {
      start = pos_ + 1;
      end = in_.find(quote, start);
      if (end == std::string_view::npos) end = in_.size();
      pos_ = std::min(end + 1, in_.size());
    } else {
      start = pos_;
      while (pos_ < in_.size() && !IsHtmlSpace(in_[pos_]) && in_[pos_] != '>') {
        ++pos_;
      }
      end = pos_;
    }
    return DecodeCharacterReferences(in_.substr(start, end - start), true);
  }

  // Consumes the body of a raw text element up to its end tag.
  void ConsumeRawText() {
    const std::string tag = std::exchange(raw_text_tag_, {});
    std::size_t search = pos_;
    std::size_t close = std::string_view::npos;
    while (search < in_.size()) {
      const std::size_t lt = in_.find("</", search);
      if (lt == std::string_view::npos) break;
      const std::string_view candidate = in_.substr(lt + 2, tag.size());
      const std::size_t after = lt + 2 + tag.size();
      if (ToLowerAscii(candidate) == tag &&
          (after >= in_.size() || IsHtmlSpace(in_[after]) || in_[after] == '>' ||
           in_[after] == '/')) {
        close = lt;
        break;
      }
      search = lt + 2;
    }
    const std::size_t end = close == std::string_view::npos ? in_.size() : close;
    std::string body(in_.substr(pos_, end - pos_));
    if (tag == "textarea" || tag == "title") {
      body = DecodeCharacterReferences(body);
    }
    builder_->Text(std::move(body));
    if (close == std::string_view::npos) {
      pos_ = in_.size();
      return;
    }
    const std::size_t gt = in_.find('>', close);
    pos_ = gt == std::string_view::npos ? in_.size() : gt + 1;
    builder_->EndTag(tag);
  }

  std::string_view in_;
  TreeBuilder *builder_;
  std::size_t pos_ = 0;
  Pending pending_ = Pending::kNone;
  std::string name_;
  std::string comment_;
  std::vector<Attribute> attributes_;
  bool self_closing_ = false;
  std::string raw_text_tag_;
};

}  // namespace

std::string DecodeCharacterReferences(std::string_view text,
                                      bool in_attribute) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t amp = text.find('&', pos);
    if (amp == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    out.append(text.substr(pos, amp - pos));
    const std::size_t used = DecodeOne(text, amp, in_attribute, &out);
    if (used == 0) {
      out.push_back('&');
      pos = amp + 1;
    } else {
      pos = amp + used;
    }
  }
  return out;
}

std::unique_ptr<Node> ParseHtml(std::string_view html) {
  TreeBuilder builder;
  Tokenizer tokenizer(html, &builder);
  tokenizer.Run();
  return builder.Finish();
}

}  // namespace nif_forge::html
