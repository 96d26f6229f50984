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

#include "nif_forge/html/selector.h"

#include <algorithm>
#include <charconv>

#include "nif_forge/unicode.h"

namespace nif_forge::html {

namespace {

using Kind = SimpleSelector::Kind;
using AttrOp = SimpleSelector::AttrOp;

SimpleSelector Simple(Kind kind) {
  SimpleSelector s;
  s.kind = kind;
  return s;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

bool IsNameStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsNameChar(char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '-';
}

bool IsHex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
         (c >= 'A' && c <= 'F');
}

class Parser {
 public:
  explicit Parser(std::string_view text) : in_(text) {}

  std::vector<ComplexSelector> ParseGroup() {
    std::vector<ComplexSelector> group;
    SkipSpace();
    if (AtEnd()) Fail("empty selector");
    while (true) {
      group.push_back(ParseComplex());
      SkipSpace();
      if (AtEnd()) break;
      if (Peek() != ',') Fail("unexpected character");
      ++pos_;
      SkipSpace();
    }
    return group;
  }

 private:
  [[noreturn]] void Fail(const std::string &reason) const {
    throw SelectorError(std::string(in_),
                        reason + " at offset " + std::to_string(pos_));
  }

  bool AtEnd() const { return pos_ >= in_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }
  void SkipSpace() {
    while (!AtEnd() && IsSpace(in_[pos_])) ++pos_;
  }

  ComplexSelector ParseComplex() {
    ComplexSelector complex;
    complex.compounds.push_back(ParseCompound());
    while (true) {
      const std::size_t before = pos_;
      SkipSpace();
      if (AtEnd() || Peek() == ',' || Peek() == ')') {
        pos_ = (Peek() == ')') ? before : pos_;
        break;
      }
      Combinator comb = Combinator::kDescendant;
      if (Peek() == '>' || Peek() == '+' || Peek() == '~') {
        comb = Peek() == '>'   ? Combinator::kChild
               : Peek() == '+' ? Combinator::kAdjacent
                               : Combinator::kSibling;
        ++pos_;
        SkipSpace();
      } else if (pos_ == before) {
        Fail("expected combinator");
      }
      complex.combinators.push_back(comb);
      complex.compounds.push_back(ParseCompound());
    }
    return complex;
  }

  CompoundSelector ParseCompound() {
    CompoundSelector compound;
    if (Peek() == '*') {
      ++pos_;
      if (Peek() == '|') Fail("namespace prefixes are not supported");
      compound.parts.push_back(Simple(Kind::kUniversal));
    } else if (IsNameStart(Peek()) || Peek() == '-' || Peek() == '\\') {
      SimpleSelector type = Simple(Kind::kType);
      type.name = ToLowerAscii(ReadIdent());
      if (Peek() == '|') Fail("namespace prefixes are not supported");
      compound.parts.push_back(std::move(type));
    } else if (Peek() == '|') {
      Fail("namespace prefixes are not supported");
    }
    while (!AtEnd()) {
      const char c = Peek();
      if (c == '#' || c == '.' || c == '[' || c == ':') {
        compound.parts.push_back(ParseSimple(/*in_negation=*/false));
      } else {
        break;
      }
    }
    if (compound.parts.empty()) Fail("expected selector");
    return compound;
  }

  SimpleSelector ParseSimple(bool in_negation) {
    SimpleSelector s;
    const char c = Peek();
    if (c == '#') {
      ++pos_;
      s.kind = Kind::kId;
      s.value = ReadName();
    } else if (c == '.') {
      ++pos_;
      s.kind = Kind::kClass;
      s.value = ReadIdent();
    } else if (c == '[') {
      s = ParseAttribute();
    } else if (c == ':') {
      s = ParsePseudo(in_negation);
    } else if (in_negation && c == '*') {
      ++pos_;
      s.kind = Kind::kUniversal;
    } else if (in_negation && (IsNameStart(c) || c == '-' || c == '\\')) {
      s.kind = Kind::kType;
      s.name = ToLowerAscii(ReadIdent());
    } else {
      Fail("expected simple selector");
    }
    return s;
  }

  SimpleSelector ParseAttribute() {
    ++pos_;  // [
    SkipSpace();
    SimpleSelector s = Simple(Kind::kAttribute);
    if (Peek() == '|' || (Peek() == '*' && Peek(1) == '|')) {
      Fail("namespace prefixes are not supported");
    }
    s.name = ToLowerAscii(ReadIdent());
    SkipSpace();
    if (Peek() == ']') {
      ++pos_;
      s.op = AttrOp::kExists;
      return s;
    }
    const char c = Peek();
    if (c == '=') {
      s.op = AttrOp::kEquals;
      ++pos_;
    } else if (Peek(1) == '=' &&
               (c == '~' || c == '|' || c == '^' || c == '$' || c == '*')) {
      s.op = c == '~'   ? AttrOp::kIncludes
             : c == '|' ? AttrOp::kDashMatch
             : c == '^' ? AttrOp::kPrefix
             : c == '$' ? AttrOp::kSuffix
                        : AttrOp::kSubstring;
      pos_ += 2;
    } else {
      Fail("bad attribute operator");
    }
    SkipSpace();
    if (Peek() == '"' || Peek() == '\'') {
      s.value = ReadString();
    } else {
      s.value = ReadIdent();
    }
    SkipSpace();
    if (Peek() != ']') Fail("expected ']'");
    ++pos_;
    return s;
  }

  SimpleSelector ParsePseudo(bool in_negation) {
    ++pos_;  // :
    if (Peek() == ':') Fail("pseudo-elements are not supported");
    const std::string name = ToLowerAscii(ReadIdent());
    SimpleSelector s;
    if (Peek() != '(') {
      static constexpr std::string_view kPlain[] = {
          "root",          "empty",        "first-child",  "last-child",
          "only-child",    "first-of-type", "last-of-type", "only-of-type",
          "link",          "visited",      "hover",        "active",
          "focus",         "target",       "enabled",      "disabled",
          "checked"};
      if (std::find(std::begin(kPlain), std::end(kPlain), name) ==
          std::end(kPlain)) {
        if (name == "before" || name == "after" || name == "first-line" ||
            name == "first-letter") {
          Fail("pseudo-elements are not supported");
        }
        Fail("unknown pseudo-class :" + name);
      }
      if (name == "first-child" || name == "last-child" ||
          name == "first-of-type" || name == "last-of-type") {
        s.kind = Kind::kNth;
        s.a = 0;
        s.b = 1;
        s.of_type = name.ends_with("of-type");
        s.from_end = name.starts_with("last");
        return s;
      }
      s.kind = Kind::kPseudo;
      s.name = name;
      return s;
    }
    ++pos_;  // (
    SkipSpace();
    if (name == "not") {
      if (in_negation) Fail(":not() cannot be nested");
      s.kind = Kind::kNegation;
      s.negated.push_back(ParseSimple(/*in_negation=*/true));
    } else if (name == "lang") {
      s.kind = Kind::kPseudo;
      s.name = "lang";
      s.value = ToLowerAscii(ReadIdent());
    } else if (name == "nth-child" || name == "nth-last-child" ||
               name == "nth-of-type" || name == "nth-last-of-type") {
      s.kind = Kind::kNth;
      s.of_type = name.ends_with("of-type");
      s.from_end = name.starts_with("nth-last");
      ParseNth(&s);
    } else {
      Fail("unknown functional pseudo-class :" + name + "()");
    }
    SkipSpace();
    if (Peek() != ')') Fail("expected ')'");
    ++pos_;
    return s;
  }

  // an+b | odd | even
  void ParseNth(SimpleSelector *s) {
    const std::size_t start = pos_;
    while (!AtEnd() && Peek() != ')') ++pos_;
    std::string expr;
    for (char c : in_.substr(start, pos_ - start)) {
      if (!IsSpace(c)) expr.push_back(static_cast<char>(std::tolower(c)));
    }
    if (expr == "odd") {
      s->a = 2;
      s->b = 1;
      return;
    }
    if (expr == "even") {
      s->a = 2;
      s->b = 0;
      return;
    }
    auto parse_int = [&](std::string_view digits, int *out) {
      if (digits.empty()) return false;
      auto [ptr, ec] = std::from_chars(digits.data(),
                                       digits.data() + digits.size(), *out);
      return ec == std::errc() && ptr == digits.data() + digits.size();
    };
    const std::size_t n = expr.find('n');
    if (n == std::string::npos) {
      std::string_view num = expr;
      if (num.starts_with('+')) num.remove_prefix(1);
      if (!parse_int(num, &s->b)) Fail("bad nth expression");
      s->a = 0;
      return;
    }
    std::string_view coef = std::string_view(expr).substr(0, n);
    if (coef.empty() || coef == "+") {
      s->a = 1;
    } else if (coef == "-") {
      s->a = -1;
    } else {
      if (coef.starts_with('+')) coef.remove_prefix(1);
      if (!parse_int(coef, &s->a)) Fail("bad nth expression");
    }
    std::string_view rest = std::string_view(expr).substr(n + 1);
    if (rest.empty()) {
      s->b = 0;
      return;
    }
    if (rest[0] != '+' && rest[0] != '-') Fail("bad nth expression");
    const bool negative = rest[0] == '-';
    rest.remove_prefix(1);
    if (rest.empty() || rest[0] == '+' || rest[0] == '-' ||
        !parse_int(rest, &s->b)) {
      Fail("bad nth expression");
    }
    if (negative) s->b = -s->b;
  }

  // Appends one escape sequence starting at '\'.
  void ReadEscape(std::string *out) {
    ++pos_;
    if (AtEnd()) Fail("dangling escape");
    if (IsHex(Peek())) {
      std::size_t n = 0;
      char32_t cp = 0;
      while (n < 6 && IsHex(Peek())) {
        const char c = Peek();
        cp = cp * 16 + static_cast<char32_t>(
                           c <= '9' ? c - '0' : (std::tolower(c) - 'a' + 10));
        ++pos_;
        ++n;
      }
      if (IsSpace(Peek())) ++pos_;
      if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        cp = 0xFFFD;
      }
      AppendUtf8(cp, out);
      return;
    }
    out->push_back(Peek());
    ++pos_;
  }

  std::string ReadIdent() {
    std::string out;
    if (Peek() == '-') {
      out.push_back('-');
      ++pos_;
    }
    if (Peek() == '\\') {
      ReadEscape(&out);
    } else if (IsNameStart(Peek())) {
      out.push_back(Peek());
      ++pos_;
    } else {
      Fail("expected identifier");
    }
    ReadNameTail(&out);
    return out;
  }

  std::string ReadName() {
    std::string out;
    ReadNameTail(&out);
    if (out.empty()) Fail("expected name");
    return out;
  }

  void ReadNameTail(std::string *out) {
    while (!AtEnd()) {
      if (Peek() == '\\') {
        ReadEscape(out);
      } else if (IsNameChar(Peek())) {
        out->push_back(Peek());
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string ReadString() {
    const char quote = Peek();
    ++pos_;
    std::string out;
    while (true) {
      if (AtEnd()) Fail("unterminated string");
      const char c = Peek();
      if (c == quote) {
        ++pos_;
        return out;
      }
      if (c == '\n') Fail("newline in string");
      if (c == '\\') {
        if (Peek(1) == '\n') {
          pos_ += 2;
          continue;
        }
        ReadEscape(&out);
        continue;
      }
      out.push_back(c);
      ++pos_;
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

const Node *ParentElement(const Node &node) {
  const Node *parent = node.parent();
  return (parent != nullptr && parent->is_element()) ? parent : nullptr;
}

bool ContainsWord(std::string_view list, std::string_view word) {
  if (word.empty()) return false;
  std::size_t pos = 0;
  while (pos < list.size()) {
    while (pos < list.size() && IsSpace(list[pos])) ++pos;
    std::size_t end = pos;
    while (end < list.size() && !IsSpace(list[end])) ++end;
    if (end > pos && list.substr(pos, end - pos) == word) return true;
    pos = end;
  }
  return false;
}

bool MatchAttribute(const SimpleSelector &s, const Node &e) {
  const std::string *value = e.GetAttribute(s.name);
  if (value == nullptr) return false;
  const std::string &v = *value;
  switch (s.op) {
    case AttrOp::kExists: return true;
    case AttrOp::kEquals: return v == s.value;
    case AttrOp::kIncludes: return ContainsWord(v, s.value);
    case AttrOp::kDashMatch:
      return v == s.value || v.starts_with(s.value + "-");
    case AttrOp::kPrefix: return !s.value.empty() && v.starts_with(s.value);
    case AttrOp::kSuffix: return !s.value.empty() && v.ends_with(s.value);
    case AttrOp::kSubstring:
      return !s.value.empty() && v.find(s.value) != std::string::npos;
  }
  return false;
}

// 1-based position among element siblings, optionally of the same type and
// optionally counted from the end.
int SiblingPosition(const Node &e, bool of_type, bool from_end) {
  const Node *parent = e.parent();
  if (parent == nullptr) return 1;
  const auto &siblings = parent->children();
  int position = 0;
  auto counts = [&](const Node &n) {
    return n.is_element() && (!of_type || n.name() == e.name());
  };
  if (!from_end) {
    for (const auto &sib : siblings) {
      if (counts(*sib)) ++position;
      if (sib.get() == &e) break;
    }
  } else {
    for (auto it = siblings.rbegin(); it != siblings.rend(); ++it) {
      if (counts(**it)) ++position;
      if (it->get() == &e) break;
    }
  }
  return position;
}

bool MatchNth(int a, int b, int position) {
  if (a == 0) return position == b;
  const int diff = position - b;
  return diff % a == 0 && diff / a >= 0;
}

std::string InheritedLang(const Node &e) {
  for (const Node *n = &e; n != nullptr; n = n->parent()) {
    if (!n->is_element()) continue;
    if (const std::string *lang = n->GetAttribute("lang")) {
      return ToLowerAscii(*lang);
    }
  }
  return {};
}

bool MatchPseudo(const SimpleSelector &s, const Node &e) {
  const std::string &name = s.name;
  if (name == "root") return ParentElement(e) == nullptr;
  if (name == "empty") {
    for (const auto &child : e.children()) {
      if (child->is_element()) return false;
      if (child->is_text() && !child->text().empty()) return false;
    }
    return true;
  }
  if (name == "only-child" || name == "only-of-type") {
    const bool of_type = name == "only-of-type";
    return SiblingPosition(e, of_type, false) == 1 &&
           SiblingPosition(e, of_type, true) == 1;
  }
  if (name == "link") {
    return (e.name() == "a" || e.name() == "area" || e.name() == "link") &&
           e.HasAttribute("href");
  }
  if (name == "enabled" || name == "disabled") {
    static constexpr std::string_view kForm[] = {
        "button", "input", "select", "textarea", "optgroup", "option",
        "fieldset"};
    if (std::find(std::begin(kForm), std::end(kForm), e.name()) ==
        std::end(kForm)) {
      return false;
    }
    return e.HasAttribute("disabled") == (name == "disabled");
  }
  if (name == "checked") {
    return (e.name() == "input" && e.HasAttribute("checked")) ||
           (e.name() == "option" && e.HasAttribute("selected"));
  }
  if (name == "lang") {
    const std::string lang = InheritedLang(e);
    return lang == s.value || lang.starts_with(s.value + "-");
  }
  return false;  // visited, hover, active, focus, target
}

bool MatchSimple(const SimpleSelector &s, const Node &e) {
  switch (s.kind) {
    case Kind::kType: return e.name() == s.name;
    case Kind::kUniversal: return true;
    case Kind::kId: {
      const std::string *id = e.GetAttribute("id");
      return id != nullptr && *id == s.value;
    }
    case Kind::kClass: {
      const std::string *cls = e.GetAttribute("class");
      return cls != nullptr && ContainsWord(*cls, s.value);
    }
    case Kind::kAttribute: return MatchAttribute(s, e);
    case Kind::kPseudo: return MatchPseudo(s, e);
    case Kind::kNth:
      return MatchNth(s.a, s.b, SiblingPosition(e, s.of_type, s.from_end));
    case Kind::kNegation: return !MatchSimple(s.negated.front(), e);
  }
  return false;
}

bool MatchCompound(const CompoundSelector &c, const Node &e) {
  return std::all_of(c.parts.begin(), c.parts.end(),
                     [&](const SimpleSelector &s) { return MatchSimple(s, e); });
}

bool MatchFrom(const ComplexSelector &sel, std::size_t index, const Node &e) {
  if (!MatchCompound(sel.compounds[index], e)) return false;
  if (index == 0) return true;
  switch (sel.combinators[index - 1]) {
    case Combinator::kDescendant:
      for (const Node *a = ParentElement(e); a != nullptr; a = ParentElement(*a)) {
        if (MatchFrom(sel, index - 1, *a)) return true;
      }
      return false;
    case Combinator::kChild: {
      const Node *parent = ParentElement(e);
      return parent != nullptr && MatchFrom(sel, index - 1, *parent);
    }
    case Combinator::kAdjacent: {
      const Node *prev = e.PreviousElementSibling();
      return prev != nullptr && MatchFrom(sel, index - 1, *prev);
    }
    case Combinator::kSibling:
      for (const Node *p = e.PreviousElementSibling(); p != nullptr;
           p = p->PreviousElementSibling()) {
        if (MatchFrom(sel, index - 1, *p)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

Selector Selector::Parse(std::string_view text) {
  Selector selector;
  selector.text_ = std::string(text);
  Parser parser(text);
  selector.alternatives_ = parser.ParseGroup();
  return selector;
}

bool Selector::Matches(const Node &element) const {
  if (!element.is_element()) return false;
  return std::any_of(alternatives_.begin(), alternatives_.end(),
                     [&](const ComplexSelector &c) {
                       return MatchFrom(c, c.compounds.size() - 1, element);
                     });
}

std::vector<const Node *> Selector::SelectAll(const Node &root) const {
  std::vector<const Node *> out;
  root.ForEach([&](const Node &n) {
    if (Matches(n)) out.push_back(&n);
  });
  return out;
}

}  // namespace nif_forge::html
