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


#include "nif_forge/rdf.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nif_forge/unicode.h"

namespace nif_forge {

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

namespace {

std::string Cat(std::string_view a, std::string_view b) {
  std::string s(a);
  s.append(b);
  return s;
}

// Emission order of the modeled predicates.
enum Pred {
  kType,
  kBeginIndex,
  kEndIndex,
  kAnchorOf,
  kIsString,
  kSourceUrl,
  kPredLang,
  kFirstSection,
  kLastSection,
  kHasSection,
  kFirstParagraph,
  kLastParagraph,
  kHasParagraph,
  kNextSection,
  kNextParagraph,
  kReferenceContext,
  kSuperString,
  kHasTitle,
  kTaIdentRef,
  kEnriched,
  kPredCount,
};

const std::array<std::string, kPredCount> &PredicateIris() {
  static const std::array<std::string, kPredCount> kIris = {
      Cat(ns::kRdf, "type"),
      Cat(ns::kNif, "beginIndex"),
      Cat(ns::kNif, "endIndex"),
      Cat(ns::kNif, "anchorOf"),
      Cat(ns::kNif, "isString"),
      Cat(ns::kNif, "sourceUrl"),
      Cat(ns::kNif, "predLang"),
      Cat(ns::kNif, "firstSection"),
      Cat(ns::kNif, "lastSection"),
      Cat(ns::kNif, "hasSection"),
      Cat(ns::kNif, "firstParagraph"),
      Cat(ns::kNif, "lastParagraph"),
      Cat(ns::kNif, "hasParagraph"),
      Cat(ns::kNif, "nextSection"),
      Cat(ns::kNif, "nextParagraph"),
      Cat(ns::kNif, "referenceContext"),
      Cat(ns::kNif, "superString"),
      Cat(ns::kForge, "hasTitle"),
      Cat(ns::kItsRdf, "taIdentRef"),
      Cat(ns::kForge, "enriched"),
  };
  return kIris;
}

std::optional<Pred> LookupPredicate(std::string_view iri) {
  static const std::unordered_map<std::string, Pred> kIndex = [] {
    std::unordered_map<std::string, Pred> m;
    const auto &iris = PredicateIris();
    for (int i = 0; i < kPredCount; ++i) m.emplace(iris[i], static_cast<Pred>(i));
    return m;
  }();
  auto it = kIndex.find(std::string(iri));
  if (it == kIndex.end()) return std::nullopt;
  return it->second;
}

// Classes of the modeled units.
enum class Unit { kUnknown, kContext, kSection, kTitle, kParagraph, kWord, kPhrase };

const std::string &ClassIri(Unit unit) {
  static const std::string kContext = Cat(ns::kNif, "Context");
  static const std::string kSection = Cat(ns::kNif, "Section");
  static const std::string kTitle = Cat(ns::kNif, "Title");
  static const std::string kParagraph = Cat(ns::kNif, "Paragraph");
  static const std::string kWord = Cat(ns::kNif, "Word");
  static const std::string kPhrase = Cat(ns::kNif, "Phrase");
  static const std::string kNone;
  switch (unit) {
    case Unit::kContext: return kContext;
    case Unit::kSection: return kSection;
    case Unit::kTitle: return kTitle;
    case Unit::kParagraph: return kParagraph;
    case Unit::kWord: return kWord;
    case Unit::kPhrase: return kPhrase;
    case Unit::kUnknown: break;
  }
  return kNone;
}

Unit LookupClass(std::string_view iri) {
  for (Unit u : {Unit::kContext, Unit::kSection, Unit::kTitle, Unit::kParagraph,
                 Unit::kWord, Unit::kPhrase}) {
    if (ClassIri(u) == iri) return u;
  }
  return Unit::kUnknown;
}

const std::string &NonNegativeInteger() {
  static const std::string kIri = Cat(ns::kXsd, "nonNegativeInteger");
  return kIri;
}

const std::string &XsdBoolean() {
  static const std::string kIri = Cat(ns::kXsd, "boolean");
  return kIri;
}

// ---------------------------------------------------------------------------
// Emission.

class Emitter {
 public:
  void Add(const std::string &subject, Pred pred, Term object) {
    entries_.push_back({subject, static_cast<int>(pred), entries_.size(),
                        Triple{subject, PredicateIris()[pred], std::move(object)}});
  }
  void AddIri(const std::string &subject, Pred pred, const std::string &iri) {
    Add(subject, pred, Term::Iri(iri));
  }
  void AddOptional(const std::string &subject, Pred pred,
                   const std::optional<std::string> &iri) {
    if (iri) AddIri(subject, pred, *iri);
  }
  void AddIndex(const std::string &subject, Pred pred, std::size_t value) {
    Add(subject, pred, Term::Literal(std::to_string(value), NonNegativeInteger()));
  }
  void AddType(const std::string &subject, Unit unit) {
    AddIri(subject, kType, ClassIri(unit));
  }
  void AddExtra(const Triple &t) {
    entries_.push_back({t.subject, kPredCount, entries_.size(), t});
  }

  std::vector<Triple> Finish() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry &a, const Entry &b) {
      if (a.subject != b.subject) return a.subject < b.subject;
      if (a.rank != b.rank) return a.rank < b.rank;
      return a.seq < b.seq;
    });
    std::vector<Triple> out;
    out.reserve(entries_.size());
    for (Entry &e : entries_) out.push_back(std::move(e.triple));
    return out;
  }

 private:
  struct Entry {
    std::string subject;
    int rank;
    std::size_t seq;
    Triple triple;
  };
  std::vector<Entry> entries_;
};

void EmitLink(const LinkAnnotation &link, const SerializeOptions &options,
              Emitter *e) {
  const std::string &s = link.uri;
  e->AddType(s, link.kind == LinkKind::kWord ? Unit::kWord : Unit::kPhrase);
  e->AddIndex(s, kBeginIndex, link.begin);
  e->AddIndex(s, kEndIndex, link.end);
  e->Add(s, kAnchorOf, Term::Literal(link.anchor));
  if (!link.reference_context.empty()) {
    e->AddIri(s, kReferenceContext, link.reference_context);
  }
  if (!link.paragraph.empty()) e->AddIri(s, kSuperString, link.paragraph);
  if (!link.target.empty()) e->AddIri(s, kTaIdentRef, link.target);
  if (options.mark_enriched && link.provenance == Provenance::kEnriched) {
    e->Add(s, kEnriched, Term::Literal("true", XsdBoolean()));
  }
}

void EmitSection(const NifSection &section, const std::string &context_uri,
                 const SerializeOptions &options, Emitter *e) {
  const std::string &s = section.uri;
  e->AddType(s, Unit::kSection);
  e->AddIndex(s, kBeginIndex, section.begin);
  e->AddIndex(s, kEndIndex, section.end);
  e->AddOptional(s, kFirstSection, section.first_section);
  e->AddOptional(s, kLastSection, section.last_section);
  for (const NifSection &sub : section.subsections) {
    e->AddIri(s, kHasSection, sub.uri);
  }
  e->AddOptional(s, kFirstParagraph, section.first_paragraph);
  e->AddOptional(s, kLastParagraph, section.last_paragraph);
  for (const NifParagraph &p : section.paragraphs) {
    e->AddIri(s, kHasParagraph, p.uri);
  }
  e->AddOptional(s, kNextSection, section.next_section);
  if (!section.reference_context.empty()) {
    e->AddIri(s, kReferenceContext, section.reference_context);
  }
  if (!section.parent.empty() && section.parent != context_uri) {
    e->AddIri(s, kSuperString, section.parent);
  }
  if (section.title) {
    const TitleSpan &t = *section.title;
    e->AddIri(s, kHasTitle, t.uri);
    e->AddType(t.uri, Unit::kTitle);
    e->AddIndex(t.uri, kBeginIndex, t.begin);
    e->AddIndex(t.uri, kEndIndex, t.end);
    e->Add(t.uri, kAnchorOf, Term::Literal(t.text));
    if (!t.reference_context.empty()) {
      e->AddIri(t.uri, kReferenceContext, t.reference_context);
    }
    if (!t.section.empty()) e->AddIri(t.uri, kSuperString, t.section);
  }
  for (const NifParagraph &p : section.paragraphs) {
    e->AddType(p.uri, Unit::kParagraph);
    e->AddIndex(p.uri, kBeginIndex, p.begin);
    e->AddIndex(p.uri, kEndIndex, p.end);
    e->AddOptional(p.uri, kNextParagraph, p.next_paragraph);
    if (!p.reference_context.empty()) {
      e->AddIri(p.uri, kReferenceContext, p.reference_context);
    }
    if (!p.section.empty()) e->AddIri(p.uri, kSuperString, p.section);
    for (const LinkAnnotation &link : p.links) EmitLink(link, options, e);
  }
  for (const NifSection &sub : section.subsections) {
    EmitSection(sub, context_uri, options, e);
  }
}

// ---------------------------------------------------------------------------
// Turtle.

struct Prefix {
  std::string name;
  std::string iri;
};

std::vector<Prefix> TurtlePrefixes(std::string_view language) {
  return {
      {"rdf", std::string(ns::kRdf)},
      {"xsd", std::string(ns::kXsd)},
      {"itsrdf", std::string(ns::kItsRdf)},
      {"nif", std::string(ns::kNif)},
      {"forge", std::string(ns::kForge)},
      {"ex", Cat(ns::kWikiBase, Cat(language, "/"))},
  };
}

bool IsPnCharsBase(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= 0xC0 && c <= 0xD6) || (c >= 0xD8 && c <= 0xF6) ||
         (c >= 0xF8 && c <= 0x2FF) || (c >= 0x370 && c <= 0x37D) ||
         (c >= 0x37F && c <= 0x1FFF) || (c >= 0x200C && c <= 0x200D) ||
         (c >= 0x2070 && c <= 0x218F) || (c >= 0x2C00 && c <= 0x2FEF) ||
         (c >= 0x3001 && c <= 0xD7FF) || (c >= 0xF900 && c <= 0xFDCF) ||
         (c >= 0xFDF0 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0xEFFFF);
}

bool IsHex(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
         (c >= 'A' && c <= 'F');
}

// Turtle PN_LOCAL for |local|, escaping reserved characters, or nullopt if
// the name cannot be written in prefixed form.
std::optional<std::string> EncodeLocalName(std::string_view local) {
  constexpr std::u32string_view kEscapable = U"_~.-!$&'()*+,;=/?#@%";
  const std::u32string cps = DecodeUtf8(local);
  std::string out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    const bool first = i == 0;
    if (IsPnCharsBase(c) || c == '_' || c == ':' || (c >= '0' && c <= '9')) {
      AppendUtf8(c, &out);
    } else if (!first && (c == '-' || c == 0xB7 ||
                          (c >= 0x300 && c <= 0x36F) ||
                          (c >= 0x203F && c <= 0x2040))) {
      AppendUtf8(c, &out);
    } else if (c == '%' && i + 2 < cps.size() && IsHex(cps[i + 1]) &&
               IsHex(cps[i + 2])) {
      out.push_back('%');
      AppendUtf8(cps[i + 1], &out);
      AppendUtf8(cps[i + 2], &out);
      i += 2;
    } else if (kEscapable.find(c) != std::u32string_view::npos) {
      out.push_back('\\');
      AppendUtf8(c, &out);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::string TurtleIri(const std::string &iri, const std::vector<Prefix> &prefixes) {
  const Prefix *best = nullptr;
  for (const Prefix &p : prefixes) {
    if (iri.size() > p.iri.size() && iri.compare(0, p.iri.size(), p.iri) == 0 &&
        (!best || p.iri.size() > best->iri.size())) {
      best = &p;
    }
  }
  if (best) {
    if (auto local = EncodeLocalName(std::string_view(iri).substr(best->iri.size()))) {
      return best->name + ":" + *local;
    }
  }
  return "<" + EscapeIri(iri) + ">";
}

std::string TurtleTerm(const Term &t, const std::vector<Prefix> &prefixes) {
  switch (t.type) {
    case Term::Type::kIri: return TurtleIri(t.value, prefixes);
    case Term::Type::kBlank: return t.value;
    case Term::Type::kLiteral: break;
  }
  std::string out = "\"" + EscapeLiteral(t.value) + "\"";
  if (!t.language.empty()) {
    out += "@" + t.language;
  } else if (!t.datatype.empty()) {
    out += "^^" + TurtleIri(t.datatype, prefixes);
  }
  return out;
}

void WriteTurtle(const std::vector<Triple> &triples, std::string_view language,
                 std::ostream &out) {
  const std::vector<Prefix> prefixes = TurtlePrefixes(language);
  const std::string &type = PredicateIris()[kType];
  for (std::size_t i = 0; i < triples.size();) {
    const std::string &subject = triples[i].subject;
    out << (subject.starts_with("_:") ? subject : TurtleIri(subject, prefixes));
    std::size_t j = i;
    for (; j < triples.size() && triples[j].subject == subject; ++j) {
      const Triple &t = triples[j];
      out << (j == i ? "\n    " : " ;\n    ")
          << (t.predicate == type ? std::string("a")
                                  : TurtleIri(t.predicate, prefixes))
          << ' ' << TurtleTerm(t.object, prefixes);
    }
    out << " .\n\n";
    i = j;
  }
}

// ---------------------------------------------------------------------------
// N-Triples parsing.

void AppendUchar(std::string *out, char32_t cp) {
  char buf[12];
  if (cp <= 0xFFFF) {
    std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(cp));
  } else {
    std::snprintf(buf, sizeof buf, "\\U%08X", static_cast<unsigned>(cp));
  }
  out->append(buf);
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  bool Parse(ParsedTriple *out) {
    SkipSpace();
    if (AtEnd() || s_[i_] == '#') return false;
    Triple &t = out->triple;
    t.subject = Peek() == '_' ? ReadBlank() : ReadIri();
    SkipSpace();
    t.predicate = ReadIri();
    SkipSpace();
    if (Peek() == '<') {
      t.object = Term::Iri(ReadIri());
    } else if (Peek() == '_') {
      t.object = Term{Term::Type::kBlank, ReadBlank(), {}, {}};
    } else if (Peek() == '"') {
      t.object = ReadLiteral();
    } else {
      Fail("expected an object term");
    }
    SkipSpace();
    if (Peek() != '.') Fail("expected '.' after the object");
    ++i_;
    SkipSpace();
    if (!AtEnd() && s_[i_] != '#') Fail("unexpected text after '.'");
    out->line = line_;
    return true;
  }

 private:
  bool AtEnd() const { return i_ >= s_.size(); }
  char Peek() const { return AtEnd() ? '\0' : s_[i_]; }
  void SkipSpace() {
    while (!AtEnd() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw ParseError(line_, message + " (column " + std::to_string(i_ + 1) + ")");
  }

  char32_t ReadUchar() {
    // At the 'u' or 'U' after a backslash.
    const std::size_t digits = s_[i_] == 'u' ? 4 : 8;
    ++i_;
    if (i_ + digits > s_.size()) Fail("truncated \\u escape");
    std::uint32_t cp = 0;
    const auto [ptr, ec] =
        std::from_chars(s_.data() + i_, s_.data() + i_ + digits, cp, 16);
    if (ec != std::errc() || ptr != s_.data() + i_ + digits) {
      Fail("malformed \\u escape");
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      Fail("escape denotes no Unicode scalar value");
    }
    i_ += digits;
    return cp;
  }

  std::string ReadIri() {
    if (Peek() != '<') Fail("expected '<'");
    ++i_;
    std::string iri;
    while (true) {
      if (AtEnd()) Fail("unterminated IRI");
      const char c = s_[i_];
      if (c == '>') break;
      if (c == '\\') {
        ++i_;
        if (Peek() != 'u' && Peek() != 'U') Fail("invalid escape in IRI");
        AppendUtf8(ReadUchar(), &iri);
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 ||
          std::string_view("<\"{}|^`").find(c) != std::string_view::npos) {
        Fail(std::string("character not allowed in IRI: '") + c + "'");
      }
      iri.push_back(c);
      ++i_;
    }
    ++i_;
    // Absolute IRIs only: scheme ":" ...
    const std::size_t colon = iri.find(':');
    bool scheme_ok = colon != std::string::npos && colon > 0 &&
                     std::isalpha(static_cast<unsigned char>(iri[0]));
    for (std::size_t k = 1; scheme_ok && k < colon; ++k) {
      const char c = iri[k];
      scheme_ok = std::isalnum(static_cast<unsigned char>(c)) || c == '+' ||
                  c == '-' || c == '.';
    }
    if (!scheme_ok) Fail("relative IRI <" + iri + ">");
    return iri;
  }

  std::string ReadBlank() {
    if (s_.substr(i_, 2) != "_:") Fail("expected a blank node label");
    const std::size_t start = i_;
    i_ += 2;
    while (!AtEnd()) {
      const char c = s_[i_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          c == '.' || static_cast<unsigned char>(c) >= 0x80) {
        ++i_;
      } else {
        break;
      }
    }
    while (i_ > start + 2 && s_[i_ - 1] == '.') --i_;
    if (i_ == start + 2) Fail("empty blank node label");
    return std::string(s_.substr(start, i_ - start));
  }

  Term ReadLiteral() {
    ++i_;  // opening quote
    std::string value;
    while (true) {
      if (AtEnd()) Fail("unterminated string literal");
      const char c = s_[i_];
      if (c == '"') break;
      if (c == '\\') {
        ++i_;
        switch (Peek()) {
          case 't': value.push_back('\t'); break;
          case 'b': value.push_back('\b'); break;
          case 'n': value.push_back('\n'); break;
          case 'r': value.push_back('\r'); break;
          case 'f': value.push_back('\f'); break;
          case '"': value.push_back('"'); break;
          case '\'': value.push_back('\''); break;
          case '\\': value.push_back('\\'); break;
          case 'u':
          case 'U':
            AppendUtf8(ReadUchar(), &value);
            continue;
          default:
            Fail("invalid escape sequence in literal");
        }
        ++i_;
        continue;
      }
      value.push_back(c);
      ++i_;
    }
    ++i_;
    Term term = Term::Literal(std::move(value));
    if (s_.substr(i_, 2) == "^^") {
      i_ += 2;
      term.datatype = ReadIri();
    } else if (Peek() == '@') {
      ++i_;
      const std::size_t start = i_;
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                          s_[i_] == '-')) {
        ++i_;
      }
      if (i_ == start || !std::isalpha(static_cast<unsigned char>(s_[start]))) {
        Fail("malformed language tag");
      }
      term.language = std::string(s_.substr(start, i_ - start));
    }
    return term;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Assembly.

struct Field {
  std::string value;
  const ParsedTriple *source = nullptr;
};

struct Record {
  std::string subject;
  Unit unit = Unit::kUnknown;
  std::size_t line = 0;  // first triple of the subject
  std::vector<const ParsedTriple *> triples;
  std::vector<bool> consumed;

  std::optional<std::size_t> begin, end;
  std::optional<Field> fields[kPredCount];
  std::vector<Field> has_section, has_paragraph;
  bool enriched = false;
};

constexpr std::array<std::array<bool, kPredCount>, 7> AllowedPredicates() {
  std::array<std::array<bool, kPredCount>, 7> t{};
  auto allow = [&t](Unit u, std::initializer_list<Pred> preds) {
    for (Pred p : preds) t[static_cast<int>(u)][p] = true;
  };
  allow(Unit::kContext, {kBeginIndex, kEndIndex, kIsString, kSourceUrl,
                         kPredLang, kFirstSection, kLastSection, kHasSection});
  allow(Unit::kSection,
        {kBeginIndex, kEndIndex, kFirstSection, kLastSection, kHasSection,
         kFirstParagraph, kLastParagraph, kHasParagraph, kNextSection,
         kReferenceContext, kSuperString, kHasTitle});
  allow(Unit::kTitle, {kBeginIndex, kEndIndex, kAnchorOf, kReferenceContext,
                       kSuperString});
  allow(Unit::kParagraph, {kBeginIndex, kEndIndex, kNextParagraph,
                           kReferenceContext, kSuperString});
  for (Unit u : {Unit::kWord, Unit::kPhrase}) {
    allow(u, {kBeginIndex, kEndIndex, kAnchorOf, kReferenceContext,
              kSuperString, kTaIdentRef, kEnriched});
  }
  return t;
}

bool IsLiteralPredicate(Pred p) {
  return p == kBeginIndex || p == kEndIndex || p == kAnchorOf ||
         p == kIsString || p == kEnriched;
}

std::size_t ParseIndex(const ParsedTriple &pt) {
  const std::string &v = pt.triple.object.value;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    const std::string &pred = pt.triple.predicate;
    throw ParseError(pt.line, "nif:" + pred.substr(pred.rfind('#') + 1) +
                                  " is not a non-negative integer: \"" + v +
                                  "\"");
  }
  return value;
}

void Classify(Record *r) {
  const std::string &type = PredicateIris()[kType];
  for (std::size_t i = 0; i < r->triples.size(); ++i) {
    const Triple &t = r->triples[i]->triple;
    if (t.predicate != type || t.object.type != Term::Type::kIri) continue;
    const Unit u = LookupClass(t.object.value);
    if (u != Unit::kUnknown && r->unit == Unit::kUnknown) {
      r->unit = u;
      r->consumed[i] = true;
    }
  }
  if (r->unit == Unit::kUnknown) return;
  static constexpr auto kAllowed = AllowedPredicates();
  const auto &allowed = kAllowed[static_cast<int>(r->unit)];
  for (std::size_t i = 0; i < r->triples.size(); ++i) {
    if (r->consumed[i]) continue;
    const ParsedTriple &pt = *r->triples[i];
    const Triple &t = pt.triple;
    const std::optional<Pred> pred = LookupPredicate(t.predicate);
    if (!pred || !allowed[*pred]) continue;
    const bool literal = t.object.type == Term::Type::kLiteral;
    if (literal != IsLiteralPredicate(*pred)) continue;
    if (*pred == kHasSection || *pred == kHasParagraph) {
      auto &list = *pred == kHasSection ? r->has_section : r->has_paragraph;
      list.push_back({t.object.value, &pt});
      r->consumed[i] = true;
      continue;
    }
    if (r->fields[*pred]) continue;  // duplicate: kept verbatim
    if (*pred == kEnriched) {
      if (t.object.value != "true") continue;
      r->enriched = true;
    } else if (*pred == kBeginIndex) {
      r->begin = ParseIndex(pt);
    } else if (*pred == kEndIndex) {
      r->end = ParseIndex(pt);
    }
    r->fields[*pred] = Field{t.object.value, &pt};
    r->consumed[i] = true;
  }
}

std::optional<std::string> Opt(const Record &r, Pred p) {
  if (!r.fields[p]) return std::nullopt;
  return r.fields[p]->value;
}

std::string Get(const Record &r, Pred p) {
  return r.fields[p] ? r.fields[p]->value : std::string();
}

void Require(const Record &r, Pred p) {
  if (!r.fields[p]) {
    const std::string &pred = PredicateIris()[p];
    throw ParseError(r.line, "<" + r.subject + "> has no " +
                                 pred.substr(pred.rfind('#') + 1));
  }
}

void RequireSpan(const Record &r) {
  Require(r, kBeginIndex);
  Require(r, kEndIndex);
}

class Assembler {
 public:
  Assembler(const std::vector<ParsedTriple> &triples,
            std::vector<AssemblyIssue> *issues)
      : issues_(issues) {
    for (const ParsedTriple &pt : triples) {
      Record &r = records_[pt.triple.subject];
      if (r.triples.empty()) {
        r.subject = pt.triple.subject;
        r.line = pt.line;
      }
      r.triples.push_back(&pt);
      r.consumed.push_back(false);
    }
    for (auto &[subject, r] : records_) Classify(&r);
    for (const auto &[subject, r] : records_) {
      if (r.unit == Unit::kContext && context_uri_.empty()) context_uri_ = subject;
    }
    for (const auto &[subject, r] : records_) {
      if (r.unit != Unit::kSection) continue;
      const std::string owner =
          r.fields[kSuperString] ? r.fields[kSuperString]->value : context_uri_;
      section_children_[owner].push_back(&r);
    }
  }

  NifDocument Run(std::size_t first_line) {
    const Record *context = nullptr;
    for (const auto &[subject, r] : records_) {
      if (r.unit != Unit::kContext) continue;
      if (context) {
        throw ParseError(r.line, "second nif:Context <" + r.subject +
                                     "> in the document of <" +
                                     context->subject + ">");
      }
      context = &r;
    }
    if (!context) {
      const std::string subject =
          records_.empty() ? std::string() : records_.begin()->first;
      throw ParseError(first_line,
                       "<" + subject + "> does not belong to any nif:Context");
    }
    std::optional<DocumentKey> key = ParseContextUri(context->subject);
    if (!key) {
      throw ParseError(context->line, "context URI <" + context->subject +
                                          "> does not follow the URI scheme");
    }
    RequireSpan(*context);
    Require(*context, kIsString);

    NifDocument doc;
    doc.key = *key;
    NifContext &ctx = doc.context;
    ctx.uri = context->subject;
    ctx.text = Get(*context, kIsString);
    ctx.begin = *context->begin;
    ctx.end = *context->end;
    ctx.source_url = Get(*context, kSourceUrl);
    ctx.predominant_language = Get(*context, kPredLang);
    ctx.first_section = Opt(*context, kFirstSection);
    ctx.last_section = Opt(*context, kLastSection);

    BuildSections(ctx.uri, &ctx.sections);
    std::unordered_map<std::string, NifSection *> sections;
    ForEachSection(ctx, [&](NifSection &s) { sections[s.uri] = &s; });
    for (const auto &[subject, r] : records_) {
      if (r.unit == Unit::kSection && !sections.count(subject)) {
        Issue(r, "section is not reachable from the context through "
                 "nif:superString",
              true);
      }
    }
    CheckMembers(*context, context->has_section, ctx.sections, "nif:hasSection");
    AttachTitles(sections);
    AttachParagraphs(sections);
    std::unordered_map<std::string, NifParagraph *> paragraphs;
    ForEachSection(ctx, [&](NifSection &s) {
      for (NifParagraph &p : s.paragraphs) paragraphs[p.uri] = &p;
    });
    AttachLinks(paragraphs, &doc);

    for (const auto &[subject, r] : records_) {
      for (std::size_t i = 0; i < r.triples.size(); ++i) {
        if (!r.consumed[i]) doc.extra.push_back(r.triples[i]->triple);
      }
    }
    for (const ParsedTriple *pt : unmatched_) doc.extra.push_back(pt->triple);
    std::sort(doc.extra.begin(), doc.extra.end());
    return doc;
  }

 private:
  void Issue(const Record &r, std::string detail, bool fatal,
             std::size_t line = 0) {
    if (issues_) {
      issues_->push_back({r.subject, std::move(detail), line ? line : r.line, fatal});
    }
  }

  template <typename T>
  static void SortBySpan(std::vector<T> *v) {
    std::sort(v->begin(), v->end(), [](const T &a, const T &b) {
      if (a.begin != b.begin) return a.begin < b.begin;
      if (a.end != b.end) return a.end < b.end;
      return a.uri < b.uri;
    });
  }

  // Collects the sections whose superString (or, for none, the context) is
  // |parent|, recursively.
  void BuildSections(const std::string &parent, std::vector<NifSection> *out) {
    auto children = section_children_.find(parent);
    if (children == section_children_.end()) return;
    std::vector<const Record *> members = std::move(children->second);
    section_children_.erase(children);  // guards against cycles
    for (const Record *record : members) {
      const Record &r = *record;
      RequireSpan(r);
      NifSection s;
      s.uri = r.subject;
      s.begin = *r.begin;
      s.end = *r.end;
      s.first_paragraph = Opt(r, kFirstParagraph);
      s.last_paragraph = Opt(r, kLastParagraph);
      s.first_section = Opt(r, kFirstSection);
      s.last_section = Opt(r, kLastSection);
      s.next_section = Opt(r, kNextSection);
      s.parent = parent;
      s.reference_context = Get(r, kReferenceContext);
      out->push_back(std::move(s));
    }
    SortBySpan(out);
    for (NifSection &s : *out) {
      BuildSections(s.uri, &s.subsections);
      CheckMembers(records_.at(s.uri), records_.at(s.uri).has_section,
                   s.subsections, "nif:hasSection");
    }
  }

  // Compares a membership list with the actual children. Unmatched entries
  // are kept as extra triples.
  template <typename T>
  void CheckMembers(const Record &owner, const std::vector<Field> &listed,
                    const std::vector<T> &children, const char *relation) {
    std::set<std::string> actual;
    for (const T &c : children) actual.insert(c.uri);
    std::set<std::string> seen;
    for (const Field &f : listed) {
      if (actual.count(f.value) && seen.insert(f.value).second) continue;
      unmatched_.push_back(f.source);
      Issue(owner,
            std::string(relation) + " <" + f.value +
                "> is not a child of this unit",
            false, f.source->line);
    }
    for (const std::string &uri : actual) {
      if (!seen.count(uri)) {
        Issue(owner, std::string(relation) + " does not list child <" + uri + ">",
              false);
      }
    }
  }

  void AttachTitles(std::unordered_map<std::string, NifSection *> &sections) {
    std::set<std::string> used;
    for (auto &[uri, section] : sections) {
      const Record &sr = records_.at(uri);
      if (!sr.fields[kHasTitle]) continue;
      const Field &f = *sr.fields[kHasTitle];
      auto it = records_.find(f.value);
      if (it == records_.end() || it->second.unit != Unit::kTitle ||
          !used.insert(f.value).second) {
        unmatched_.push_back(f.source);
        Issue(sr, "forge:hasTitle <" + f.value + "> is not a nif:Title",
              false, f.source->line);
        continue;
      }
      const Record &tr = it->second;
      RequireSpan(tr);
      TitleSpan t;
      t.uri = tr.subject;
      t.begin = *tr.begin;
      t.end = *tr.end;
      t.text = Get(tr, kAnchorOf);
      t.section = Get(tr, kSuperString);
      t.reference_context = Get(tr, kReferenceContext);
      section->title = std::move(t);
    }
    for (const auto &[subject, r] : records_) {
      if (r.unit == Unit::kTitle && !used.count(subject)) {
        Issue(r, "title is not referenced by any section", true);
      }
    }
  }

  void AttachParagraphs(std::unordered_map<std::string, NifSection *> &sections) {
    for (const auto &[subject, r] : records_) {
      if (r.unit != Unit::kParagraph) continue;
      RequireSpan(r);
      const std::string owner = Get(r, kSuperString);
      auto it = sections.find(owner);
      if (it == sections.end()) {
        Issue(r, "paragraph's nif:superString <" + owner +
                     "> is not a section of this document",
              true);
        continue;
      }
      NifParagraph p;
      p.uri = subject;
      p.begin = *r.begin;
      p.end = *r.end;
      p.next_paragraph = Opt(r, kNextParagraph);
      p.section = owner;
      p.reference_context = Get(r, kReferenceContext);
      it->second->paragraphs.push_back(std::move(p));
    }
    for (auto &[uri, section] : sections) {
      SortBySpan(&section->paragraphs);
      const Record &sr = records_.at(uri);
      CheckMembers(sr, sr.has_paragraph, section->paragraphs, "nif:hasParagraph");
    }
  }

  void AttachLinks(std::unordered_map<std::string, NifParagraph *> &paragraphs,
                   NifDocument *doc) {
    for (const auto &[subject, r] : records_) {
      if (r.unit != Unit::kWord && r.unit != Unit::kPhrase) continue;
      RequireSpan(r);
      LinkAnnotation link;
      link.uri = subject;
      link.begin = *r.begin;
      link.end = *r.end;
      link.anchor = Get(r, kAnchorOf);
      link.target = Get(r, kTaIdentRef);
      link.kind = r.unit == Unit::kWord ? LinkKind::kWord : LinkKind::kPhrase;
      link.provenance = r.enriched ? Provenance::kEnriched : Provenance::kOriginal;
      link.paragraph = Get(r, kSuperString);
      link.reference_context = Get(r, kReferenceContext);
      auto it = paragraphs.find(link.paragraph);
      if (it != paragraphs.end()) {
        it->second->links.push_back(std::move(link));
        continue;
      }
      if (!link.paragraph.empty()) {
        Issue(r, "link's nif:superString <" + link.paragraph +
                     "> is not a paragraph of this document",
              false);
      }
      doc->loose_links.push_back(std::move(link));
    }
    for (auto &[uri, p] : paragraphs) SortBySpan(&p->links);
    SortBySpan(&doc->loose_links);
  }

  std::map<std::string, Record> records_;
  std::string context_uri_;
  std::unordered_map<std::string, std::vector<const Record *>> section_children_;
  std::vector<const ParsedTriple *> unmatched_;
  std::vector<AssemblyIssue> *issues_;
};

}  // namespace

// ---------------------------------------------------------------------------

std::string EscapeLiteral(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
          AppendUchar(&out, static_cast<unsigned char>(c));
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

std::string EscapeIri(std::string_view iri) {
  std::string out;
  out.reserve(iri.size());
  for (char c : iri) {
    if (static_cast<unsigned char>(c) <= 0x20 ||
        std::string_view("<>\"{}|^`\\").find(c) != std::string_view::npos) {
      AppendUchar(&out, static_cast<unsigned char>(c));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

std::string FormatTerm(const Term &t) {
  switch (t.type) {
    case Term::Type::kIri: return "<" + EscapeIri(t.value) + ">";
    case Term::Type::kBlank: return t.value;
    case Term::Type::kLiteral: break;
  }
  std::string out = "\"" + EscapeLiteral(t.value) + "\"";
  if (!t.language.empty()) {
    out += "@" + t.language;
  } else if (!t.datatype.empty()) {
    out += "^^<" + EscapeIri(t.datatype) + ">";
  }
  return out;
}

}  // namespace

std::string FormatNTriple(const Triple &t) {
  std::string out =
      t.subject.starts_with("_:") ? t.subject : "<" + EscapeIri(t.subject) + ">";
  out += " <" + EscapeIri(t.predicate) + "> " + FormatTerm(t.object) + " .";
  return out;
}

std::vector<Triple> ToTriples(const NifDocument &doc,
                              const SerializeOptions &options) {
  Emitter e;
  const NifContext &ctx = doc.context;
  const std::string &s = ctx.uri;
  e.AddType(s, Unit::kContext);
  e.AddIndex(s, kBeginIndex, ctx.begin);
  e.AddIndex(s, kEndIndex, ctx.end);
  e.Add(s, kIsString, Term::Literal(ctx.text));
  if (!ctx.source_url.empty()) e.AddIri(s, kSourceUrl, ctx.source_url);
  if (!ctx.predominant_language.empty()) {
    e.AddIri(s, kPredLang, ctx.predominant_language);
  }
  e.AddOptional(s, kFirstSection, ctx.first_section);
  e.AddOptional(s, kLastSection, ctx.last_section);
  for (const NifSection &section : ctx.sections) {
    e.AddIri(s, kHasSection, section.uri);
  }
  for (const NifSection &section : ctx.sections) {
    EmitSection(section, ctx.uri, options, &e);
  }
  for (const LinkAnnotation &link : doc.loose_links) EmitLink(link, options, &e);
  std::vector<Triple> extra = doc.extra;
  std::sort(extra.begin(), extra.end());
  for (const Triple &t : extra) e.AddExtra(t);
  return e.Finish();
}

std::string TurtleHeader(std::string_view language) {
  std::string out;
  for (const Prefix &p : TurtlePrefixes(language)) {
    out += "@prefix " + p.name + ": <" + p.iri + "> .\n";
  }
  out += "\n";
  return out;
}

std::size_t WriteDocumentBody(const NifDocument &doc, RdfFormat format,
                              std::ostream &out, const SerializeOptions &options,
                              std::string_view turtle_language) {
  const std::vector<Triple> triples = ToTriples(doc, options);
  if (format == RdfFormat::kNTriples) {
    for (const Triple &t : triples) out << FormatNTriple(t) << '\n';
  } else {
    WriteTurtle(triples, turtle_language, out);
  }
  if (!out) throw std::ios_base::failure("write to the RDF sink failed");
  return triples.size();
}

std::size_t Serialize(const NifDocument &doc, RdfFormat format,
                      std::ostream &out, const SerializeOptions &options) {
  if (format == RdfFormat::kTurtle) out << TurtleHeader(doc.key.language);
  return WriteDocumentBody(doc, format, out, options, doc.key.language);
}

std::size_t SerializeCorpus(const std::vector<NifDocument> &docs,
                            RdfFormat format, std::ostream &out,
                            const SerializeOptions &options) {
  std::vector<const NifDocument *> order;
  for (const NifDocument &d : docs) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(),
                   [](const NifDocument *a, const NifDocument *b) {
                     return a->context.uri < b->context.uri;
                   });
  const std::string language = order.empty() ? "en" : order.front()->key.language;
  if (format == RdfFormat::kTurtle) out << TurtleHeader(language);
  std::size_t n = 0;
  for (const NifDocument *d : order) {
    n += WriteDocumentBody(*d, format, out, options, language);
  }
  if (!out) throw std::ios_base::failure("write to the RDF sink failed");
  return n;
}

bool ParseNTriplesLine(std::string_view line, std::size_t line_no,
                       ParsedTriple *out) {
  return LineParser(line, line_no).Parse(out);
}

bool NTriplesReader::Next(ParsedTriple *out, std::vector<ParseError> *errors) {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    SanitizedText clean = SanitizeUtf8(raw);
    if (clean.dropped > 0) {
      dropped_ += clean.dropped;
      dropped_lines_.push_back(line_);
    }
    try {
      if (ParseNTriplesLine(clean.text, line_, out)) return true;
    } catch (const ParseError &e) {
      if (!errors) throw;
      errors->push_back(e);
    }
  }
  return false;
}

NifDocument AssembleDocument(const std::vector<ParsedTriple> &triples,
                             std::vector<AssemblyIssue> *issues) {
  Assembler assembler(triples, issues);
  return assembler.Run(triples.empty() ? 0 : triples.front().line);
}

namespace {

NifDocument AssembleStrict(const std::vector<ParsedTriple> &triples) {
  std::vector<AssemblyIssue> issues;
  NifDocument doc = AssembleDocument(triples, &issues);
  for (const AssemblyIssue &issue : issues) {
    if (issue.fatal) {
      throw ParseError(issue.line, "<" + issue.subject + ">: " + issue.detail);
    }
  }
  return doc;
}

}  // namespace

std::vector<NifDocument> Parse(std::istream &in) {
  NTriplesReader reader(in);
  std::map<std::string, std::vector<ParsedTriple>> groups;
  ParsedTriple pt;
  while (reader.Next(&pt)) {
    const std::string_view prefix = DocumentPrefix(pt.triple.subject);
    if (prefix.empty()) {
      throw ParseError(pt.line, "subject <" + pt.triple.subject +
                                    "> is outside the corpus namespace");
    }
    groups[std::string(prefix)].push_back(pt);
  }
  std::vector<NifDocument> docs;
  for (auto &[prefix, triples] : groups) docs.push_back(AssembleStrict(triples));
  std::sort(docs.begin(), docs.end(), [](const NifDocument &a, const NifDocument &b) {
    return a.context.uri < b.context.uri;
  });
  return docs;
}


void ForEachDocument(std::istream &in,
                     const std::function<void(NifDocument &&)> &fn) {
  NTriplesReader reader(in);
  std::set<std::string> finished;
  std::string current;
  std::vector<ParsedTriple> group;
  ParsedTriple pt;
  while (reader.Next(&pt)) {
    const std::string_view prefix = DocumentPrefix(pt.triple.subject);
    if (prefix.empty()) {
      throw ParseError(pt.line, "subject <" + pt.triple.subject +
                                    "> is outside the corpus namespace");
    }
    if (prefix != current) {
      if (!group.empty()) {
        fn(AssembleStrict(group));
        group.clear();
        finished.insert(current);
      }
      current = std::string(prefix);
      if (finished.count(current)) {
        throw ParseError(pt.line, "triples of <" + current +
                                      "> are not contiguous");
      }
    }
    group.push_back(std::move(pt));
    pt = ParsedTriple();
  }
  if (!group.empty()) fn(AssembleStrict(group));
}

std::vector<NifDocument> ParseString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

}  // namespace nif_forge
