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


#include "nif_forge/validator.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "nif_forge/rdf.h"

namespace nif_forge {

namespace {

std::string Span(std::size_t begin, std::size_t end) {
  return "[" + std::to_string(begin) + "," + std::to_string(end) + ")";
}

class OffsetChecker {
 public:
  explicit OffsetChecker(const NifDocument &doc)
      : text_(doc.context.text), index_(doc.context.text), out_() {}

  void Context(const NifContext &ctx) {
    if (ctx.begin != 0 || ctx.end != index_.size()) {
      Add(rules::kBounds, ctx.uri,
          "context span " + Span(ctx.begin, ctx.end) +
              " does not cover the text of length " +
              std::to_string(index_.size()));
    }
  }

  // |stored| is the span's own text, if it has one.
  void Check(const std::string &uri, std::size_t begin, std::size_t end,
             const std::string *stored) {
    if (begin > end) {
      Add(rules::kBounds, uri, "begin " + std::to_string(begin) + " > end " +
                                   std::to_string(end));
      return;
    }
    if (end > index_.size()) {
      Add(rules::kBounds, uri,
          "end " + std::to_string(end) + " exceeds the context length " +
              std::to_string(index_.size()));
      return;
    }
    if (stored) {
      const std::string_view actual = index_.Slice(text_, begin, end);
      if (actual != *stored) {
        Add(rules::kSubstring, uri,
            "stored text \"" + *stored + "\" differs from context" +
                Span(begin, end) + " \"" + std::string(actual) + "\"");
        return;
      }
    }
    const auto span = SpanFromUri(uri);
    if (!span || span->first != begin || span->second != end) {
      Add(rules::kUriSpan, uri,
          "URI does not encode the span " + Span(begin, end));
    }
  }

  std::vector<Violation> Take() { return std::move(out_); }

 private:
  void Add(std::string_view rule, const std::string &subject, std::string detail) {
    out_.push_back({std::string(rule), subject, std::move(detail), 0});
  }

  const std::string &text_;
  CodePointIndex index_;
  std::vector<Violation> out_;
};

void CheckSectionOffsets(const NifSection &s, OffsetChecker *c) {
  c->Check(s.uri, s.begin, s.end, nullptr);
  if (s.title) c->Check(s.title->uri, s.title->begin, s.title->end, &s.title->text);
  for (const NifParagraph &p : s.paragraphs) {
    c->Check(p.uri, p.begin, p.end, nullptr);
    for (const LinkAnnotation &l : p.links) c->Check(l.uri, l.begin, l.end, &l.anchor);
  }
  for (const NifSection &sub : s.subsections) CheckSectionOffsets(sub, c);
}

std::string Describe(const std::optional<std::string> &uri) {
  return uri ? "<" + *uri + ">" : std::string("none");
}

class StructureChecker {
 public:
  explicit StructureChecker(const NifDocument &doc) : doc_(doc) {}

  std::vector<Violation> Run() {
    const NifContext &ctx = doc_.context;
    Chain(ctx.uri, "nif:firstSection", ctx.first_section,
          ctx.sections.empty() ? std::nullopt
                               : std::optional(ctx.sections.front().uri));
    Chain(ctx.uri, "nif:lastSection", ctx.last_section,
          ctx.sections.empty() ? std::nullopt
                               : std::optional(ctx.sections.back().uri));
    Sections(ctx.sections, ctx.uri, ctx.begin, ctx.end);
    Links(doc_.loose_links, ctx.uri, ctx.begin, ctx.end);
    return std::move(out_);
  }

 private:
  void Add(std::string_view rule, const std::string &subject, std::string detail) {
    out_.push_back({std::string(rule), subject, std::move(detail), 0});
  }

  void Chain(const std::string &subject, const char *relation,
             const std::optional<std::string> &stored,
             const std::optional<std::string> &expected) {
    if (stored != expected) {
      Add(rules::kChain, subject,
          std::string(relation) + " is " + Describe(stored) + ", expected " +
              Describe(expected));
    }
  }

  void Reference(const std::string &subject, const std::string &reference) {
    if (reference != doc_.context.uri) {
      Add(rules::kReference, subject,
          "nif:referenceContext <" + reference + "> is not <" +
              doc_.context.uri + ">");
    }
  }

  void Contained(const std::string &subject, std::size_t begin, std::size_t end,
                 const std::string &parent, std::size_t pbegin,
                 std::size_t pend) {
    if (begin < pbegin || end > pend) {
      Add(rules::kContainment, subject,
          "span " + Span(begin, end) + " escapes <" + parent + "> " +
              Span(pbegin, pend));
    }
  }

  template <typename T>
  void Overlaps(const std::vector<T> &siblings) {
    for (std::size_t i = 1; i < siblings.size(); ++i) {
      const T &prev = siblings[i - 1];
      const T &cur = siblings[i];
      if (cur.begin < prev.end && prev.begin < cur.end) {
        Add(rules::kOverlap, cur.uri,
            "span " + Span(cur.begin, cur.end) + " overlaps <" + prev.uri +
                "> " + Span(prev.begin, prev.end));
      }
    }
  }

  void Sections(const std::vector<NifSection> &sections,
                const std::string &parent, std::size_t pbegin, std::size_t pend) {
    Overlaps(sections);
    for (std::size_t i = 0; i < sections.size(); ++i) {
      const NifSection &s = sections[i];
      Contained(s.uri, s.begin, s.end, parent, pbegin, pend);
      Reference(s.uri, s.reference_context);
      Chain(s.uri, "nif:nextSection", s.next_section,
            i + 1 < sections.size() ? std::optional(sections[i + 1].uri)
                                    : std::nullopt);
      Chain(s.uri, "nif:firstParagraph", s.first_paragraph,
            s.paragraphs.empty() ? std::nullopt
                                 : std::optional(s.paragraphs.front().uri));
      Chain(s.uri, "nif:lastParagraph", s.last_paragraph,
            s.paragraphs.empty() ? std::nullopt
                                 : std::optional(s.paragraphs.back().uri));
      Chain(s.uri, "nif:firstSection", s.first_section,
            s.subsections.empty() ? std::nullopt
                                  : std::optional(s.subsections.front().uri));
      Chain(s.uri, "nif:lastSection", s.last_section,
            s.subsections.empty() ? std::nullopt
                                  : std::optional(s.subsections.back().uri));
      if (s.title) {
        const TitleSpan &t = *s.title;
        Contained(t.uri, t.begin, t.end, s.uri, s.begin, s.end);
        Reference(t.uri, t.reference_context);
        if (t.section != s.uri) {
          Add(rules::kContainment, t.uri,
              "nif:superString <" + t.section + "> is not the titled section <" +
                  s.uri + ">");
        }
      }
      Overlaps(s.paragraphs);
      for (std::size_t j = 0; j < s.paragraphs.size(); ++j) {
        const NifParagraph &p = s.paragraphs[j];
        Contained(p.uri, p.begin, p.end, s.uri, s.begin, s.end);
        Reference(p.uri, p.reference_context);
        Chain(p.uri, "nif:nextParagraph", p.next_paragraph,
              j + 1 < s.paragraphs.size() ? std::optional(s.paragraphs[j + 1].uri)
                                          : std::nullopt);
        Links(p.links, p.uri, p.begin, p.end);
      }
      Sections(s.subsections, s.uri, s.begin, s.end);
    }
  }

  void Links(const std::vector<LinkAnnotation> &links, const std::string &parent,
             std::size_t pbegin, std::size_t pend) {
    Overlaps(links);
    for (const LinkAnnotation &l : links) {
      Contained(l.uri, l.begin, l.end, parent, pbegin, pend);
      Reference(l.uri, l.reference_context);
      const std::size_t tokens = CountTokens(l.anchor);
      if (tokens == 0) {
        Add(rules::kLinkClass, l.uri, "anchor is empty or blank");
      } else if (l.kind == LinkKind::kWord && tokens > 1) {
        Add(rules::kLinkClass, l.uri,
            "nif:Word has a multi-token anchor \"" + l.anchor + "\"");
      } else if (l.kind == LinkKind::kPhrase && tokens == 1) {
        Add(rules::kLinkClass, l.uri,
            "nif:Phrase has a single-token anchor \"" + l.anchor + "\"");
      }
    }
  }

  const NifDocument &doc_;
  std::vector<Violation> out_;
};

std::vector<Violation> ValidateGroup(const std::vector<ParsedTriple> &triples) {
  std::vector<Violation> out;
  std::vector<AssemblyIssue> issues;
  NifDocument doc;
  try {
    doc = AssembleDocument(triples, &issues);
  } catch (const ParseError &e) {
    const std::string subject = triples.empty() ? "" : triples.front().triple.subject;
    out.push_back({std::string(rules::kSyntax), subject, e.what(), e.line()});
    return out;
  }
  for (AssemblyIssue &issue : issues) {
    out.push_back({std::string(rules::kContainment), std::move(issue.subject),
                   std::move(issue.detail), issue.line});
  }
  std::vector<Violation> offsets = CheckOffsets(doc);
  std::vector<Violation> structure = CheckStructure(doc);
  out.insert(out.end(), offsets.begin(), offsets.end());
  out.insert(out.end(), structure.begin(), structure.end());
  return out;
}

}  // namespace

std::vector<Violation> CheckOffsets(const NifDocument &doc) {
  OffsetChecker checker(doc);
  checker.Context(doc.context);
  for (const NifSection &s : doc.context.sections) CheckSectionOffsets(s, &checker);
  for (const LinkAnnotation &l : doc.loose_links) {
    checker.Check(l.uri, l.begin, l.end, &l.anchor);
  }
  return checker.Take();
}

std::vector<Violation> CheckStructure(const NifDocument &doc) {
  return StructureChecker(doc).Run();
}

ValidationReport ValidateStream(std::istream &in, int workers) {
  workers = std::max(workers, 1);
  ValidationReport report;
  NTriplesReader reader(in);
  std::vector<ParseError> syntax_errors;

  constexpr std::size_t kBatch = 64;
  std::vector<std::vector<ParsedTriple>> batch;
  auto flush = [&] {
    std::vector<std::vector<Violation>> results(batch.size());
    if (workers == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = ValidateGroup(batch[i]);
    } else {
      std::vector<std::future<void>> tasks;
      const std::size_t stride = static_cast<std::size_t>(workers);
      for (std::size_t w = 0; w < stride; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t i = w; i < batch.size(); i += stride) {
            results[i] = ValidateGroup(batch[i]);
          }
        }));
      }
      for (auto &t : tasks) t.get();
    }
    for (auto &r : results) {
      report.violations.insert(report.violations.end(),
                               std::make_move_iterator(r.begin()),
                               std::make_move_iterator(r.end()));
    }
    report.documents += batch.size();
    batch.clear();
  };

  std::string current;
  std::vector<ParsedTriple> group;
  ParsedTriple pt;
  while (reader.Next(&pt, &syntax_errors)) {
    ++report.checked_triples;
    const std::string_view prefix = DocumentPrefix(pt.triple.subject);
    if (prefix.empty()) {
      report.violations.push_back({std::string(rules::kSyntax), pt.triple.subject,
                                   "subject is outside the corpus namespace",
                                   pt.line});
      continue;
    }
    if (prefix != current) {
      if (!group.empty()) batch.push_back(std::move(group));
      group.clear();
      current = std::string(prefix);
      if (batch.size() >= kBatch) flush();
    }
    group.push_back(std::move(pt));
    pt = ParsedTriple();
  }
  if (!group.empty()) batch.push_back(std::move(group));
  flush();

  for (const ParseError &e : syntax_errors) {
    report.violations.push_back({std::string(rules::kSyntax), "", e.what(), e.line()});
  }
  for (std::size_t line : reader.lines_with_dropped_bytes()) {
    report.violations.push_back({std::string(rules::kEncoding), "",
                                 "ill-formed UTF-8 dropped", line});
  }
  report.dropped_codepoints = reader.dropped_sequences();
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation &a, const Violation &b) {
              return std::tie(a.subject, a.rule, a.line, a.detail) <
                     std::tie(b.subject, b.rule, b.line, b.detail);
            });
  return report;
}

ValidationReport ValidateCorpus(const std::filesystem::path &path, int workers) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return ValidateStream(in, workers);
}

void WriteReportJsonLines(std::ostream &out, const ValidationReport &report) {
  for (const Violation &v : report.violations) {
    nlohmann::json j = {{"rule", v.rule}, {"subject", v.subject}, {"detail", v.detail}};
    if (v.line > 0) j["line"] = v.line;
    out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
  }
}

void WriteReportText(std::ostream &out, const ValidationReport &report) {
  for (const Violation &v : report.violations) {
    out << v.rule;
    if (v.line > 0) out << " line " << v.line;
    if (!v.subject.empty()) out << " <" << v.subject << ">";
    out << ": " << v.detail << '\n';
  }
  out << report.checked_triples << " triples in " << report.documents
      << " documents checked, " << report.violations.size() << " violations, "
      << report.dropped_codepoints << " ill-formed sequences dropped\n";
}

}  // namespace nif_forge
