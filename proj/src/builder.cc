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

#include "nif_forge/builder.h"

#include "nif_forge/unicode.h"

namespace nif_forge {

namespace {

// Any heading closes the lead section.
constexpr int kLeadLevel = 100;

}  // namespace

DocumentBuilder::DocumentBuilder(ArticleMeta meta) : meta_(std::move(meta)) {
  if (meta_.title.empty()) throw NifError("article title must be non-empty");
  if (meta_.corpus_version.empty()) {
    throw NifError("corpus version must be non-empty");
  }
  doc_.key = DocumentKey::FromMeta(meta_);
}

void DocumentBuilder::Append(std::string_view text) {
  doc_.context.text += text;
  length_ += CodePointLength(text);
}

void DocumentBuilder::ExtendOpenSections() {
  for (Open &open : open_) open.section->end = length_;
}

NifSection *DocumentBuilder::Push(int level) {
  while (!open_.empty() && open_.back().level >= level) open_.pop_back();
  auto &siblings =
      open_.empty() ? doc_.context.sections : open_.back().section->subsections;
  siblings.emplace_back();
  NifSection *section = &siblings.back();
  section->begin = section->end = length_;
  open_.push_back({level, section});
  return section;
}

void DocumentBuilder::OpenSection(int level, std::string_view title) {
  NifSection *section = Push(std::max(level, 2));
  TitleSpan span;
  span.begin = length_;
  span.text = std::string(title);
  Append(title);
  span.end = length_;
  section->title = std::move(span);
  Append("\n");
  ExtendOpenSections();
}

void DocumentBuilder::AddParagraph(std::string_view text,
                                   const std::vector<LinkSpec> &links) {
  if (text.empty()) return;
  const CodePointIndex index(text);
  std::size_t previous_end = 0;
  for (const LinkSpec &link : links) {
    if (link.begin >= link.end || link.end > index.size() ||
        link.begin < previous_end) {
      throw NifError("link span [" + std::to_string(link.begin) + "," +
                     std::to_string(link.end) +
                     ") is empty, out of bounds or overlaps its predecessor");
    }
    previous_end = link.end;
  }
  if (open_.empty()) Push(kLeadLevel);
  NifSection *section = open_.back().section;

  NifParagraph paragraph;
  paragraph.begin = length_;
  for (const LinkSpec &spec : links) {
    LinkAnnotation link;
    link.begin = length_ + spec.begin;
    link.end = length_ + spec.end;
    link.anchor = std::string(index.Slice(text, spec.begin, spec.end));
    link.target = spec.target;
    link.kind = ClassifyLink(link.anchor);
    link.provenance = spec.provenance;
    paragraph.links.push_back(std::move(link));
  }
  Append(text);
  paragraph.end = length_;
  section->paragraphs.push_back(std::move(paragraph));
  Append("\n");
  ExtendOpenSections();
}

NifDocument DocumentBuilder::Finish() {
  NifContext &ctx = doc_.context;
  ctx.begin = 0;
  ctx.end = length_;
  ctx.source_url = meta_.source_url;
  if (meta_.revision) {
    ctx.source_url += (ctx.source_url.find('?') == std::string::npos ? "?" : "&");
    ctx.source_url += "oldid=" + *meta_.revision;
  }
  ctx.predominant_language = meta_.predominant_language.empty()
                                 ? PredominantLanguageUri(meta_.language)
                                 : meta_.predominant_language;
  open_.clear();
  RebuildReferences(&doc_);
  return std::move(doc_);
}

}  // namespace nif_forge
