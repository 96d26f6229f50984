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

#include "nif_forge/enricher.h"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "nif_forge/profile.h"
#include "nif_forge/stats.h"
#include "nif_forge/unicode.h"

namespace nif_forge {

namespace {

bool TitleExcluded(const NifSection &section,
                   const std::vector<std::string> &folded_titles) {
  if (!section.title) return false;
  const std::string title = FoldCase(TrimWhitespace(section.title->text));
  return std::find(folded_titles.begin(), folded_titles.end(), title) !=
         folded_titles.end();
}

std::vector<std::string> FoldedTitles(const std::vector<std::string> &titles) {
  const std::vector<std::string> &source =
      titles.empty() ? DefaultExcludedSections() : titles;
  std::vector<std::string> folded;
  for (const std::string &t : source) folded.push_back(FoldCase(TrimWhitespace(t)));
  return folded;
}

struct ParagraphSlot {
  std::size_t begin;
  std::size_t end;
  bool eligible;
  NifParagraph *paragraph;
};

void CollectSlots(std::vector<NifSection> &sections, bool parent_excluded,
                  const std::vector<std::string> &folded,
                  std::vector<ParagraphSlot> *slots) {
  for (NifSection &section : sections) {
    const bool excluded = parent_excluded || TitleExcluded(section, folded);
    for (NifParagraph &p : section.paragraphs) {
      slots->push_back({p.begin, p.end, !excluded, &p});
    }
    CollectSlots(section.subsections, excluded, folded, slots);
  }
}

// Disjoint [begin, end) intervals keyed by begin.
class IntervalSet {
 public:
  bool Overlaps(std::size_t begin, std::size_t end) const {
    auto it = spans_.lower_bound(end);
    if (it == spans_.begin()) return false;
    --it;
    return it->second > begin;
  }
  void Insert(std::size_t begin, std::size_t end) { spans_[begin] = end; }

 private:
  std::map<std::size_t, std::size_t> spans_;
};

bool BoundaryAligned(const std::u32string &text, std::size_t begin,
                     std::size_t end) {
  if (begin > 0 && IsLetterOrDigit(text[begin - 1])) return false;
  if (end < text.size() && IsLetterOrDigit(text[end])) return false;
  return true;
}

}  // namespace

EnrichmentReport &EnrichmentReport::operator+=(const EnrichmentReport &other) {
  links_before += other.links_before;
  unique_anchors += other.unique_anchors;
  links_after += other.links_after;
  per_section_skipped += other.per_section_skipped;
  percent_new = PercentNew(links_before, links_after);
  return *this;
}

AnchorDictionary CollectAnchors(const NifDocument &doc) {
  std::vector<const LinkAnnotation *> links;
  ForEachSection(doc.context, [&](const NifSection &s) {
    for (const auto &p : s.paragraphs) {
      for (const auto &link : p.links) links.push_back(&link);
    }
  });
  std::stable_sort(links.begin(), links.end(),
                   [](const LinkAnnotation *a, const LinkAnnotation *b) {
                     return a->begin < b->begin;
                   });
  AnchorDictionary dict;
  std::unordered_set<std::string> seen;
  for (const LinkAnnotation *link : links) {
    if (link->anchor.empty() || !seen.insert(link->anchor).second) continue;
    dict.push_back({link->anchor, link->target, CodePointLength(link->anchor)});
  }
  std::stable_sort(dict.begin(), dict.end(),
                   [](const AnchorEntry &a, const AnchorEntry &b) {
                     return a.length > b.length;
                   });
  return dict;
}

bool IsExcludedSection(const NifDocument &doc, const NifSection &section,
                       const std::vector<std::string> &excluded_titles) {
  const std::vector<std::string> folded = FoldedTitles(excluded_titles);
  // Path from the top level down to |section|.
  std::vector<const NifSection *> path;
  std::function<bool(const std::vector<NifSection> &)> find =
      [&](const std::vector<NifSection> &sections) {
        for (const NifSection &s : sections) {
          path.push_back(&s);
          if (&s == &section || find(s.subsections)) return true;
          path.pop_back();
        }
        return false;
      };
  if (!find(doc.context.sections)) return TitleExcluded(section, folded);
  return std::any_of(path.begin(), path.end(), [&](const NifSection *s) {
    return TitleExcluded(*s, folded);
  });
}

EnrichResult Enrich(const NifDocument &doc, const EnrichOptions &options) {
  EnrichResult result{doc, {}};
  NifDocument &out = result.document;
  EnrichmentReport &report = result.report;

  const AnchorDictionary dict = CollectAnchors(doc);
  report.links_before = CountLinks(doc);
  report.unique_anchors = dict.size();
  report.links_after = report.links_before;
  if (dict.empty()) return result;

  const std::u32string text = DecodeUtf8(out.context.text);
  std::vector<ParagraphSlot> slots;
  CollectSlots(out.context.sections, false,
               FoldedTitles(options.excluded_sections), &slots);
  std::sort(slots.begin(), slots.end(),
            [](const ParagraphSlot &a, const ParagraphSlot &b) {
              return a.begin < b.begin;
            });

  IntervalSet occupied;
  for (const LinkAnnotation &link : out.loose_links) {
    occupied.Insert(link.begin, link.end);
  }
  for (const ParagraphSlot &slot : slots) {
    for (const LinkAnnotation &link : slot.paragraph->links) {
      occupied.Insert(link.begin, link.end);
    }
  }

  auto find_slot = [&](std::size_t begin, std::size_t end) -> ParagraphSlot * {
    auto it = std::upper_bound(
        slots.begin(), slots.end(), begin,
        [](std::size_t pos, const ParagraphSlot &s) { return pos < s.begin; });
    if (it == slots.begin()) return nullptr;
    --it;
    return end <= it->end ? &*it : nullptr;
  };

  struct Candidate {
    std::size_t begin;
    const AnchorEntry *entry;
    ParagraphSlot *slot;
  };
  std::vector<std::pair<ParagraphSlot *, LinkAnnotation>> added;

  for (std::size_t group = 0; group < dict.size();) {
    const std::size_t length = dict[group].length;
    std::size_t group_end = group;
    std::vector<Candidate> candidates;
    for (; group_end < dict.size() && dict[group_end].length == length;
         ++group_end) {
      const AnchorEntry &entry = dict[group_end];
      const std::u32string needle = DecodeUtf8(entry.anchor);
      const std::boyer_moore_horspool_searcher searcher(needle.begin(),
                                                        needle.end());
      auto it = text.begin();
      while (true) {
        it = std::search(it, text.end(), searcher);
        if (it == text.end()) break;
        const auto begin = static_cast<std::size_t>(it - text.begin());
        const std::size_t end = begin + length;
        if (BoundaryAligned(text, begin, end)) {
          if (ParagraphSlot *slot = find_slot(begin, end)) {
            candidates.push_back({begin, &entry, slot});
          }
        }
        ++it;
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate &a, const Candidate &b) {
                return a.begin < b.begin;
              });
    for (const Candidate &c : candidates) {
      const std::size_t end = c.begin + length;
      if (occupied.Overlaps(c.begin, end)) continue;
      if (!c.slot->eligible) {
        report.per_section_skipped++;
        continue;
      }
      occupied.Insert(c.begin, end);
      LinkAnnotation link;
      link.begin = c.begin;
      link.end = end;
      link.anchor = c.entry->anchor;
      link.target = c.entry->target;
      link.kind = ClassifyLink(link.anchor);
      link.provenance = Provenance::kEnriched;
      link.uri = MintUri(out.key, UnitKind::kLink, link.begin, link.end);
      link.paragraph = c.slot->paragraph->uri;
      link.reference_context = out.context.uri;
      added.emplace_back(c.slot, std::move(link));
    }
    group = group_end;
  }

  for (auto &[slot, link] : added) slot->paragraph->links.push_back(std::move(link));
  for (ParagraphSlot &slot : slots) {
    std::stable_sort(slot.paragraph->links.begin(), slot.paragraph->links.end(),
                     [](const LinkAnnotation &a, const LinkAnnotation &b) {
                       return a.begin < b.begin;
                     });
  }
  report.links_after = report.links_before + added.size();
  report.percent_new = PercentNew(report.links_before, report.links_after);
  return result;
}

}  // namespace nif_forge
