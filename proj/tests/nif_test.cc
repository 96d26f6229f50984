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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nif_forge/builder.h"
#include "nif_forge/unicode.h"
#include "support/fixtures.h"

namespace nif_forge {
namespace {

const DocumentKey kUs{"en", "United_States", "2016-10"};

TEST(MintUri, ListingContextAndParagraph) {
  EXPECT_EQ(MintUri(kUs, UnitKind::kContext),
            "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&nif=context");
  EXPECT_EQ(MintUri(kUs, UnitKind::kParagraph, 7860, 8740),
            "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&nif=paragraph&char=7860,8740");
  EXPECT_EQ(MintUri(kUs, UnitKind::kLink, 7913, 7920),
            "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&char=7913,7920");
  EXPECT_EQ(MintUri(kUs, UnitKind::kTitle, 7745, 7752),
            "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10&nif=title&char=7745,7752");
}

TEST(MintUri, DegenerateEmptySpan) {
  EXPECT_EQ(MintUri(DocumentKey{"de", "X", "2016-10"}, UnitKind::kSection, 0, 0),
            "http://nif.dbpedia.org/wiki/de/X?dbpv=2016-10&char=0,0");
}

TEST(MintUri, Errors) {
  EXPECT_THROW(MintUri(kUs, UnitKind::kLink, 5, 4), NifError);
  EXPECT_THROW(MintUri(DocumentKey{"", "X", "v"}, UnitKind::kContext), NifError);
  EXPECT_THROW(MintUri(DocumentKey{"en", "", "v"}, UnitKind::kContext), NifError);
  EXPECT_THROW(MintUri(DocumentKey{"en", "X", ""}, UnitKind::kContext), NifError);
}

TEST(MintUri, ParsingHelpersInvertMinting) {
  const std::string ctx = MintUri(kUs, UnitKind::kContext);
  ASSERT_TRUE(ParseContextUri(ctx).has_value());
  EXPECT_EQ(*ParseContextUri(ctx), kUs);
  EXPECT_FALSE(ParseContextUri(MintUri(kUs, UnitKind::kLink, 1, 2)).has_value());
  EXPECT_FALSE(ParseContextUri("http://example.org/x?dbpv=1&nif=context").has_value());
  const std::string para = MintUri(kUs, UnitKind::kParagraph, 7860, 8740);
  using Span = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(SpanFromUri(para), Span(7860, 8740));
  EXPECT_FALSE(SpanFromUri(ctx).has_value());
  EXPECT_EQ(DocumentPrefix(para), DocumentPrefix(ctx));
  EXPECT_EQ(DocumentPrefix(ctx),
            "http://nif.dbpedia.org/wiki/en/United_States?dbpv=2016-10");
  EXPECT_EQ(DocumentPrefix("http://dbpedia.org/resource/X"), "");
}

TEST(MintUri, DistinctUnitsOfRealDocumentsNeverCollide) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const NifDocument doc = testing::RandomDocument(rng);
    std::set<std::string> uris = {doc.context.uri};
    std::size_t units = 1;
    ForEachSection(doc.context, [&](const NifSection &s) {
      uris.insert(s.uri);
      ++units;
      if (s.title) {
        uris.insert(s.title->uri);
        ++units;
      }
      for (const auto &p : s.paragraphs) {
        uris.insert(p.uri);
        ++units;
        for (const auto &l : p.links) {
          uris.insert(l.uri);
          ++units;
        }
      }
    });
    EXPECT_EQ(uris.size(), units);
  }
}

TEST(ClassifyLink, Examples) {
  EXPECT_EQ(ClassifyLink("Siberia"), LinkKind::kWord);
  EXPECT_EQ(ClassifyLink("Bering land bridge"), LinkKind::kPhrase);
  EXPECT_EQ(ClassifyLink("East-Berlin"), LinkKind::kWord);
  EXPECT_EQ(ClassifyLink("Lake Zürich"), LinkKind::kPhrase);
  EXPECT_THROW(ClassifyLink(""), NifError);
  EXPECT_THROW(ClassifyLink("   "), NifError);
}

TEST(ClassifyLink, AnyTwoTokensArePhrase) {
  std::mt19937_64 rng(3);
  const std::u32string alphabet = U"abcXYZ-.üß北😀0";
  const std::u32string spaces = U" \t 　\n";
  auto token = [&] {
    std::u32string t;
    for (std::size_t n = 1 + rng() % 6; n > 0; --n) t += alphabet[rng() % alphabet.size()];
    return t;
  };
  for (int i = 0; i < 500; ++i) {
    const std::u32string a = token(), b = token();
    const std::u32string sep(1 + rng() % 3, spaces[rng() % spaces.size()]);
    EXPECT_EQ(ClassifyLink(EncodeUtf8(a + sep + b)), LinkKind::kPhrase);
    EXPECT_EQ(ClassifyLink(EncodeUtf8(a)), LinkKind::kWord);
  }
}

TEST(NormalizeArticleName, SpacesAndEscapes) {
  EXPECT_EQ(NormalizeArticleName("United States"), "United_States");
  EXPECT_EQ(NormalizeArticleName("Zürich"), "Zürich");
  EXPECT_EQ(NormalizeArticleName("AC/DC"), "AC/DC");
  EXPECT_EQ(NormalizeArticleName("a?b#c\"d"), "a%3Fb%23c%22d");
  EXPECT_EQ(NormalizeArticleName("Caf%c3%a9"), "Caf%C3%A9");
  EXPECT_EQ(NormalizeArticleName("Delta_(letter)"), "Delta_(letter)");
}

TEST(PredominantLanguage, Lexvo) {
  EXPECT_EQ(PredominantLanguageUri("en"), "http://lexvo.org/id/iso639-3/eng");
  EXPECT_EQ(PredominantLanguageUri("de"), "http://lexvo.org/id/iso639-3/deu");
  EXPECT_EQ(PredominantLanguageUri("ceb"), "http://lexvo.org/id/iso639-3/ceb");
}

TEST(DocumentBuilder, SectionsParagraphsAndChains) {
  const NifDocument doc = testing::TwoSectionDocument();
  const NifContext &ctx = doc.context;
  EXPECT_EQ(ctx.text,
            "First section\nAlpha alpha link and beta.\nGamma starts this one.\n"
            "Second section\nEnds with delta\n");
  EXPECT_EQ(ctx.begin, 0u);
  EXPECT_EQ(ctx.end, 95u);
  ASSERT_EQ(ctx.sections.size(), 2u);
  const NifSection &first = ctx.sections[0];
  EXPECT_EQ(first.begin, 0u);
  EXPECT_EQ(first.end, 64u);
  EXPECT_EQ(first.title->begin, 0u);
  EXPECT_EQ(first.title->end, 13u);
  ASSERT_EQ(first.paragraphs.size(), 2u);
  EXPECT_EQ(first.paragraphs[0].next_paragraph, first.paragraphs[1].uri);
  EXPECT_FALSE(first.paragraphs[1].next_paragraph.has_value());
  EXPECT_EQ(first.first_paragraph, first.paragraphs[0].uri);
  EXPECT_EQ(first.last_paragraph, first.paragraphs[1].uri);
  EXPECT_EQ(first.next_section, ctx.sections[1].uri);
  EXPECT_FALSE(ctx.sections[1].next_section.has_value());
  EXPECT_EQ(ctx.first_section, first.uri);
  EXPECT_EQ(ctx.last_section, ctx.sections[1].uri);
  EXPECT_EQ(first.parent, ctx.uri);
  const LinkAnnotation &alpha = first.paragraphs[0].links[0];
  EXPECT_EQ(alpha.begin, 20u);
  EXPECT_EQ(alpha.end, 30u);
  EXPECT_EQ(alpha.anchor, "alpha link");
  EXPECT_EQ(alpha.kind, LinkKind::kPhrase);
  EXPECT_EQ(alpha.paragraph, first.paragraphs[0].uri);
  EXPECT_EQ(alpha.reference_context, ctx.uri);
  EXPECT_EQ(CountLinks(doc), 4u);
  EXPECT_EQ(CountParagraphs(doc), 3u);
  EXPECT_EQ(ctx.predominant_language, "http://lexvo.org/id/iso639-3/eng");
}

TEST(DocumentBuilder, NestingFollowsHeadingLevels) {
  DocumentBuilder b(testing::TestMeta());
  b.AddParagraph("lead", {});
  b.OpenSection(2, "A");
  b.OpenSection(3, "A1");
  b.AddParagraph("x", {});
  b.OpenSection(4, "A1a");
  b.OpenSection(3, "A2");
  b.OpenSection(1, "B");  // h1 nests like h2
  b.AddParagraph("y", {});
  const NifDocument doc = b.Finish();
  ASSERT_EQ(doc.context.sections.size(), 3u);
  EXPECT_FALSE(doc.context.sections[0].title.has_value());
  const NifSection &a = doc.context.sections[1];
  ASSERT_EQ(a.subsections.size(), 2u);
  EXPECT_EQ(a.subsections[0].subsections.size(), 1u);
  EXPECT_EQ(a.subsections[0].subsections[0].parent, a.subsections[0].uri);
  EXPECT_EQ(a.end, doc.context.sections[2].begin);
  EXPECT_EQ(a.first_section, a.subsections[0].uri);
  EXPECT_EQ(doc.context.sections[2].title->text, "B");
}

TEST(DocumentBuilder, RejectsBadInput) {
  EXPECT_THROW(DocumentBuilder(testing::TestMeta("")), NifError);
  ArticleMeta no_version = testing::TestMeta();
  no_version.corpus_version.clear();
  EXPECT_THROW(DocumentBuilder{no_version}, NifError);
  DocumentBuilder b(testing::TestMeta());
  EXPECT_THROW(b.AddParagraph("abc", {{2, 2, "t"}}), NifError);
  EXPECT_THROW(b.AddParagraph("abc", {{0, 4, "t"}}), NifError);
  EXPECT_THROW(b.AddParagraph("abcd", {{0, 2, "t"}, {1, 3, "t"}}), NifError);
}

TEST(DocumentBuilder, EmptyDocument) {
  DocumentBuilder b(testing::TestMeta());
  b.AddParagraph("", {});
  const NifDocument doc = b.Finish();
  EXPECT_EQ(doc.context.text, "");
  EXPECT_EQ(doc.context.end, 0u);
  EXPECT_TRUE(doc.context.sections.empty());
  EXPECT_FALSE(doc.context.first_section.has_value());
}

TEST(DocumentBuilder, RevisionIsAppendedToSourceUrl) {
  ArticleMeta meta = testing::TestMeta();
  meta.revision = "123";
  DocumentBuilder b(meta);
  EXPECT_EQ(b.Finish().context.source_url,
            "https://en.wikipedia.org/wiki/Test_article?oldid=123");
}

}  // namespace
}  // namespace nif_forge
