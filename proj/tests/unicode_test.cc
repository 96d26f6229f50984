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


#include "nif_forge/unicode.h"

#include <gtest/gtest.h>

#include <random>

namespace nif_forge {
namespace {

TEST(SanitizeUtf8, ValidTextPassesThrough) {
  const std::string text = "Bering land bridge";
  const SanitizedText out = SanitizeUtf8(text);
  EXPECT_EQ(out.text, text);
  EXPECT_EQ(out.dropped, 0u);
}

TEST(SanitizeUtf8, DropsSingleInvalidByte) {
  const SanitizedText out = SanitizeUtf8(std::string("\x41\xFF\x42"));
  EXPECT_EQ(out.text, "AB");
  EXPECT_EQ(out.dropped, 1u);
}

TEST(SanitizeUtf8, DropsEncodedSurrogate) {
  // "Zürich" + CESU-style lone high surrogate + "!"
  const std::string bytes = "Z\xC3\xBCrich\xED\xA0\x80!";
  const SanitizedText out = SanitizeUtf8(bytes);
  EXPECT_EQ(out.text, "Z\xC3\xBCrich!");
  // ED A0 80 is three maximal subparts of length one each.
  EXPECT_EQ(out.dropped, 3u);
  EXPECT_EQ(CodePointLength(out.text), 7u);
}

TEST(SanitizeUtf8, TruncatedAndOverlongSequences) {
  EXPECT_EQ(SanitizeUtf8(std::string("a\xE2\x82")).text, "a");
  EXPECT_EQ(SanitizeUtf8(std::string("a\xE2\x82")).dropped, 1u);
  EXPECT_EQ(SanitizeUtf8(std::string("\xC0\xAF")).dropped, 2u);
  EXPECT_EQ(SanitizeUtf8(std::string("\xF4\x90\x80\x80")).dropped, 4u);
  EXPECT_EQ(SanitizeUtf8(std::string("\xF0\x9F\x98\x80")).dropped, 0u);
}

TEST(SanitizeUtf8, IdempotentOnRandomBytes) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::string bytes(64, '\0');
    for (char &c : bytes) c = static_cast<char>(rng());
    const SanitizedText once = SanitizeUtf8(bytes);
    const SanitizedText twice = SanitizeUtf8(once.text);
    EXPECT_EQ(twice.text, once.text);
    EXPECT_EQ(twice.dropped, 0u);
  }
}

TEST(CodePoints, LengthAndSlicing) {
  const std::string text = "a\xF0\x9D\x84\x9E b北京";  // a, U+1D11E, space, b, 2 CJK
  EXPECT_EQ(CodePointLength(text), 6u);
  const CodePointIndex index(text);
  EXPECT_EQ(index.size(), 6u);
  EXPECT_EQ(index.Slice(text, 1, 2), "\xF0\x9D\x84\x9E");
  EXPECT_EQ(index.Slice(text, 4, 6), "北京");
  EXPECT_EQ(index.ByteOffset(6), text.size());
  EXPECT_EQ(EncodeUtf8(DecodeUtf8(text)), text);
}

TEST(CodePoints, Classification) {
  EXPECT_TRUE(IsWhitespace(U' '));
  EXPECT_TRUE(IsWhitespace(U'　'));
  EXPECT_FALSE(IsWhitespace(U'-'));
  EXPECT_TRUE(IsLetterOrDigit(U'ü'));
  EXPECT_TRUE(IsLetterOrDigit(U'北'));
  EXPECT_TRUE(IsLetterOrDigit(U'7'));
  EXPECT_FALSE(IsLetterOrDigit(U'-'));
  EXPECT_FALSE(IsLetterOrDigit(U'\U0001F600'));
}

TEST(CodePoints, TokensFoldingTrimming) {
  EXPECT_EQ(CountTokens("East-Berlin"), 1u);
  EXPECT_EQ(CountTokens("  Bering land bridge "), 3u);
  EXPECT_EQ(CountTokens(""), 0u);
  EXPECT_EQ(FoldCase("REFERENCES"), "references");
  EXPECT_EQ(FoldCase("STRASSE"), FoldCase("strasse"));
  EXPECT_EQ(TrimWhitespace("  See also\n"), "See also");
}

}  // namespace
}  // namespace nif_forge
