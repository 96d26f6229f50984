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

#ifndef NIF_FORGE_UNICODE_H_
#define NIF_FORGE_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nif_forge {

// All offsets in the corpus are code point indices into UTF-8 text. The
// helpers below assume valid UTF-8 unless stated otherwise; run
// SanitizeUtf8() on untrusted bytes first.

// Result of dropping malformed sequences from a byte stream.
struct SanitizedText {
  std::string text;
  // Number of maximal ill-formed subsequences removed. This is the same unit
  // a replacing decoder uses when it emits one U+FFFD per bad sequence.
  std::size_t dropped = 0;
};

// Removes every ill-formed sequence (stray continuation bytes, overlong
// forms, encoded surrogates, values above U+10FFFF, truncated sequences).
// Valid input passes through byte-identical.
SanitizedText SanitizeUtf8(std::string_view bytes);

// Number of code points in valid UTF-8.
std::size_t CodePointLength(std::string_view utf8);

std::u32string DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t cp, std::string *out);

// Maps code point positions to byte positions for one string, so repeated
// substring lookups stay O(1).
class CodePointIndex {
 public:
  explicit CodePointIndex(std::string_view utf8);

  std::size_t size() const { return offsets_.size() - 1; }

  // Byte offset of code point |cp|; cp == size() yields the byte length.
  std::size_t ByteOffset(std::size_t cp) const { return offsets_[cp]; }

  // Substring [begin, end) in code points. Requires begin <= end <= size().
  std::string_view Slice(std::string_view utf8, std::size_t begin,
                         std::size_t end) const;

 private:
  std::vector<std::size_t> offsets_;
};

// Unicode White_Space property.
bool IsWhitespace(char32_t cp);

// General category L* or Nd.
bool IsLetterOrDigit(char32_t cp);

// Number of whitespace-separated tokens.
std::size_t CountTokens(std::string_view utf8);

std::string ToLowerAscii(std::string_view s);

// Full-string simple case folding, for caseless comparisons.
std::string FoldCase(std::string_view utf8);

// Trims Unicode whitespace at both ends.
std::string TrimWhitespace(std::string_view utf8);

}  // namespace nif_forge

#endif  // NIF_FORGE_UNICODE_H_
