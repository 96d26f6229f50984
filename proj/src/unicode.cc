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

#include <unicode/uchar.h>

namespace nif_forge {

namespace {

// Length of the well-formed sequence starting at |p|, or 0 if the bytes at
// |p| do not start one. On failure *bad receives the length of the maximal
// ill-formed subpart (at least 1), following the Unicode recommendation for
// U+FFFD substitution.
std::size_t ScanSequence(const unsigned char *p, const unsigned char *end,
                         std::size_t *bad) {
  const unsigned char lead = p[0];
  if (lead < 0x80) return 1;
  std::size_t need;
  unsigned char lo = 0x80, hi = 0xBF;
  if (lead >= 0xC2 && lead <= 0xDF) {
    need = 1;
  } else if (lead == 0xE0) {
    need = 2;
    lo = 0xA0;
  } else if (lead >= 0xE1 && lead <= 0xEC) {
    need = 2;
  } else if (lead == 0xED) {
    need = 2;
    hi = 0x9F;  // excludes encoded surrogates
  } else if (lead >= 0xEE && lead <= 0xEF) {
    need = 2;
  } else if (lead == 0xF0) {
    need = 3;
    lo = 0x90;
  } else if (lead >= 0xF1 && lead <= 0xF3) {
    need = 3;
  } else if (lead == 0xF4) {
    need = 3;
    hi = 0x8F;
  } else {
    *bad = 1;
    return 0;
  }
  std::size_t i = 1;
  for (; i <= need; ++i) {
    if (p + i >= end) break;
    const unsigned char c = p[i];
    const unsigned char l = (i == 1) ? lo : 0x80;
    const unsigned char h = (i == 1) ? hi : 0xBF;
    if (c < l || c > h) break;
  }
  if (i == need + 1) return need + 1;
  *bad = i;
  return 0;
}

}  // namespace

SanitizedText SanitizeUtf8(std::string_view bytes) {
  SanitizedText result;
  result.text.reserve(bytes.size());
  const auto *p = reinterpret_cast<const unsigned char *>(bytes.data());
  const auto *end = p + bytes.size();
  while (p < end) {
    std::size_t bad = 0;
    const std::size_t n = ScanSequence(p, end, &bad);
    if (n > 0) {
      result.text.append(reinterpret_cast<const char *>(p), n);
      p += n;
    } else {
      ++result.dropped;
      p += bad;
    }
  }
  return result;
}

std::size_t CodePointLength(std::string_view utf8) {
  std::size_t n = 0;
  for (unsigned char c : utf8) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::u32string DecodeUtf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto *p = reinterpret_cast<const unsigned char *>(utf8.data());
  const auto *end = p + utf8.size();
  while (p < end) {
    const unsigned char c = *p;
    char32_t cp;
    int extra;
    if (c < 0x80) {
      cp = c;
      extra = 0;
    } else if (c < 0xE0) {
      cp = c & 0x1F;
      extra = 1;
    } else if (c < 0xF0) {
      cp = c & 0x0F;
      extra = 2;
    } else {
      cp = c & 0x07;
      extra = 3;
    }
    ++p;
    for (int i = 0; i < extra && p < end; ++i, ++p) cp = (cp << 6) | (*p & 0x3F);
    out.push_back(cp);
  }
  return out;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) AppendUtf8(cp, &out);
  return out;
}

CodePointIndex::CodePointIndex(std::string_view utf8) {
  offsets_.reserve(utf8.size() + 1);
  for (std::size_t i = 0; i < utf8.size(); ++i) {
    if ((static_cast<unsigned char>(utf8[i]) & 0xC0) != 0x80) {
      offsets_.push_back(i);
    }
  }
  offsets_.push_back(utf8.size());
}

std::string_view CodePointIndex::Slice(std::string_view utf8,
                                       std::size_t begin,
                                       std::size_t end) const {
  return utf8.substr(offsets_[begin], offsets_[end] - offsets_[begin]);
}

bool IsWhitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool IsLetterOrDigit(char32_t cp) {
  const auto c = static_cast<UChar32>(cp);
  return u_isalpha(c) || u_isdigit(c);
}

std::size_t CountTokens(std::string_view utf8) {
  std::size_t tokens = 0;
  bool in_token = false;
  for (char32_t cp : DecodeUtf8(utf8)) {
    if (IsWhitespace(cp)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++tokens;
    }
  }
  return tokens;
}

std::string ToLowerAscii(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string FoldCase(std::string_view utf8) {
  std::string out;
  for (char32_t cp : DecodeUtf8(utf8)) {
    AppendUtf8(static_cast<char32_t>(
                   u_foldCase(static_cast<UChar32>(cp), U_FOLD_CASE_DEFAULT)),
               &out);
  }
  return out;
}

std::string TrimWhitespace(std::string_view utf8) {
  std::u32string text = DecodeUtf8(utf8);
  std::size_t b = 0, e = text.size();
  while (b < e && IsWhitespace(text[b])) ++b;
  while (e > b && IsWhitespace(text[e - 1])) --e;
  return EncodeUtf8(std::u32string_view(text).substr(b, e - b));
}

}  // namespace nif_forge
