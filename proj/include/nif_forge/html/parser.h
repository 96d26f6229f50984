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

#ifndef NIF_FORGE_HTML_PARSER_H_
#define NIF_FORGE_HTML_PARSER_H_

#include <memory>
#include <string>
#include <string_view>

#include "nif_forge/html/dom.h"

namespace nif_forge::html {

// Parses HTML leniently into a document node. Malformed markup is recovered
// the way browsers do for the common cases: implied end tags for p, li,
// dt/dd, table cells and rows, headings and options; stray end tags are
// ignored; unclosed elements are closed at end of input. Script and style
// bodies are raw text. No html/head/body elements are synthesized.
//
// The input must be valid UTF-8.
std::unique_ptr<Node> ParseHtml(std::string_view html);

// Decodes character references (&amp; &#x41; &nbsp ...) in |text|.
std::string DecodeCharacterReferences(std::string_view text,
                                      bool in_attribute = false);

}  // namespace nif_forge::html

#endif  // NIF_FORGE_HTML_PARSER_H_
