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

#ifndef NIF_FORGE_HTML_SELECTOR_H_
#define NIF_FORGE_HTML_SELECTOR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nif_forge/html/dom.h"

namespace nif_forge::html {

class SelectorError : public std::runtime_error {
 public:
  SelectorError(const std::string &selector, const std::string &reason)
      : std::runtime_error("invalid selector \"" + selector + "\": " + reason),
        selector_(selector) {}

  const std::string &selector() const { return selector_; }

 private:
  std::string selector_;
};

// One simple selector inside a compound selector.
struct SimpleSelector {
  enum class Kind {
    kType,        // name
    kUniversal,
    kId,          // value
    kClass,       // value
    kAttribute,   // name, op, value
    kPseudo,      // name: root, empty, link, enabled, ... ; value for lang()
    kNth,         // a, b, of_type, from_end
    kNegation,    // negated[0]
  };
  enum class AttrOp { kExists, kEquals, kIncludes, kDashMatch, kPrefix,
                      kSuffix, kSubstring };

  Kind kind = Kind::kUniversal;
  std::string name;
  std::string value;
  AttrOp op = AttrOp::kExists;
  int a = 0;
  int b = 0;
  bool of_type = false;
  bool from_end = false;
  std::vector<SimpleSelector> negated;
};

enum class Combinator { kDescendant, kChild, kAdjacent, kSibling };

struct CompoundSelector {
  std::vector<SimpleSelector> parts;
};

// A complex selector: compounds[0] comb[0] compounds[1] ... compounds[n-1].
struct ComplexSelector {
  std::vector<CompoundSelector> compounds;
  std::vector<Combinator> combinators;
};

// A parsed CSS Level 3 selector group ("a, b > c"). Pseudo-elements and
// namespace prefixes are rejected. Dynamic pseudo-classes (:hover, :visited,
// :focus, :active, :target) parse but never match a static document.
class Selector {
 public:
  // Throws SelectorError naming the selector on a syntax error.
  static Selector Parse(std::string_view text);

  bool Matches(const Node &element) const;

  // All matching elements under |root| in document order.
  std::vector<const Node *> SelectAll(const Node &root) const;

  const std::string &text() const { return text_; }

 private:
  std::string text_;
  std::vector<ComplexSelector> alternatives_;
};

}  // namespace nif_forge::html

#endif  // NIF_FORGE_HTML_SELECTOR_H_
