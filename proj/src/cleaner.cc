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

#include "nif_forge/cleaner.h"

#include <unordered_set>
#include <vector>

#include "nif_forge/html/parser.h"
#include "nif_forge/unicode.h"

namespace nif_forge {

namespace {

using html::Node;

// Collects matches of all |selectors|, dropping any node that lies inside
// another matched node (its subtree goes away with the ancestor).
std::vector<Node *> OutermostMatches(
    Node *root, const std::vector<const html::Selector *> &selectors) {
  std::unordered_set<const Node *> matched;
  for (const html::Selector *selector : selectors) {
    for (const Node *n : selector->SelectAll(*root)) matched.insert(n);
  }
  std::vector<Node *> out;
  std::vector<Node *> stack = {root};
  while (!stack.empty()) {
    Node *node = stack.back();
    stack.pop_back();
    if (matched.contains(node)) {
      out.push_back(node);
      continue;
    }
    const auto &children = node->children();
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back(it->get());
    }
  }
  return out;
}

}  // namespace

CleanedDocument Clean(std::string_view html, const CleaningProfile &profile,
                      std::string source_url) {
  if (html.empty()) throw CleanError("empty HTML input");
  const SanitizedText sanitized = SanitizeUtf8(html);
  CleanedDocument doc{html::ParseHtml(sanitized.text), std::move(source_url),
                      profile.language};

  std::vector<const html::Selector *> removes;
  for (const auto &s : profile.remove) removes.push_back(&s);
  for (Node *node : OutermostMatches(doc.root.get(), removes)) node->Detach();

  // A replace target inside another replace target disappears with it; the
  // first rule (in profile order) matching an element supplies its text.
  std::vector<const html::Selector *> replaces;
  for (const auto &r : profile.replace) replaces.push_back(&r.selector);
  for (Node *node : OutermostMatches(doc.root.get(), replaces)) {
    for (const ReplaceRule &rule : profile.replace) {
      if (rule.selector.Matches(*node)) {
        node->ReplaceWith(Node::MakeText(rule.replacement, /*verbatim=*/true));
        break;
      }
    }
  }

  std::vector<Node *> marks;
  doc.root->ForEach([&](const Node &n) {
    for (const auto &s : profile.search) {
      if (s.Matches(n)) {
        marks.push_back(const_cast<Node *>(&n));
        break;
      }
    }
  });
  for (Node *node : marks) node->SetAttribute(kSearchMarker, "");
  return doc;
}

}  // namespace nif_forge
