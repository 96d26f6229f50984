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


#include <gtest/gtest.h>

#include "nif_forge/html/dom.h"
#include "nif_forge/html/parser.h"

namespace nif_forge::html {
namespace {

const Node *FirstElement(const Node &root, std::string_view name) {
  const Node *found = nullptr;
  root.ForEach([&](const Node &n) {
    if (!found && n.is_element() && n.name() == name) found = &n;
  });
  return found;
}

std::size_t CountElements(const Node &root, std::string_view name) {
  std::size_t n = 0;
  root.ForEach([&](const Node &node) {
    if (node.is_element() && node.name() == name) ++n;
  });
  return n;
}

TEST(CharacterReferences, NamedNumericAndBroken) {
  EXPECT_EQ(DecodeCharacterReferences("Z&uuml;rich &amp; &#x41;&#66;"),
            "Zürich & AB");
  EXPECT_EQ(DecodeCharacterReferences("a&nbsp;b"), "a b");
  EXPECT_EQ(DecodeCharacterReferences("AT&T &bogus;"), "AT&T &bogus;");
  EXPECT_EQ(DecodeCharacterReferences("&#x80;"), "€");  // C1 remap
  EXPECT_EQ(DecodeCharacterReferences("&#0;"), "�");
}

TEST(ParseHtml, BuildsTreeWithAttributes) {
  auto root = ParseHtml(
      "<div ID=main class='a b'><p>One <a href=\"/wiki/X\">x</a></p></div>");
  const Node *div = FirstElement(*root, "div");
  ASSERT_NE(div, nullptr);
  ASSERT_NE(div->GetAttribute("id"), nullptr);
  EXPECT_EQ(*div->GetAttribute("id"), "main");
  EXPECT_EQ(*div->GetAttribute("class"), "a b");
  EXPECT_EQ(FirstElement(*root, "p")->TextContent(), "One x");
}

TEST(ParseHtml, ImplicitlyClosesParagraphs) {
  auto root = ParseHtml("<p>one<p>two<div>three</div>");
  EXPECT_EQ(CountElements(*root, "p"), 2u);
  const Node *div = FirstElement(*root, "div");
  ASSERT_NE(div, nullptr);
  EXPECT_NE(div->parent()->name(), "p");
}

TEST(ParseHtml, ListItemsAndStrayEndTags) {
  auto root = ParseHtml("<ul><li>a<li>b</ul></span></p>tail");
  EXPECT_EQ(CountElements(*root, "li"), 2u);
  EXPECT_NE(root->TextContent().find("tail"), std::string::npos);
}

TEST(ParseHtml, RawTextElements) {
  auto root = ParseHtml("<script>var s = \"<p>x</p>\";</script><p>ok</p>");
  EXPECT_EQ(CountElements(*root, "p"), 1u);
  EXPECT_EQ(FirstElement(*root, "script")->TextContent(), "var s = \"<p>x</p>\";");
}

TEST(ParseHtml, CommentsAndDoctype) {
  auto root = ParseHtml("<!DOCTYPE html><!-- note --><p>a<!--x-->b</p>");
  EXPECT_EQ(FirstElement(*root, "p")->TextContent(), "ab");
}

TEST(ParseHtml, VoidElementsHaveNoChildren) {
  auto root = ParseHtml("<p>a<br>b<img src=x>c</p>");
  const Node *br = FirstElement(*root, "br");
  ASSERT_NE(br, nullptr);
  EXPECT_TRUE(br->children().empty());
  EXPECT_EQ(FirstElement(*root, "p")->TextContent(), "abc");
  EXPECT_TRUE(IsVoidElement("br"));
  EXPECT_FALSE(IsVoidElement("p"));
}

TEST(ParseHtml, EmptyInputYieldsEmptyDocument) {
  auto root = ParseHtml("");
  EXPECT_EQ(root->kind(), NodeKind::kDocument);
  EXPECT_TRUE(root->children().empty());
}

TEST(Dom, SerializeReparsesToSameText) {
  const std::string html =
      "<div><p class=\"x\">A &amp; B <b>bold</b></p><p>Z&uuml;rich</p></div>";
  auto root = ParseHtml(html);
  auto again = ParseHtml(SerializeHtml(*root));
  EXPECT_EQ(again->TextContent(), root->TextContent());
  EXPECT_EQ(SerializeHtml(*again), SerializeHtml(*root));
}

TEST(Dom, DetachReplaceClone) {
  auto root = ParseHtml("<p>a<b>b</b>c</p>");
  Node *b = const_cast<Node *>(FirstElement(*root, "b"));
  auto clone = root->Clone();
  b->ReplaceWith(Node::MakeText("B", /*verbatim=*/true));
  EXPECT_EQ(root->TextContent(), "aBc");
  EXPECT_EQ(clone->TextContent(), "abc");
  Node *p = const_cast<Node *>(FirstElement(*root, "p"));
  auto detached = p->Detach();
  EXPECT_EQ(root->TextContent(), "");
  EXPECT_EQ(detached->TextContent(), "aBc");
}

}  // namespace
}  // namespace nif_forge::html
