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


#include "nif_forge/html/selector.h"

#include <gtest/gtest.h>

#include "nif_forge/html/parser.h"

namespace nif_forge::html {
namespace {

const char kDoc[] = R"(<html lang="en"><body>
<div id="content" class="mw-body">
  <h2 id="h">History</h2>
  <p class="lead intro">First</p>
  <p>Second <a href="/wiki/X" hreflang="en-US">x</a></p>
  <table class="infobox vcard"><tr><td>cell</td></tr></table>
  <ul><li>one</li><li>two</li><li>three</li><li></li></ul>
  <div class="navbox"><p>nav</p></div>
</div></body></html>)";

std::vector<std::string> Texts(std::string_view selector) {
  auto root = ParseHtml(kDoc);
  std::vector<std::string> out;
  for (const Node *n : Selector::Parse(selector).SelectAll(*root)) {
    out.push_back(n->TextContent());
  }
  return out;
}

using Strings = std::vector<std::string>;

TEST(Selector, TypeClassId) {
  EXPECT_EQ(Texts("table.infobox").size(), 1u);
  EXPECT_EQ(Texts("p.lead"), Strings({"First"}));
  EXPECT_EQ(Texts("p.lead.intro"), Strings({"First"}));
  EXPECT_EQ(Texts("#h"), Strings({"History"}));
  EXPECT_EQ(Texts("p").size(), 3u);
}

TEST(Selector, Combinators) {
  EXPECT_EQ(Texts("div.navbox p"), Strings({"nav"}));
  EXPECT_EQ(Texts("#content > p").size(), 2u);
  EXPECT_EQ(Texts("h2 + p"), Strings({"First"}));
  EXPECT_EQ(Texts("h2 ~ p").size(), 2u);
}

TEST(Selector, Attributes) {
  EXPECT_EQ(Texts("a[href]"), Strings({"x"}));
  EXPECT_EQ(Texts("a[href^=\"/wiki/\"]"), Strings({"x"}));
  EXPECT_EQ(Texts("a[href$=X]"), Strings({"x"}));
  EXPECT_EQ(Texts("a[href*=ik]"), Strings({"x"}));
  EXPECT_EQ(Texts("a[hreflang|=en]"), Strings({"x"}));
  EXPECT_EQ(Texts("[class~=vcard]").size(), 1u);
  EXPECT_TRUE(Texts("a[href=nope]").empty());
}

TEST(Selector, PseudoClasses) {
  EXPECT_EQ(Texts("li:first-child"), Strings({"one"}));
  EXPECT_EQ(Texts("li:last-child"), Strings({""}));
  EXPECT_EQ(Texts("li:nth-child(2n+1)"), Strings({"one", "three"}));
  EXPECT_EQ(Texts("li:nth-last-child(2)"), Strings({"three"}));
  EXPECT_EQ(Texts("li:empty"), Strings({""}));
  EXPECT_EQ(Texts("li:not(:empty)").size(), 3u);
  EXPECT_EQ(Texts("p:not(.lead)").size(), 2u);
  EXPECT_EQ(Texts("h2:first-of-type"), Strings({"History"}));
}

TEST(Selector, GroupsKeepDocumentOrder) {
  EXPECT_EQ(Texts("p.lead, h2"), Strings({"History", "First"}));
}

TEST(Selector, SyntaxErrorsNameTheSelector) {
  for (const char *bad : {"p..bad", "", "div >", "[href", "a:unknown-pseudo",
                          "li:nth-child(x)"}) {
    try {
      Selector::Parse(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const SelectorError &e) {
      EXPECT_EQ(e.selector(), bad);
      EXPECT_NE(std::string(e.what()).find(bad), std::string::npos);
    }
  }
}

}  // namespace
}  // namespace nif_forge::html
