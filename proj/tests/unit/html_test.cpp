// Copyright 2026 The Volver Authors.
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


#include "volver/html.hpp"

#include <gtest/gtest.h>

namespace volver::html {
namespace {

TEST(Html, ParsesNestedElements) {
  auto doc = Document::parse("<html><head><title> A  Title </title></head>"
                             "<body><div class=\"x CEURVOLTITLE\"><b>bold</b> text</div></body></html>");
  EXPECT_EQ(doc.title(), "A Title");
  auto* div = find_first(doc.root(), "div");
  ASSERT_NE(div, nullptr);
  EXPECT_TRUE(div->has_class("CEURVOLTITLE"));
  EXPECT_FALSE(div->has_class("CEUR"));
  EXPECT_EQ(div->normalized_text(), "bold text");
  EXPECT_EQ(&doc.body(), closest(*div, "body"));
}

TEST(Html, AttributesAreLowercasedAndDecoded) {
  auto doc = Document::parse("<A HREF='a.pdf?x=1&amp;y=2' Title=\"&lt;t&gt;\">x</A>");
  auto* a = find_first(doc.root(), "a");
  ASSERT_NE(a, nullptr);
  ASSERT_NE(a->attr("href"), nullptr);
  EXPECT_EQ(*a->attr("href"), "a.pdf?x=1&y=2");
  EXPECT_EQ(*a->attr("title"), "<t>");
  EXPECT_EQ(a->attr("missing"), nullptr);
}

TEST(Html, TagSoupRecovery) {
  // Unclosed <li> and <p>, a stray end tag, an unclosed table cell.
  auto doc = Document::parse("<ul><li>one<li>two</ul></span><p>para<p>next"
                             "<table><tr><td>cell<td>cell2</table>");
  EXPECT_EQ(find_all(doc.root(), "li").size(), 2u);
  EXPECT_EQ(find_all(doc.root(), "p").size(), 2u);
  EXPECT_EQ(find_all(doc.root(), "td").size(), 2u);
  EXPECT_EQ(find_all(doc.root(), "li")[0]->normalized_text(), "one");
}

TEST(Html, ScriptContentIsNotMarkup) {
  auto doc = Document::parse("<script>if (a < b) { x = '<p>'; }</script><p>real</p>");
  EXPECT_EQ(find_all(doc.root(), "p").size(), 1u);
}

TEST(Html, Entities) {
  EXPECT_EQ(decode_entities("&amp;&lt;&gt;&quot;&#39;&#x41;&eacute;&nbsp;"),
            "&<>\"'Aé\xC2\xA0");
  EXPECT_EQ(decode_entities("&bogus; & x"), "&bogus; & x");
}

TEST(Html, LatinBytesAreDecoded) {
  auto doc = Document::parse_bytes("<meta charset=\"iso-8859-1\"><title>K\xF6ln</title>");
  EXPECT_EQ(doc.title(), "Köln");
}

TEST(Html, TextLinesBreakAtBlocksAndBr) {
  auto doc = Document::parse("<div>first <a href=\"x\">link</a><br>second</div><p>third</p>");
  auto lines = text_lines(doc.body());
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].text, "first link");
  ASSERT_EQ(lines[0].anchors.size(), 1u);
  EXPECT_EQ(lines[1].text, "second");
  EXPECT_EQ(lines[2].text, "third");
  EXPECT_TRUE(line_within(lines[2], "p"));
  EXPECT_FALSE(line_within(lines[0], "p"));
}

TEST(Html, DocumentOrder) {
  auto doc = Document::parse("<div><p>a</p><p>b</p></div>");
  std::vector<std::size_t> order;
  for_each_element(doc.root(), [&](const Node& n) { order.push_back(n.order); });
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
  EXPECT_TRUE(is_block_element("div"));
  EXPECT_FALSE(is_block_element("span"));
}

}  // namespace
}  // namespace volver::html
