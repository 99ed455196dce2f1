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


#include "volver/text.hpp"

#include <gtest/gtest.h>

namespace volver::text {
namespace {

TEST(Text, TrimAndCollapse) {
  EXPECT_EQ(trim("  a b \n"), "a b");
  EXPECT_EQ(collapse_whitespace("  a \t\n b\xC2\xA0\xC2\xA0 c  "), "a b c");
  EXPECT_EQ(collapse_whitespace(""), "");
}

TEST(Text, CaseHelpers) {
  EXPECT_TRUE(iequals("Vol-12", "vol-12"));
  EXPECT_FALSE(iequals("Vol-12", "vol-1"));
  EXPECT_TRUE(icontains("Invited Talk", "INVITED"));
  EXPECT_EQ(to_lower_ascii("AbC1"), "abc1");
  EXPECT_EQ(to_upper_utf8("köln"), "KÖLN");
}

TEST(Text, Split) {
  auto parts = split("a\tb\t\tc", '\t');
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[2], "");
  EXPECT_EQ(parts[3], "c");
}

TEST(Text, Utf8RoundTrip) {
  std::string s = "Tomás Ruiz \xE2\x80\x93 \xF0\x9F\x98\x80";
  EXPECT_TRUE(is_valid_utf8(s));
  auto cps = decode_utf8(s);
  EXPECT_EQ(cps[3], U'á');
  EXPECT_EQ(cps.back(), U'\U0001F600');
  EXPECT_EQ(encode_utf8(cps), s);
}

TEST(Text, InvalidUtf8BecomesReplacement) {
  std::string bad = "a\xE9z";
  EXPECT_FALSE(is_valid_utf8(bad));
  auto cps = decode_utf8(bad);
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[1], U'�');
}

TEST(Text, DeclaredCharset) {
  EXPECT_EQ(declared_charset("<meta charset=\"ISO-8859-1\">"), "iso-8859-1");
  EXPECT_EQ(declared_charset(
                "<meta http-equiv=\"Content-Type\" content=\"text/html; charset=windows-1252\">"),
            "windows-1252");
  EXPECT_FALSE(declared_charset("<p>nothing</p>").has_value());
}

TEST(Text, DecodeLatin1Page) {
  std::string raw = "<meta charset=\"iso-8859-1\"><p>K\xF6ln</p>";
  EXPECT_NE(decode_html_bytes(raw).find("Köln"), std::string::npos);
  // Undeclared bytes that are not UTF-8 fall back to Latin-1.
  EXPECT_EQ(decode_html_bytes("M\xE4rz"), "März");
  // Valid UTF-8 passes through.
  EXPECT_EQ(decode_html_bytes("März"), "März");
}

TEST(Text, Slug) {
  EXPECT_EQ(slug("Jan de Boer"), "jan-de-boer");
  EXPECT_EQ(slug("  The Netherlands! "), "the-netherlands");
  EXPECT_EQ(slug("Tomás Ruiz"), "tomás-ruiz");
  EXPECT_EQ(slug("---"), "");
}

TEST(Text, ParsePositiveInt) {
  EXPECT_EQ(parse_positive_int("1005"), 1005);
  EXPECT_FALSE(parse_positive_int("0").has_value());
  EXPECT_FALSE(parse_positive_int("-3").has_value());
  EXPECT_FALSE(parse_positive_int("12a").has_value());
  EXPECT_FALSE(parse_positive_int("").has_value());
}

}  // namespace
}  // namespace volver::text
