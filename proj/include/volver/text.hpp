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

#ifndef VOLVER_TEXT_HPP_
#define VOLVER_TEXT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace volver::text {

std::string_view trim(std::string_view s);

// Collapses runs of whitespace (ASCII and U+00A0) into one space and trims.
std::string collapse_whitespace(std::string_view s);

std::string to_lower_ascii(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool icontains(std::string_view haystack, std::string_view needle);

std::vector<std::string> split(std::string_view s, char sep);

// UTF-8 helpers. Invalid sequences decode to U+FFFD.
bool is_valid_utf8(std::string_view s);
std::u32string decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view s);

bool is_upper(char32_t cp);
char32_t to_upper(char32_t cp);
char32_t to_lower(char32_t cp);
std::string to_upper_utf8(std::string_view s);

// Converts raw page bytes to UTF-8. Tries the charset declared in the
// markup, then UTF-8, then Latin-1 (which always succeeds).
std::string decode_html_bytes(std::string_view bytes);

// The charset named by a <meta charset> or http-equiv content attribute in
// the first few kilobytes, lowercased.
std::optional<std::string> declared_charset(std::string_view bytes);

// Lowercase, runs of non-alphanumerics collapsed to '-', trimmed of '-'.
// Non-ASCII letters are kept (lowercased where a mapping is known).
std::string slug(std::string_view s);

std::optional<long> parse_positive_int(std::string_view s);

}  // namespace volver::text

#endif  // VOLVER_TEXT_HPP_
