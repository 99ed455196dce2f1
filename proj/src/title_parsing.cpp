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

#include <array>
#include <regex>

#include "volver/extractors.hpp"
#include "volver/text.hpp"

namespace volver {

namespace {

constexpr std::array<const char*, 20> kOrdinalWords = {
    "first",     "second",     "third",      "fourth",     "fifth",
    "sixth",     "seventh",    "eighth",     "ninth",      "tenth",
    "eleventh",  "twelfth",    "thirteenth", "fourteenth", "fifteenth",
    "sixteenth", "seventeenth", "eighteenth", "nineteenth", "twentieth"};

const std::regex& proceedings_prefix() {
  static const std::regex re(
      R"(^\s*(?:the\s+)?(?:joint\s+)?proceedings\s+of\s+(?:the\s+)?)",
      std::regex::icase);
  return re;
}

// "(AAA 2013)" style group: an acronym-looking token, optionally a year.
const std::regex& acronym_group() {
  static const std::regex re(
      R"(\(\s*([#A-Za-z][A-Za-z0-9#+&./\-]*(?:[\s\-]*(?:'|\xE2\x80\x99)?\d{2,4})?)\s*\))");
  return re;
}

std::string strip_segment(std::string s) {
  static const std::regex leading(R"(^\s*(?:(?:and|the|&)\s+)+)", std::regex::icase);
  static const std::regex colocated(R"(,?\s+(?:co-?located|held)\s+(?:with|at)\b.*$)",
                                    std::regex::icase);
  s = std::regex_replace(s, colocated, "");
  s = std::regex_replace(s, leading, "");
  std::string_view v = text::trim(s);
  while (!v.empty() && (v.back() == ',' || v.back() == ';' || v.back() == '.' ||
                        v.back() == ':')) {
    v.remove_suffix(1);
    v = text::trim(v);
  }
  return std::string(v);
}

WorkshopRecord make_workshop(const std::string& segment) {
  WorkshopRecord w;
  std::string name = segment;
  std::smatch m;
  std::string::const_iterator search_from = segment.cbegin();
  std::optional<std::smatch> last;
  while (std::regex_search(search_from, segment.cend(), m, acronym_group())) {
    bool has_upper = false;
    for (char c : m[1].str()) has_upper |= (c >= 'A' && c <= 'Z');
    if (has_upper) last = m;
    search_from = m[0].second;
  }
  if (last) {
    w.acronym = clean_acronym((*last)[1].str());
    auto pos = static_cast<std::size_t>((*last)[0].first - segment.cbegin());
    name = segment.substr(0, pos) + segment.substr(pos + (*last)[0].length());
  }
  w.full_name = strip_segment(text::collapse_whitespace(name));
  w.edition_ordinal = parse_edition_ordinal(w.full_name);
  return w;
}

}  // namespace

std::optional<std::uint32_t> parse_edition_ordinal(std::string_view text_in) {
  std::string lowered = text::to_lower_ascii(text_in);
  static const std::regex word(
      R"(\b(first|second|third|fourth|fifth|sixth|seventh|eighth|ninth|tenth|eleventh|twelfth|thirteenth|fourteenth|fifteenth|sixteenth|seventeenth|eighteenth|nineteenth|twentieth)\b)");
  static const std::regex numeric(R"(\b(\d{1,3})(?:st|nd|rd|th)\b)");
  std::smatch wm, nm;
  bool has_word = std::regex_search(lowered, wm, word);
  bool has_num = std::regex_search(lowered, nm, numeric);
  if (has_word && (!has_num || wm.position(0) <= nm.position(0))) {
    for (std::size_t i = 0; i < kOrdinalWords.size(); ++i) {
      if (wm[1].str() == kOrdinalWords[i]) return static_cast<std::uint32_t>(i + 1);
    }
  }
  if (has_num) {
    auto n = text::parse_positive_int(nm[1].str());
    if (n) return static_cast<std::uint32_t>(*n);
  }
  return std::nullopt;
}

std::string clean_acronym(std::string_view acronym) {
  static const std::regex year(R"(^(.*?)[\s\-_]*(?:(?:'|\xE2\x80\x99)\d{2}|\d{4})$)");
  std::string s(text::trim(acronym));
  std::smatch m;
  if (std::regex_match(s, m, year)) {
    std::string stripped(text::trim(m[1].str()));
    if (!stripped.empty()) return stripped;
  }
  return s;
}

std::vector<WorkshopRecord> parse_joint_title(std::string_view full_title) {
  std::string title = text::collapse_whitespace(full_title);
  if (title.empty()) return {};
  static const std::regex joint(R"(joint\s+proceedings|co-?located)", std::regex::icase);
  bool is_joint = std::regex_search(title, joint);
  std::string body = std::regex_replace(title, proceedings_prefix(), "",
                                        std::regex_constants::format_first_only);

  std::vector<std::string> segments;
  if (is_joint) {
    // With parenthesized acronyms, only connectors right after ')' split, so
    // workshop names that contain "and" survive.
    static const std::regex after_paren(
        R"(\)\s*(?:,\s*(?:and\s+|&\s*)?|and\s+|&\s*))", std::regex::icase);
    static const std::regex plain(R"(\s*,\s*(?:and\s+|&\s*)?|\s+and\s+|\s*&\s*)",
                                  std::regex::icase);
    bool paren_split = std::regex_search(body, after_paren);
    const std::regex& sep = paren_split ? after_paren : plain;
    std::size_t start = 0;
    for (auto it = std::sregex_iterator(body.begin(), body.end(), sep);
         it != std::sregex_iterator(); ++it) {
      std::size_t cut = static_cast<std::size_t>(it->position(0));
      std::size_t keep = paren_split ? 1 : 0;  // keep the ')'
      segments.push_back(body.substr(start, cut + keep - start));
      start = cut + static_cast<std::size_t>(it->length(0));
    }
    segments.push_back(body.substr(start));
  } else {
    segments.push_back(body);
  }

  std::vector<WorkshopRecord> out;
  for (const std::string& seg : segments) {
    WorkshopRecord w = make_workshop(seg);
    if (!w.full_name.empty()) out.push_back(std::move(w));
  }
  if (out.empty()) {
    WorkshopRecord w;
    w.full_name = title;
    w.edition_ordinal = parse_edition_ordinal(title);
    out.push_back(std::move(w));
  }
  return out;
}

LocTime parse_loctime(std::string_view input) {
  LocTime none;
  if (input.size() > 300) return none;
  static const std::string month =
      "(January|February|March|April|May|June|July|August|September|October|"
      "November|December|Jan|Feb|Mar|Apr|Jun|Jul|Aug|Sept|Sep|Oct|Nov|Dec)";
  static const std::string day = R"((\d{1,2})(?:st|nd|rd|th)?)";
  static const std::regex re(
      R"(^\s*(.*?[^\s,])\s*,\s*)" + month + R"(\.?\s+)" + day +
          R"((?:\s*(?:-|\xE2\x80\x93|\xE2\x80\x94)\s*)" + day + R"(|\s+to\s+)" +
          month + R"(\.?\s+)" + day + R"()?\s*,\s*(\d{4})\s*\.?\s*$)",
      std::regex::icase);
  static const std::array<const char*, 12> names = {
      "jan", "feb", "mar", "apr", "may", "jun",
      "jul", "aug", "sep", "oct", "nov", "dec"};
  auto month_number = [&](const std::string& m) -> unsigned {
    std::string prefix = text::to_lower_ascii(m.substr(0, 3));
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (prefix == names[i]) return static_cast<unsigned>(i + 1);
    }
    return 0;
  };
  std::string s(input);
  std::smatch m;
  if (!std::regex_match(s, m, re)) return none;
  auto year = text::parse_positive_int(m[7].str());
  auto d1 = text::parse_positive_int(m[3].str());
  if (!year || !d1) return none;
  Date start{static_cast<int>(*year), month_number(m[2].str()),
             static_cast<unsigned>(*d1)};
  Date end = start;
  if (m[4].matched) {
    auto d2 = text::parse_positive_int(m[4].str());
    if (!d2) return none;
    end.day = static_cast<unsigned>(*d2);
  } else if (m[5].matched) {
    auto d2 = text::parse_positive_int(m[6].str());
    if (!d2) return none;
    end.month = month_number(m[5].str());
    end.day = static_cast<unsigned>(*d2);
  }
  if (!start.valid() || !end.valid() || end < start) return none;
  LocTime out;
  out.location = text::collapse_whitespace(m[1].str());
  out.start = start;
  out.end = end;
  return out;
}

std::optional<std::uint32_t> volume_number_in(std::string_view s) {
  static const std::regex re(R"(Vol-(\d+))", std::regex::icase);
  std::string str(s);
  std::smatch m;
  if (!std::regex_search(str, m, re)) return std::nullopt;
  auto n = text::parse_positive_int(m[1].str());
  if (!n || *n > 0xFFFFFFFFL) return std::nullopt;
  return static_cast<std::uint32_t>(*n);
}

}  // namespace volver
