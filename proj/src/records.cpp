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

#include "volver/records.hpp"

#include <chrono>
#include <cstdio>

#include "volver/errors.hpp"
#include "volver/text.hpp"

namespace volver {

using nlohmann::json;

bool Date::valid() const {
  std::chrono::year_month_day ymd{std::chrono::year{year},
                                  std::chrono::month{month},
                                  std::chrono::day{day}};
  return year >= 1 && year <= 9999 && ymd.ok();
}

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
  return buf;
}

std::optional<Date> Date::parse_iso(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  auto y = text::parse_positive_int(s.substr(0, 4));
  auto m = text::parse_positive_int(s.substr(5, 2));
  auto d = text::parse_positive_int(s.substr(8, 2));
  if (!y || !m || !d) return std::nullopt;
  Date date{static_cast<int>(*y), static_cast<unsigned>(*m),
            static_cast<unsigned>(*d)};
  if (!date.valid()) return std::nullopt;
  return date;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    out.reset();
  } else {
    out = it->get<T>();
  }
}

}  // namespace

void to_json(json& j, const Date& d) { j = d.iso(); }

void from_json(const json& j, Date& d) {
  auto parsed = Date::parse_iso(j.get<std::string>());
  if (!parsed) throw Error("bad date '" + j.get<std::string>() + "'");
  d = *parsed;
}

void to_json(json& j, const PersonRecord& p) {
  j = json{{"full_name", p.full_name},
           {"role", p.role == PersonRole::Editor ? "Editor" : "Author"},
           {"affiliation_text", optional_json(p.affiliation_text)}};
}

void from_json(const json& j, PersonRecord& p) {
  p.full_name = j.at("full_name").get<std::string>();
  std::string role = j.at("role").get<std::string>();
  if (role != "Editor" && role != "Author") throw Error("bad role '" + role + "'");
  p.role = role == "Editor" ? PersonRole::Editor : PersonRole::Author;
  read_optional(j, "affiliation_text", p.affiliation_text);
}

void to_json(json& j, const PaperRecord& p) {
  j = json{{"title", p.title},
           {"authors", p.authors},
           {"pdf_href", optional_json(p.pdf_href)},
           {"page_start", optional_json(p.page_start)},
           {"page_end", optional_json(p.page_end)},
           {"is_invited", p.is_invited},
           {"first_page_text_ref", optional_json(p.first_page_text_ref)}};
}

void from_json(const json& j, PaperRecord& p) {
  p.title = j.at("title").get<std::string>();
  p.authors = j.at("authors").get<std::vector<PersonRecord>>();
  read_optional(j, "pdf_href", p.pdf_href);
  read_optional(j, "page_start", p.page_start);
  read_optional(j, "page_end", p.page_end);
  p.is_invited = j.value("is_invited", false);
  read_optional(j, "first_page_text_ref", p.first_page_text_ref);
}

void to_json(json& j, const WorkshopRecord& w) {
  j = json{{"full_name", w.full_name},
           {"acronym", optional_json(w.acronym)},
           {"edition_ordinal", optional_json(w.edition_ordinal)}};
}

void from_json(const json& j, WorkshopRecord& w) {
  w.full_name = j.at("full_name").get<std::string>();
  read_optional(j, "acronym", w.acronym);
  read_optional(j, "edition_ordinal", w.edition_ordinal);
}

void to_json(json& j, const VolumeRecord& v) {
  j = json{{"volume_number", optional_json(v.volume_number)},
           {"full_title", v.full_title},
           {"workshops", v.workshops},
           {"editors", v.editors},
           {"papers", v.papers},
           {"pub_year", optional_json(v.pub_year)},
           {"location", optional_json(v.location)},
           {"event_start", optional_json(v.event_start)},
           {"event_end", optional_json(v.event_end)},
           {"see_also_volumes", v.see_also_volumes},
           {"source_iri", v.source_iri}};
}

void from_json(const json& j, VolumeRecord& v) {
  read_optional(j, "volume_number", v.volume_number);
  v.full_title = j.at("full_title").get<std::string>();
  v.workshops = j.at("workshops").get<std::vector<WorkshopRecord>>();
  v.editors = j.at("editors").get<std::vector<PersonRecord>>();
  v.papers = j.at("papers").get<std::vector<PaperRecord>>();
  read_optional(j, "pub_year", v.pub_year);
  read_optional(j, "location", v.location);
  read_optional(j, "event_start", v.event_start);
  read_optional(j, "event_end", v.event_end);
  v.see_also_volumes = j.value("see_also_volumes", std::vector<std::uint32_t>{});
  v.source_iri = j.at("source_iri").get<std::string>();
}

void to_json(json& j, const VolumeSummary& s) {
  j = json{{"volume_number", optional_json(s.volume_number)},
           {"label", s.label},
           {"href", s.href}};
}

void from_json(const json& j, VolumeSummary& s) {
  read_optional(j, "volume_number", s.volume_number);
  s.label = j.at("label").get<std::string>();
  s.href = j.at("href").get<std::string>();
}

}  // namespace volver
