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

#ifndef VOLVER_RECORDS_HPP_
#define VOLVER_RECORDS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace volver {

// A proleptic Gregorian calendar date.
struct Date {
  int year = 0;
  unsigned month = 0;
  unsigned day = 0;

  bool valid() const;
  std::string iso() const;  // YYYY-MM-DD
  static std::optional<Date> parse_iso(std::string_view s);

  auto operator<=>(const Date&) const = default;
};

enum class PersonRole { Editor, Author };

struct PersonRecord {
  std::string full_name;
  PersonRole role = PersonRole::Author;
  std::optional<std::string> affiliation_text;

  bool operator==(const PersonRecord&) const = default;
};

struct PaperRecord {
  std::string title;
  std::vector<PersonRecord> authors;
  std::optional<std::string> pdf_href;  // absolute
  std::optional<std::uint32_t> page_start;
  std::optional<std::uint32_t> page_end;
  bool is_invited = false;
  std::optional<std::string> first_page_text_ref;

  bool operator==(const PaperRecord&) const = default;
};

struct WorkshopRecord {
  std::string full_name;
  std::optional<std::string> acronym;
  std::optional<std::uint32_t> edition_ordinal;

  bool operator==(const WorkshopRecord&) const = default;
};

struct VolumeRecord {
  std::optional<std::uint32_t> volume_number;
  std::string full_title;
  std::vector<WorkshopRecord> workshops;
  std::vector<PersonRecord> editors;
  std::vector<PaperRecord> papers;
  std::optional<int> pub_year;
  std::optional<std::string> location;
  std::optional<Date> event_start;
  std::optional<Date> event_end;
  std::vector<std::uint32_t> see_also_volumes;
  std::string source_iri;

  bool operator==(const VolumeRecord&) const = default;
};

struct VolumeSummary {
  std::optional<std::uint32_t> volume_number;
  std::string label;
  std::string href;

  bool operator==(const VolumeSummary&) const = default;
};

struct IndexRecord {
  std::vector<VolumeSummary> entries;

  bool operator==(const IndexRecord&) const = default;
};

using ExtractionRecord = std::variant<IndexRecord, VolumeRecord>;

// JSON mapping with canonical snake_case field names; absent optionals are
// null and dates are YYYY-MM-DD strings.
void to_json(nlohmann::json& j, const Date& d);
void from_json(const nlohmann::json& j, Date& d);
void to_json(nlohmann::json& j, const PersonRecord& p);
void from_json(const nlohmann::json& j, PersonRecord& p);
void to_json(nlohmann::json& j, const PaperRecord& p);
void from_json(const nlohmann::json& j, PaperRecord& p);
void to_json(nlohmann::json& j, const WorkshopRecord& w);
void from_json(const nlohmann::json& j, WorkshopRecord& w);
void to_json(nlohmann::json& j, const VolumeRecord& v);
void from_json(const nlohmann::json& j, VolumeRecord& v);
void to_json(nlohmann::json& j, const VolumeSummary& s);
void from_json(const nlohmann::json& j, VolumeSummary& s);

}  // namespace volver

#endif  // VOLVER_RECORDS_HPP_
