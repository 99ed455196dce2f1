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

#ifndef VOLVER_EXTRACTORS_HPP_
#define VOLVER_EXTRACTORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "volver/corpus.hpp"
#include "volver/records.hpp"
#include "volver/template_engine.hpp"

namespace volver {

// Template ids as they appear in logs and run reports.
inline constexpr const char* kIndexTemplate = "index";
inline constexpr const char* kRdfaTemplate = "rdfa";
inline constexpr const char* kMicroformatTemplate = "microformat";
inline constexpr const char* kHeuristicATemplate = "heuristicA";
inline constexpr const char* kHeuristicBTemplate = "heuristicB";

// Index page: one summary per `Vol-N` anchor in document order, first
// occurrence of each volume kept. Throws NoVolumesFound.
std::vector<VolumeSummary> extract_index(const PageDocument& page);
MatchOutcome match_index(const ParsedPage& page);

// Volume page templates. Each returns NotApplicable when its signature
// markup is missing from the page.
MatchOutcome extract_volume_rdfa(const ParsedPage& page);
MatchOutcome extract_volume_microformat(const ParsedPage& page);
MatchOutcome extract_volume_heuristic_a(const ParsedPage& page);
MatchOutcome extract_volume_heuristic_b(const ParsedPage& page);

MatchOutcome extract_volume_rdfa(const PageDocument& page);
MatchOutcome extract_volume_microformat(const PageDocument& page);
MatchOutcome extract_volume_heuristic_a(const PageDocument& page);
MatchOutcome extract_volume_heuristic_b(const PageDocument& page);

// Volume numbers linked from the page, excluding the page's own volume.
// Deduplicated, ascending.
std::vector<std::uint32_t> collect_see_also(const ParsedPage& page);
std::vector<std::uint32_t> collect_see_also(const PageDocument& page);

// index@0; rdfa@0, microformat@1, heuristicA@2, heuristicB@3.
TemplateRegistry default_registry();

// --- title and date parsing -------------------------------------------------

// Splits a (possibly joint) proceedings title into workshops. Always returns
// at least one workshop for a non-empty title.
std::vector<WorkshopRecord> parse_joint_title(std::string_view full_title);

struct LocTime {
  std::optional<std::string> location;
  std::optional<Date> start;
  std::optional<Date> end;

  bool operator==(const LocTime&) const = default;
};

// Recognizes "City, Country, Month D[-D2], YYYY" and
// "City, Country, Month D to Month D2, YYYY". Never throws; anything else
// yields all fields absent.
LocTime parse_loctime(std::string_view text);

// Drops a trailing year ("LDOW2013", "AAA 2013", "MSM'13") from an acronym.
std::string clean_acronym(std::string_view acronym);

// "First" -> 1, "2nd" -> 2, ... when the text contains an ordinal.
std::optional<std::uint32_t> parse_edition_ordinal(std::string_view text);

std::optional<std::uint32_t> volume_number_in(std::string_view text);

}  // namespace volver

#endif  // VOLVER_EXTRACTORS_HPP_
