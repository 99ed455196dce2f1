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


#ifndef VOLVER_RELATIONS_HPP_
#define VOLVER_RELATIONS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "volver/rdf.hpp"
#include "volver/records.hpp"

namespace volver::relations {

// Exact rational in [0, 1], kept in lowest terms.
class SimilarityScore {
 public:
  SimilarityScore() = default;
  SimilarityScore(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool operator==(const SimilarityScore& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const SimilarityScore& o) const;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

inline constexpr double kDefaultThreshold = 0.6;

std::string generate_acronym(std::string_view full_name);

// Matched characters found by the recursive longest-common-substring rule.
std::size_t matched_characters(std::u32string_view a, std::u32string_view b);

// Scores over Unicode code points of UTF-8 input.
SimilarityScore ratcliff_obershelp(std::string_view a, std::string_view b);
SimilarityScore ratcliff_obershelp(std::u32string_view a, std::u32string_view b);

// Uppercased, year tokens removed, whitespace collapsed.
std::string normalize_name(std::string_view name);
// Declared acronym without digits and year suffix, else the generated one.
std::string effective_acronym(const WorkshopRecord& w);

struct WorkshopScores {
  SimilarityScore name;
  SimilarityScore acronym;
};

WorkshopScores workshop_similarity(const WorkshopRecord& w1, const WorkshopRecord& w2);

struct RelationDecision {
  rdf::Iri source_workshop;
  rdf::Iri target_workshop;
  SimilarityScore name_score;
  SimilarityScore acronym_score;
  bool accepted = false;
};

struct Classification {
  rdf::TripleGraph graph;
  std::vector<RelationDecision> decisions;
};

bool accepts(const WorkshopScores& scores, double threshold);

// Throws std::invalid_argument unless 0 < threshold <= 1.
Classification classify_relations(const VolumeRecord& volume,
                                  const std::vector<VolumeRecord>& candidate_volumes,
                                  double threshold, const rdf::IriPolicy& policy);

// source, target, name score, acronym score, ACCEPT|REJECT; tab separated.
std::string format_decision(const RelationDecision& d);

}  // namespace volver::relations

#endif  // VOLVER_RELATIONS_HPP_
