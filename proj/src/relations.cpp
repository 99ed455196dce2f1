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

#include "volver/relations.hpp"

#include <numeric>
#include <regex>
#include <stdexcept>

#include <fmt/format.h>

#include "volver/text.hpp"

namespace volver::relations {

SimilarityScore::SimilarityScore(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0 || numerator > denominator) {
    throw std::invalid_argument("similarity must lie in [0, 1]");
  }
  std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
  if (num_ == 0) den_ = 1;
}

std::strong_ordering SimilarityScore::operator<=>(const SimilarityScore& o) const {
  unsigned __int128 l = static_cast<unsigned __int128>(num_) * o.den_;
  unsigned __int128 r = static_cast<unsigned __int128>(o.num_) * den_;
  return l <=> r;
}

std::string generate_acronym(std::string_view full_name) {
  std::u32string out;
  for (char32_t cp : text::decode_utf8(full_name)) {
    if (text::is_upper(cp)) out += cp;
  }
  return text::encode_utf8(out);
}

namespace {

struct Block {
  std::size_t i = 0, j = 0, size = 0;
};

// Longest common substring of a[alo,ahi) and b[blo,bhi); ties go to the
// smallest i, then the smallest j.
Block longest_match(std::u32string_view a, std::size_t alo, std::size_t ahi,
                    std::u32string_view b, std::size_t blo, std::size_t bhi) {
  Block best{alo, blo, 0};
  std::vector<std::size_t> prev(bhi - blo + 1, 0), cur(bhi - blo + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      std::size_t k = j - blo + 1;
      cur[k] = a[i] == b[j] ? prev[k - 1] + 1 : 0;
      if (cur[k] > best.size) {
        // Strictly longer only: the first block found at a given length
        // ends earliest in a, and for equal ends, earliest in b.
        best = Block{i + 1 - cur[k], j + 1 - cur[k], cur[k]};
      }
    }
    std::swap(prev, cur);
    std::fill(cur.begin(), cur.end(), 0);
  }
  return best;
}

}  // namespace

std::size_t matched_characters(std::u32string_view a, std::u32string_view b) {
  struct Range {
    std::size_t alo, ahi, blo, bhi;
  };
  std::size_t total = 0;
  std::vector<Range> stack{{0, a.size(), 0, b.size()}};
  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    if (r.alo >= r.ahi || r.blo >= r.bhi) continue;
    Block m = longest_match(a, r.alo, r.ahi, b, r.blo, r.bhi);
    if (m.size == 0) continue;
    total += m.size;
    stack.push_back({r.alo, m.i, r.blo, m.j});
    stack.push_back({m.i + m.size, r.ahi, m.j + m.size, r.bhi});
  }
  return total;
}

SimilarityScore ratcliff_obershelp(std::u32string_view a, std::u32string_view b) {
  std::size_t total = a.size() + b.size();
  if (total == 0) return SimilarityScore(1, 1);
  return SimilarityScore(2 * matched_characters(a, b), total);
}

SimilarityScore ratcliff_obershelp(std::string_view a, std::string_view b) {
  return ratcliff_obershelp(text::decode_utf8(a), text::decode_utf8(b));
}

namespace {

std::string strip_years(std::string_view s) {
  static const std::regex year(R"((^|[^0-9])\d{4}(?![0-9]))");
  static const std::regex short_year(R"((?:'|\xE2\x80\x99)\d{2}(?![0-9]))");
  std::string out = std::regex_replace(std::string(s), year, "$1 ");
  return std::regex_replace(out, short_year, " ");
}

}  // namespace

std::string normalize_name(std::string_view name) {
  return text::collapse_whitespace(text::to_upper_utf8(strip_years(name)));
}

std::string effective_acronym(const WorkshopRecord& w) {
  if (w.acronym) {
    std::string declared;
    for (char c : text::collapse_whitespace(strip_years(*w.acronym))) {
      if (!(c >= '0' && c <= '9') && c != '\'') declared += c;
    }
    declared = text::to_upper_utf8(text::trim(declared));
    if (!declared.empty()) return declared;
  }
  return generate_acronym(w.full_name);
}

WorkshopScores workshop_similarity(const WorkshopRecord& w1, const WorkshopRecord& w2) {
  WorkshopScores s;
  s.name = ratcliff_obershelp(normalize_name(w1.full_name), normalize_name(w2.full_name));
  std::string a1 = effective_acronym(w1);
  std::string a2 = effective_acronym(w2);
  s.acronym = a1.empty() || a2.empty() ? SimilarityScore(0, 1) : ratcliff_obershelp(a1, a2);
  return s;
}

bool accepts(const WorkshopScores& scores, double threshold) {
  return std::max(scores.name, scores.acronym).value() >= threshold;
}

Classification classify_relations(const VolumeRecord& volume,
                                  const std::vector<VolumeRecord>& candidate_volumes,
                                  double threshold, const rdf::IriPolicy& policy) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in (0, 1]");
  }
  Classification out;
  if (!volume.volume_number) return out;
  const rdf::Iri related = rdf::curie("skos:related");
  for (std::size_t i = 0; i < volume.workshops.size(); ++i) {
    rdf::Iri source = rdf::mint_workshop(policy, *volume.volume_number, i + 1);
    for (const auto& candidate : candidate_volumes) {
      if (!candidate.volume_number) continue;
      for (std::size_t j = 0; j < candidate.workshops.size(); ++j) {
        rdf::Iri target = rdf::mint_workshop(policy, *candidate.volume_number, j + 1);
        WorkshopScores scores =
            workshop_similarity(volume.workshops[i], candidate.workshops[j]);
        bool ok = accepts(scores, threshold);
        if (ok) out.graph.add(source, related, target);
        out.decisions.push_back(
            RelationDecision{source, target, scores.name, scores.acronym, ok});
      }
    }
  }
  return out;
}

std::string format_decision(const RelationDecision& d) {
  return fmt::format("{}\t{}\t{:.6f}\t{:.6f}\t{}", d.source_workshop.value(),
                     d.target_workshop.value(), d.name_score.value(),
                     d.acronym_score.value(), d.accepted ? "ACCEPT" : "REJECT");
}

}  // namespace volver::relations
