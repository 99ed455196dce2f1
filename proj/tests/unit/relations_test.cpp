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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "similarity_oracle.hpp"
#include "volver/extractors.hpp"

namespace volver::relations {
namespace {

VolumeRecord fixture_record(std::uint32_t volume) {
  auto manifest = load_corpus(testing::corpus_manifest());
  return std::get<VolumeRecord>(default_registry().extract(read_page(manifest, volume)).record);
}

std::size_t accepted_count(const Classification& c) {
  std::size_t n = 0;
  for (const auto& d : c.decisions) n += d.accepted;
  return n;
}

TEST(Score, ReducedAndOrdered) {
  SimilarityScore s(8, 14);
  EXPECT_EQ(s.numerator(), 4u);
  EXPECT_EQ(s.denominator(), 7u);
  EXPECT_LT(SimilarityScore(1, 3), SimilarityScore(1, 2));
  EXPECT_EQ(SimilarityScore(0, 5), SimilarityScore(0, 1));
  EXPECT_THROW(SimilarityScore(3, 2), std::invalid_argument);
  EXPECT_THROW(SimilarityScore(0, 0), std::invalid_argument);
}

TEST(Acronym, FromUppercaseLetters) {
  EXPECT_EQ(generate_acronym("Concept Extraction Challenge at Making Sense of Microposts 2013"),
            "CECMSM");
  EXPECT_EQ(generate_acronym(""), "");
  EXPECT_EQ(generate_acronym("workshop on things"), "");
  EXPECT_EQ(generate_acronym("Über Öffentliche Daten"), "ÜÖD");
}

TEST(Acronym, Idempotent) {
  for (const char* s : {"Linked Data on the Web", "SePublica", "X-Y Z 2013"}) {
    std::string once = generate_acronym(s);
    EXPECT_EQ(generate_acronym(once), once) << s;
  }
}

TEST(RatcliffObershelp, Trivial) {
  EXPECT_EQ(ratcliff_obershelp("WORKSHOP", "WORKSHOP"), SimilarityScore(1, 1));
  EXPECT_EQ(ratcliff_obershelp("ABC", "XYZ"), SimilarityScore(0, 1));
  EXPECT_EQ(ratcliff_obershelp("", ""), SimilarityScore(1, 1));
  EXPECT_EQ(ratcliff_obershelp("", "A"), SimilarityScore(0, 1));
}

TEST(RatcliffObershelp, Gestalt) {
  EXPECT_EQ(ratcliff_obershelp("GESTALT", "GESTURE"), SimilarityScore(8, 14));
  EXPECT_EQ(matched_characters(U"GESTALT", U"GESTURE"), 4u);
}

// Values frozen from Python's difflib.SequenceMatcher(None, a, b,
// autojunk=False), which applies the same longest-block recursion and
// tie-break.
TEST(RatcliffObershelp, AgreesWithDifflib) {
  struct Case {
    const char* a;
    const char* b;
    std::uint64_t num, den;
  };
  const Case cases[] = {
      {"WIKIMEDIA", "WIKIMANIA", 7, 9},
      {"PENNSYLVANIA", "PENCILVANEYA", 2, 3},
      {"ABCD", "BCDA", 3, 4},
      {"LINKED SCIENCE", "LINKED DATA ON THE WEB", 1, 2},
      {"MAKING SENSE OF MICROPOSTS", "MAKING SENSE OF MICROPOSTS (#MSM)", 52, 59},
      {"CECMSM", "MSM", 2, 3},
      {"ABAB", "BABA", 3, 4},
      {"Köln", "Koln", 3, 4},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(ratcliff_obershelp(c.a, c.b), SimilarityScore(c.num, c.den)) << c.a << " / " << c.b;
  }
}

TEST(RatcliffObershelp, CodePointsNotBytes) {
  // "é" is two bytes but one character.
  EXPECT_EQ(ratcliff_obershelp("é", "é"), SimilarityScore(1, 1));
  EXPECT_EQ(ratcliff_obershelp("aé", "a"), SimilarityScore(2, 3));
}

TEST(RatcliffObershelp, RangeOnRandomInput) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto a = testing::random_word(rng, 12, "ABCD");
    auto b = testing::random_word(rng, 12, "ABCD");
    auto s = ratcliff_obershelp(a, b);
    EXPECT_LE(s.numerator(), s.denominator());
    EXPECT_LE(testing::DecompositionOracle(a, b).matched(),
              std::min(a.size(), b.size()));
    // The greedy result never exceeds the optimum.
    EXPECT_LE(matched_characters(std::u32string(a.begin(), a.end()),
                                 std::u32string(b.begin(), b.end())),
              testing::DecompositionOracle(a, b).matched());
  }
}

TEST(RatcliffObershelp, DeepRecursion) {
  // Every block is a single "A", so the right remainder recurses 300 deep.
  std::string a, b;
  for (int i = 0; i < 300; ++i) {
    a += "XA";
    b += "YA";
  }
  EXPECT_EQ(ratcliff_obershelp(a, b), SimilarityScore(1, 2));
}

TEST(Normalize, YearsAndCase) {
  EXPECT_EQ(normalize_name("Making  Sense of Microposts 2013"), "MAKING SENSE OF MICROPOSTS");
  EXPECT_EQ(normalize_name("MSM'13 workshop"), "MSM WORKSHOP");
}

TEST(EffectiveAcronym, DeclaredOrGenerated) {
  EXPECT_EQ(effective_acronym({"Linked Data on the Web", "LDOW2013", std::nullopt}), "LDOW");
  EXPECT_EQ(effective_acronym({"Making Sense of Microposts 2013", std::nullopt, std::nullopt}),
            "MSM");
  EXPECT_EQ(effective_acronym({"x", "SePublica", std::nullopt}), "SEPUBLICA");
}

TEST(WorkshopSimilarity, Examples) {
  WorkshopRecord a{"Semantic Publishing", "SePublica", 1};
  auto same = workshop_similarity(a, a);
  EXPECT_EQ(same.name, SimilarityScore(1, 1));
  EXPECT_EQ(same.acronym, SimilarityScore(1, 1));

  WorkshopRecord m13{"Making Sense of Microposts 2013", std::nullopt, std::nullopt};
  WorkshopRecord m12{"Making Sense of Microposts 2012", "MSM", std::nullopt};
  auto msm = workshop_similarity(m13, m12);
  EXPECT_EQ(msm.name, ratcliff_obershelp("MAKING SENSE OF MICROPOSTS",
                                         "MAKING SENSE OF MICROPOSTS"));
  EXPECT_EQ(msm.acronym, SimilarityScore(1, 1));

  auto none = workshop_similarity({"abc", std::nullopt, std::nullopt},
                                  {"xyz", std::nullopt, std::nullopt});
  EXPECT_EQ(none.name, SimilarityScore(0, 1));
  EXPECT_EQ(none.acronym, SimilarityScore(0, 1));
}

TEST(Classify, JointFixtureDecisions) {
  auto joint = fixture_record(1200);
  std::vector<VolumeRecord> candidates = {fixture_record(10), fixture_record(11)};
  auto c = classify_relations(joint, candidates, kDefaultThreshold, rdf::IriPolicy{});
  ASSERT_EQ(c.decisions.size(), 4u);
  // Expected scores computed independently with difflib over the
  // normalized names and effective acronyms.
  struct Row {
    const char* source;
    const char* target;
    SimilarityScore name, acronym;
    bool accepted;
  };
  const Row rows[] = {
      {"vol-1200/workshop-1", "vol-10/workshop-1", {56, 65}, {1, 1}, true},
      {"vol-1200/workshop-1", "vol-11/workshop-1", {17, 38}, {2, 7}, false},
      {"vol-1200/workshop-2", "vol-10/workshop-1", {19, 35}, {6, 13}, false},
      {"vol-1200/workshop-2", "vol-11/workshop-1", {38, 81}, {1, 6}, false},
  };
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& d = c.decisions[k];
    EXPECT_EQ(d.source_workshop.value(), std::string("http://ceur-ws.org/") + rows[k].source);
    EXPECT_EQ(d.target_workshop.value(), std::string("http://ceur-ws.org/") + rows[k].target);
    EXPECT_EQ(d.name_score, rows[k].name) << k;
    EXPECT_EQ(d.acronym_score, rows[k].acronym) << k;
    EXPECT_EQ(d.accepted, rows[k].accepted) << k;
  }
  ASSERT_EQ(c.graph.size(), 1u);
  const auto& t = *c.graph.triples().begin();
  EXPECT_EQ(t.predicate.value(), "http://www.w3.org/2004/02/skos/core#related");
  EXPECT_EQ(format_decision(c.decisions[0]),
            "http://ceur-ws.org/vol-1200/workshop-1\thttp://ceur-ws.org/vol-10/workshop-1\t"
            "0.861538\t1.000000\tACCEPT");
}

TEST(Classify, MonotoneInThreshold) {
  auto joint = fixture_record(1200);
  std::vector<VolumeRecord> candidates = {fixture_record(10), fixture_record(11)};
  std::size_t previous = SIZE_MAX;
  for (double t : {0.1, 0.3, 0.45, 0.6, 0.75, 0.9, 1.0}) {
    auto n = accepted_count(classify_relations(joint, candidates, t, rdf::IriPolicy{}));
    EXPECT_LE(n, previous) << t;
    previous = n;
  }
}

TEST(Classify, ThresholdBounds) {
  auto joint = fixture_record(1200);
  EXPECT_THROW(classify_relations(joint, {}, 0.0, rdf::IriPolicy{}), std::invalid_argument);
  EXPECT_THROW(classify_relations(joint, {}, 1.5, rdf::IriPolicy{}), std::invalid_argument);
  // Identical names at threshold 1 are still related.
  auto c = classify_relations(joint, {joint}, 1.0, rdf::IriPolicy{});
  EXPECT_EQ(c.graph.size(), 2u);
}

TEST(Classify, UnrelatedTargetGivesNothing) {
  auto v = fixture_record(1005);
  auto c = classify_relations(v, {fixture_record(11)}, kDefaultThreshold, rdf::IriPolicy{});
  EXPECT_TRUE(c.graph.empty());
  EXPECT_EQ(c.decisions.size(), 1u);
}

TEST(Accepts, MaxOfScores) {
  EXPECT_TRUE(accepts({SimilarityScore(3, 5), SimilarityScore(0, 1)}, 0.6));
  EXPECT_TRUE(accepts({SimilarityScore(0, 1), SimilarityScore(1, 1)}, 0.6));
  EXPECT_FALSE(accepts({SimilarityScore(1, 2), SimilarityScore(1, 2)}, 0.6));
}

}  // namespace
}  // namespace volver::relations
