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


#include "volver/rdf.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "volver/errors.hpp"
#include "volver/extractors.hpp"

namespace volver::rdf {
namespace {

const char* kTimelineBegins = "http://purl.org/NET/c4dm/timeline.owl#beginsAtDateTime";
const char* kTimelineEnds = "http://purl.org/NET/c4dm/timeline.owl#endsAtDateTime";
const char* kTimelineAt = "http://purl.org/NET/c4dm/timeline.owl#atDate";

VolumeRecord fixture_record(std::uint32_t volume) {
  auto manifest = load_corpus(testing::corpus_manifest());
  return std::get<VolumeRecord>(default_registry().extract(read_page(manifest, volume)).record);
}

std::size_t count_predicate(const TripleGraph& g, const std::string& p) {
  std::size_t n = 0;
  for (const auto& t : g.triples()) n += t.predicate.value() == p;
  return n;
}

TEST(Iri, Validation) {
  EXPECT_NO_THROW(Iri("http://ceur-ws.org/Vol-1/"));
  EXPECT_THROW(Iri("Vol-1/"), InvalidIri);
  EXPECT_THROW(Iri("_:b0"), InvalidIri);
  EXPECT_THROW(Iri("http://a b/"), InvalidIri);
  EXPECT_THROW(Iri("http://a/<x>"), InvalidIri);
}

TEST(Curie, Expansion) {
  EXPECT_EQ(curie("swrc:editor").value(), "http://swrc.ontoware.org/ontology#editor");
  EXPECT_EQ(curie("dbpedia-owl:country").value(), "http://dbpedia.org/ontology/country");
  EXPECT_THROW(curie("nope:x"), std::invalid_argument);
}

TEST(Graph, BindConflicts) {
  TripleGraph g;
  EXPECT_NO_THROW(g.bind("swrc", ns::kSwrc));
  EXPECT_NO_THROW(g.bind("ex", "http://example.org/"));
  EXPECT_THROW(g.bind("swrc", "http://example.org/other#"), std::invalid_argument);
}

TEST(Mint, Patterns) {
  IriPolicy policy;
  VolumeRecord v;
  v.volume_number = 1005;
  v.source_iri = "http://ceur-ws.org/Vol-1005/";
  EXPECT_EQ(mint_volume(v).value(), "http://ceur-ws.org/Vol-1005/");
  EXPECT_EQ(mint_workshop(policy, 1005, 1).value(), "http://ceur-ws.org/vol-1005/workshop-1");
  EXPECT_EQ(mint_person(policy, "Ada Quist").value(), "http://ceur-ws.org/person/ada-quist");
  EXPECT_EQ(mint_volume_number(policy, 10).value(), "http://ceur-ws.org/Vol-10/");
  EXPECT_THROW(mint_person(policy, "!!!"), UnmintableEntity);
}

TEST(Mint, TitleCollisionsGetSuffix) {
  IriPolicy policy;
  VolumeRecord v;
  v.volume_number = 3;
  v.source_iri = "http://ceur-ws.org/Vol-3/";
  PaperRecord p;
  p.title = "Same Title";
  v.papers = {p, p, p};
  v.papers[2].pdf_href = "http://ceur-ws.org/Vol-3/x.pdf";
  auto iris = mint_papers(policy, v);
  ASSERT_EQ(iris.size(), 3u);
  EXPECT_EQ(iris[0].value(), "http://ceur-ws.org/vol-3/paper-same-title");
  EXPECT_EQ(iris[1].value(), "http://ceur-ws.org/vol-3/paper-same-title-2");
  EXPECT_EQ(iris[2].value(), "http://ceur-ws.org/Vol-3/x.pdf");
}

TEST(Timeline, SingleDate) {
  Iri w("http://ceur-ws.org/vol-1/workshop-1");
  auto g = emit_timeline(w, {2013, 5, 26}, {2013, 5, 26});
  ASSERT_EQ(g.size(), 1u);
  const auto& t = *g.triples().begin();
  EXPECT_EQ(t.predicate.value(), kTimelineAt);
  const auto& lit = std::get<Literal>(t.object);
  EXPECT_EQ(lit.lexical, "2013-05-26");
  EXPECT_EQ(lit.datatype->value(), std::string(ns::kXsd) + "date");
}

TEST(Timeline, Interval) {
  Iri w("http://ceur-ws.org/vol-1/workshop-1");
  auto g = emit_timeline(w, {2014, 7, 21}, {2014, 7, 22});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(count_predicate(g, kTimelineBegins), 1u);
  EXPECT_EQ(count_predicate(g, kTimelineEnds), 1u);
  EXPECT_THROW(emit_timeline(w, {2014, 7, 22}, {2014, 7, 21}), InvalidInterval);
}

TEST(SeeAlso, SetSemantics) {
  Iri v("http://ceur-ws.org/Vol-1200/");
  Iri a("http://ceur-ws.org/Vol-100/"), b("http://ceur-ws.org/Vol-250/");
  EXPECT_EQ(emit_see_also(v, {a, b}).size(), 2u);
  EXPECT_TRUE(emit_see_also(v, {}).empty());
  EXPECT_EQ(emit_see_also(v, {a, a}).size(), 1u);
}

TEST(Emit, MicroformatFixtureEqualsExpectation) {
  auto g = emit_volume(fixture_record(1005), IriPolicy{});
  auto expected = parse_ntriples(testing::slurp(testing::corpus_dir() / "mf-vol.expected.nt"));
  EXPECT_EQ(g, expected);
  EXPECT_EQ(serialize(g, Format::NTriples),
            testing::slurp(testing::corpus_dir() / "mf-vol.expected.nt"));
}

TEST(Emit, JointFixtureHasTwoWorkshopsOnOneProceedings) {
  auto g = emit_volume(fixture_record(1200), IriPolicy{});
  std::set<std::string> workshops, presenters;
  for (const auto& t : g.triples()) {
    if (t.predicate.value() == std::string(ns::kRdf) + "type" &&
        std::get<Iri>(t.object).value() == std::string(ns::kSwc) + "WorkshopEvent") {
      workshops.insert(t.subject.value());
    }
    if (t.predicate.value() == std::string(ns::kBibo) + "presentedAt") {
      presenters.insert(t.subject.value());
      EXPECT_TRUE(workshops.count(std::get<Iri>(t.object).value()) ||
                  std::get<Iri>(t.object).value().find("workshop-") != std::string::npos);
    }
  }
  EXPECT_EQ(workshops.size(), 2u);
  EXPECT_EQ(presenters, std::set<std::string>{"http://ceur-ws.org/Vol-1200/"});
  EXPECT_EQ(count_predicate(g, std::string(ns::kBibo) + "presentedAt"), 2u);
}

TEST(Emit, NoPubYearNoIssued) {
  auto v = fixture_record(1005);
  v.pub_year.reset();
  auto g = emit_volume(v, IriPolicy{});
  EXPECT_EQ(count_predicate(g, std::string(ns::kDcterms) + "issued"), 0u);
}

TEST(Serialize, EmptyAndDeterministic) {
  EXPECT_EQ(serialize(TripleGraph{}, Format::NTriples), "");
  auto g = emit_volume(fixture_record(1100), IriPolicy{});
  EXPECT_EQ(serialize(g, Format::NTriples), serialize(g, Format::NTriples));
  EXPECT_EQ(serialize(g, Format::Turtle), serialize(g, Format::Turtle));
}

TEST(Serialize, NTriplesIsSortedAndBlankFree) {
  auto g = emit_volume(fixture_record(1200), IriPolicy{});
  std::string nt = serialize(g, Format::NTriples);
  std::vector<std::string> lines;
  std::istringstream in(nt);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  EXPECT_EQ(nt.find("_:"), std::string::npos);
}

TEST(Serialize, RoundTripEscapes) {
  TripleGraph g;
  Iri s("http://example.org/s");
  g.add(s, curie("dcterms:title"), plain("quote \" back \\ nl \n tab \t é"));
  g.add(s, curie("dcterms:issued"), typed("2013", "xsd:gYear"));
  Literal tagged{"Köln", std::nullopt, "de"};
  g.add(s, curie("rdfs:label"), tagged);
  EXPECT_EQ(parse_ntriples(serialize(g, Format::NTriples)), g);
  EXPECT_EQ(parse_ntriples("<http://a/s> <http://a/p> \"\\u00E9\" .\n"),
            [] {
              TripleGraph h;
              h.add(Iri("http://a/s"), Iri("http://a/p"), plain("é"));
              return h;
            }());
}

TEST(Serialize, TurtleUsesPrefixes) {
  auto g = emit_volume(fixture_record(1005), IriPolicy{});
  std::string ttl = serialize(g, Format::Turtle);
  EXPECT_NE(ttl.find("@prefix swrc: <http://swrc.ontoware.org/ontology#> ."), std::string::npos);
  EXPECT_NE(ttl.find(" a swrc:Proceedings"), std::string::npos);
}

TEST(Parse, RejectsBlankNodesAndGarbage) {
  EXPECT_THROW(parse_ntriples("_:b0 <http://a/p> <http://a/o> .\n"), NTriplesSyntaxError);
  EXPECT_THROW(parse_ntriples("<http://a/s> <http://a/p> .\n"), NTriplesSyntaxError);
  EXPECT_THROW(parse_ntriples("<http://a/s> <http://a/p> \"x\"\n"), NTriplesSyntaxError);
  EXPECT_TRUE(parse_ntriples("# comment\n\n").empty());
}

}  // namespace
}  // namespace volver::rdf
