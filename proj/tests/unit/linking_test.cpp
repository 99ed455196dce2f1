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


#include "volver/linking.hpp"

#include <gtest/gtest.h>

#include <atomic>

#include "fixtures.hpp"
#include "sparql_validator.hpp"
#include "volver/errors.hpp"

namespace volver::linking {
namespace {

using testing::SparqlValidator;

const std::string kGolden =
    "SELECT DISTINCT ?country { VALUES ?search { \"The Netherlands\" } ?country a "
    "dbpedia-owl:Country . { ?name_uri dbpedia-owl:wikiPageRedirects ?country ; rdfs:label "
    "?label . } UNION { ?country rdfs:label ?label } FILTER( STR(?label) = ?search ) }";

const char* kNetherlands = "http://dbpedia.org/resource/Netherlands";

EndpointConfig quick() {
  EndpointConfig c;
  c.backoff = std::chrono::milliseconds(0);
  return c;
}

std::string rows(const std::vector<std::string>& iris) {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& i : iris) b.push_back({{"country", {{"type", "uri"}, {"value", i}}}});
  return nlohmann::json{{"head", {{"vars", {"country"}}}}, {"results", {{"bindings", b}}}}.dump();
}

std::vector<std::string> surfaces(const std::vector<CountryCandidate>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.surface);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(Query, Golden) {
  EXPECT_EQ(build_country_query({"The Netherlands"}), kGolden);
  EXPECT_NO_THROW(SparqlValidator::check(kGolden));
}

TEST(Query, SeveralSurfaces) {
  std::string q = build_country_query({"France", "Germany"});
  std::string expected = kGolden;
  expected.replace(expected.find("\"The Netherlands\""), 17, "\"France\" \"Germany\"");
  EXPECT_EQ(q, expected);
  EXPECT_TRUE(SparqlValidator::valid(q));
}

TEST(Query, Escaping) {
  std::string q = build_country_query({"Say \"hi\"\\ now\n"});
  EXPECT_NE(q.find(R"("Say \"hi\"\\ now\n")"), std::string::npos);
  EXPECT_TRUE(SparqlValidator::valid(q));
}

TEST(Query, FullIriClassIsBracketed) {
  std::string q = build_country_query({"X"}, "http://dbpedia.org/ontology/Country");
  EXPECT_NE(q.find("?country a <http://dbpedia.org/ontology/Country> ."), std::string::npos);
  EXPECT_TRUE(SparqlValidator::valid(q));
}

TEST(Query, EmptyCandidates) { EXPECT_THROW(build_country_query({}), EmptyCandidateList); }

TEST(Validator, RejectsBrokenQueries) {
  EXPECT_FALSE(SparqlValidator::valid("SELECT ?x { ?x a }"));
  EXPECT_FALSE(SparqlValidator::valid("SELECT DISTINCT ?x { VALUES ?s { \"a } }"));
  EXPECT_FALSE(SparqlValidator::valid("SELECT ?x { ?x ?p ?o "));
  EXPECT_FALSE(SparqlValidator::valid("SELECT ?x { FILTER( STR(?x) = ) }"));
  EXPECT_FALSE(SparqlValidator::valid("SELECT ?x { ?x ?p ?o } UNION"));
  EXPECT_TRUE(SparqlValidator::valid("SELECT * WHERE { ?x ?p ?o . FILTER(?x != ?o) } LIMIT 5"));
}

TEST(Candidates, CountriesAtEndOfLine) {
  const char* text =
      "A Title\n"
      "Ann Author\n"
      "ITMO University, Saint Petersburg, Russia\n"
      "VU University Amsterdam, The Netherlands\n"
      "Abstract. Results from France.\n";
  auto c = extract_country_candidates(text);
  auto s = surfaces(c);
  EXPECT_TRUE(has(s, "Russia"));
  EXPECT_TRUE(has(s, "The Netherlands"));
  EXPECT_FALSE(has(s, "France"));  // past the abstract line
  for (const auto& cand : c) {
    EXPECT_EQ(std::string(text).substr(cand.char_offset, cand.surface.size()), cand.surface);
  }
}

TEST(Candidates, BeforePostalCodeOrEmail) {
  auto s = surfaces(extract_country_candidates(
      "T\nData Institute, 20095 Hamburg, Germany\nLab, Spain j.doe@example.org\n"));
  EXPECT_TRUE(has(s, "Germany"));
  EXPECT_TRUE(has(s, "Spain"));
}

TEST(Candidates, Empty) {
  EXPECT_TRUE(extract_country_candidates("").empty());
  EXPECT_TRUE(extract_affiliation_candidates("").empty());
}

TEST(Affiliations, KeywordLines) {
  auto a = extract_affiliation_candidates("Title\nITMO University\nAbstract. x\n");
  EXPECT_EQ(a, std::vector<std::string>{"ITMO University"});
  auto b = extract_affiliation_candidates("Title\nDept. of Computer Science, X University\n");
  EXPECT_EQ(b, std::vector<std::string>{"Dept. of Computer Science, X University"});
  EXPECT_TRUE(extract_affiliation_candidates("Title\nAnn Author\nBerlin\n").empty());
}

TEST(Bindings, ParseAndMalformed) {
  EXPECT_EQ(parse_bindings(rows({kNetherlands})), std::vector<std::string>{kNetherlands});
  EXPECT_TRUE(parse_bindings(rows({})).empty());
  EXPECT_THROW(parse_bindings("not json"), MalformedResponse);
  EXPECT_THROW(parse_bindings("{\"results\": 3}"), MalformedResponse);
}

TEST(Link, MockFixtureNetherlands) {
  auto t = mock_transport(testing::sparql_dir());
  auto linked = link_countries({{"The Netherlands", 0}}, quick(), t);
  ASSERT_EQ(linked.size(), 1u);
  EXPECT_EQ(linked[0].surface, "The Netherlands");
  EXPECT_EQ(linked[0].iri.value(), kNetherlands);
}

TEST(Link, ZeroRows) {
  Transport t = [](const std::string&) { return rows({}); };
  EXPECT_TRUE(link_countries({{"Atlantis", 0}}, quick(), t).empty());
}

TEST(Link, RetriesThenUnreachable) {
  std::atomic<int> calls{0};
  Transport t = [&](const std::string&) -> std::string {
    ++calls;
    throw TransportError("timeout");
  };
  EXPECT_THROW(link_countries({{"Germany", 0}}, quick(), t), EndpointUnreachable);
  EXPECT_EQ(calls.load(), 4);
}

TEST(Link, RecoversOnLaterAttempt) {
  int calls = 0;
  Transport t = [&](const std::string&) -> std::string {
    if (++calls < 3) throw TransportError("flaky");
    return rows({"http://dbpedia.org/resource/Germany"});
  };
  auto linked = link_countries({{"Germany", 0}}, quick(), t);
  ASSERT_EQ(linked.size(), 1u);
  EXPECT_EQ(calls, 3);
}

TEST(Link, MalformedIsNotRetried) {
  int calls = 0;
  Transport t = [&](const std::string&) -> std::string {
    ++calls;
    return "<html>oops</html>";
  };
  EXPECT_THROW(link_countries({{"Germany", 0}}, quick(), t), MalformedResponse);
  EXPECT_EQ(calls, 1);
}

TEST(Link, MockErrorFile) {
  auto t = mock_transport(testing::sparql_dir());
  EXPECT_THROW(link_countries({{"Freedonia", 0}}, quick(), t), EndpointUnreachable);
}

TEST(Link, AttributionAcrossSurfaces) {
  Transport t = [](const std::string&) {
    return rows({"http://dbpedia.org/resource/Germany", kNetherlands});
  };
  auto linked = link_countries({{"The Netherlands", 0}, {"Germany", 20}}, quick(), t);
  ASSERT_EQ(linked.size(), 2u);
  EXPECT_EQ(linked[0].surface, "The Netherlands");
  EXPECT_EQ(linked[0].iri.value(), kNetherlands);
  EXPECT_EQ(linked[1].surface, "Germany");
}

TEST(Link, ArticleFreeRetry) {
  std::vector<std::string> seen;
  Transport t = [&](const std::string& q) {
    seen.push_back(q);
    if (q.find("\"Netherlands\"") != std::string::npos) return rows({kNetherlands});
    return rows({});
  };
  auto linked = link_countries({{"The Netherlands", 0}}, quick(), t);
  ASSERT_EQ(seen.size(), 2u);
  ASSERT_EQ(linked.size(), 1u);
  EXPECT_EQ(linked[0].surface, "The Netherlands");
}

TEST(Link, MakeTransportSelectsMock) {
  EndpointConfig c = quick();
  c.endpoint_iri = "mock:" + testing::sparql_dir().string();
  auto linked = link_countries({{"Germany", 0}}, c, make_transport(c));
  ASSERT_EQ(linked.size(), 1u);
  EXPECT_EQ(linked[0].iri.value(), "http://dbpedia.org/resource/Germany");
}

TEST(Attach, SetSemantics) {
  rdf::Iri p("http://ceur-ws.org/Vol-1005/msm2013-02.pdf");
  LinkedCountry nl{"The Netherlands", rdf::Iri(kNetherlands)};
  EXPECT_EQ(attach_country_triples(p, {nl}).size(), 1u);
  EXPECT_TRUE(attach_country_triples(p, {}).empty());
  EXPECT_EQ(attach_country_triples(p, {nl, nl}).size(), 1u);
  EXPECT_EQ(attach_country_triples(p, {nl}).triples().begin()->predicate.value(),
            "http://dbpedia.org/ontology/country");
}

}  // namespace
}  // namespace volver::linking
