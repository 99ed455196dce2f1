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


// Drives the built volver binary as a user would.

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace volver {
namespace {

using testing::quote;
using testing::run_command;
using testing::TempDir;

testing::CommandResult volver(const std::string& args, bool keep_stderr = false) {
  return run_command(quote(testing::cli()) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null"));
}

TEST(Cli, Similarity) {
  auto r = volver("similarity --a GESTALT --b GESTURE");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0.571429\n");
}

TEST(Cli, QueryPrintsGolden) {
  auto r = volver("query --candidates \"The Netherlands\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "SELECT DISTINCT ?country { VALUES ?search { \"The Netherlands\" } ?country a "
            "dbpedia-owl:Country . { ?name_uri dbpedia-owl:wikiPageRedirects ?country ; "
            "rdfs:label ?label . } UNION { ?country rdfs:label ?label } FILTER( STR(?label) = "
            "?search ) }\n");
}

TEST(Cli, ExtractPrintsRecord) {
  auto r = volver("extract --manifest " + quote(testing::corpus_manifest().string()) +
                  " --volume 1005");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), testing::expected_json("mf-vol"));
}

TEST(Cli, ExtractIndex) {
  auto r = volver("extract --manifest " + quote(testing::corpus_manifest().string()));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), testing::expected_json("index"));
}

TEST(Cli, RunWithFlagsOverridingConfig) {
  TempDir out;
  auto r = volver("run --config " + quote((testing::fixtures() / "run.conf").string()) +
                  " --out " + quote(out.path().string()) + " --formats nt");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "volumes 9/9 extracted, 2 papers linked, 1 relations accepted\n");
  EXPECT_TRUE(std::filesystem::exists(out.path() / "dataset.nt"));
  EXPECT_FALSE(std::filesystem::exists(out.path() / "dataset.ttl"));
}

TEST(Cli, RelatePrintsDecisions) {
  auto r = volver("relate --manifest " + quote(testing::corpus_manifest().string()) +
                  " --volume 1200");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\t0.861538\t1.000000\tACCEPT\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST(Cli, LinkWithMock) {
  auto r = volver("link --text " +
                  quote((testing::corpus_dir() / "papers" / "msm2013-02.txt").string()) +
                  " --endpoint " + quote("mock:" + testing::sparql_dir().string()));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "The Netherlands\thttp://dbpedia.org/resource/Netherlands\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(volver("").exit_code, 2);
  EXPECT_EQ(volver("bogus").exit_code, 2);
  EXPECT_EQ(volver("similarity --a x").exit_code, 2);
  EXPECT_EQ(volver("run").exit_code, 2);
  EXPECT_EQ(volver("run --config missing.toml").exit_code, 2);
  EXPECT_EQ(volver("run --manifest m.tsv --threshold 0").exit_code, 2);
  auto r = volver("run --config missing.toml", true);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Cli, FatalErrorsExitOne) {
  EXPECT_EQ(volver("extract --manifest /nonexistent/manifest.tsv").exit_code, 1);
  EXPECT_EQ(volver("extract --manifest " + quote(testing::corpus_manifest().string()) +
                   " --volume 424242")
                .exit_code,
            1);
}

TEST(Cli, Help) {
  auto r = volver("--help");
  EXPECT_EQ(r.exit_code, 0);
  for (const char* sub : {"fetch", "run", "extract", "similarity", "query"}) {
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  }
}

}  // namespace
}  // namespace volver
