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


#include "volver/config.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "volver/errors.hpp"

namespace volver {
namespace {

TEST(Config, Defaults) {
  Config c = parse_config("", "/base");
  EXPECT_EQ(c.out_dir, "out");
  EXPECT_EQ(c.base_iri, "http://ceur-ws.org/");
  EXPECT_DOUBLE_EQ(c.threshold, 0.6);
  EXPECT_EQ(c.endpoint, "http://dbpedia.org/sparql");
  EXPECT_EQ(c.parallelism, 1u);
  EXPECT_FALSE(c.turtle);
  EXPECT_EQ(c.retries, 3u);
}

TEST(Config, ParsesAllKeys) {
  Config c = parse_config(
      "# comment\n"
      "manifest = corpus/manifest.tsv\n"
      "out_dir = /tmp/out\n"
      "base_iri = http://example.org/\n"
      "threshold = 0.75\n"
      "endpoint = mock:sparql\n"
      "parallelism = 3\n"
      "formats = nt, ttl\n"
      "retries = 0\n"
      "retry_backoff_ms = 5\n"
      "timeout_ms = 250\n",
      "/base");
  EXPECT_EQ(c.manifest, "/base/corpus/manifest.tsv");
  EXPECT_EQ(c.out_dir, "/tmp/out");
  EXPECT_EQ(c.base_iri, "http://example.org/");
  EXPECT_DOUBLE_EQ(c.threshold, 0.75);
  EXPECT_EQ(c.endpoint, "mock:/base/sparql");
  EXPECT_EQ(c.parallelism, 3u);
  EXPECT_TRUE(c.turtle);
  EXPECT_EQ(c.retries, 0u);
  EXPECT_EQ(c.retry_backoff, std::chrono::milliseconds(5));
  EXPECT_EQ(c.timeout, std::chrono::milliseconds(250));
  EXPECT_NO_THROW(validate_config(c));
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("colour = blue\n", {}), ConfigError);
  EXPECT_THROW(parse_config("just words\n", {}), ConfigError);
  EXPECT_THROW(parse_config("threshold = high\n", {}), ConfigError);
  EXPECT_THROW(parse_config("parallelism = -1\n", {}), ConfigError);
  EXPECT_THROW(parse_config("formats = nt,rdfxml\n", {}), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/volver.conf"), ConfigError);
}

TEST(Config, Validation) {
  Config c;
  EXPECT_THROW(validate_config(c), ConfigError);  // no manifest
  c.manifest = "m.tsv";
  EXPECT_NO_THROW(validate_config(c));
  for (double t : {0.0, -0.1, 1.01}) {
    Config bad = c;
    bad.threshold = t;
    EXPECT_THROW(validate_config(bad), ConfigError) << t;
  }
  Config one = c;
  one.threshold = 1.0;
  EXPECT_NO_THROW(validate_config(one));
  Config par = c;
  par.parallelism = 0;
  EXPECT_THROW(validate_config(par), ConfigError);
  Config base = c;
  base.base_iri = "ceur";
  EXPECT_THROW(validate_config(base), ConfigError);
  Config ep = c;
  ep.endpoint = "dbpedia";
  EXPECT_THROW(validate_config(ep), ConfigError);
}

TEST(Config, FixtureFileLoads) {
  Config c = load_config(testing::fixtures() / "run.conf");
  EXPECT_EQ(c.manifest, testing::fixtures() / "corpus/manifest.tsv");
  EXPECT_EQ(c.endpoint, "mock:" + (testing::fixtures() / "sparql").string());
  EXPECT_TRUE(c.turtle);
  EXPECT_NO_THROW(validate_config(c));
}

TEST(Config, EndpointFromEnvironment) {
  ::setenv("VOLVER_ENDPOINT", "http://localhost:8890/sparql", 1);
  EXPECT_EQ(endpoint_from_environment(), "http://localhost:8890/sparql");
  ::setenv("VOLVER_ENDPOINT", "", 1);
  EXPECT_FALSE(endpoint_from_environment().has_value());
  ::unsetenv("VOLVER_ENDPOINT");
  EXPECT_FALSE(endpoint_from_environment().has_value());
}

}  // namespace
}  // namespace volver
