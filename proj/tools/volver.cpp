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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "volver/config.hpp"
#include "volver/corpus.hpp"
#include "volver/errors.hpp"
#include "volver/extractors.hpp"
#include "volver/fetch.hpp"
#include "volver/linking.hpp"
#include "volver/pipeline.hpp"
#include "volver/relations.hpp"
#include "volver/text.hpp"

namespace {

using namespace volver;

constexpr int kOk = 0;
constexpr int kFatal = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

VolumeRecord extract_volume_record(const CorpusManifest& manifest, std::uint32_t id,
                                   const TemplateRegistry& registry) {
  PageDocument page = read_page(manifest, id);
  Extraction ex = registry.extract(page);
  return std::get<VolumeRecord>(ex.record);
}

std::vector<std::string> split_candidates(const std::string& list) {
  std::vector<std::string> out;
  for (const auto& part : text::split(list, ',')) {
    std::string s(text::trim(part));
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw UsageError("cannot read " + path);
  std::string out;
  char buf[8192];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  std::fclose(f);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volver: scrape workshop proceedings pages into linked data"};
  app.require_subcommand(1);

  // fetch
  std::string fetch_base;
  std::size_t fetch_limit = 10;
  std::string fetch_out;
  std::size_t fetch_parallelism = 1;
  double fetch_rps = 1.0;
  auto* fetch = app.add_subcommand("fetch", "Mirror the index and volume pages into a corpus");
  fetch->add_option("--base", fetch_base, "Base IRI of the site")->required();
  fetch->add_option("--limit", fetch_limit, "Volume pages to fetch");
  fetch->add_option("--out", fetch_out, "Output directory")->required();
  fetch->add_option("--parallelism", fetch_parallelism, "Requests in flight (max 4)");
  fetch->add_option("--rps", fetch_rps, "Requests per second per host");

  // run
  std::string run_config;
  std::string run_manifest, run_out, run_base, run_endpoint, run_formats;
  std::optional<double> run_threshold;
  std::optional<std::size_t> run_parallelism;
  auto* run = app.add_subcommand("run", "Run the full pipeline");
  run->add_option("--config", run_config, "Configuration file");
  run->add_option("--manifest", run_manifest, "Corpus manifest");
  run->add_option("--out", run_out, "Output directory");
  run->add_option("--base-iri", run_base, "Base IRI for minted resources");
  run->add_option("--threshold", run_threshold, "Similarity threshold in (0,1]");
  run->add_option("--endpoint", run_endpoint, "SPARQL endpoint IRI or mock:<dir>");
  run->add_option("--parallelism", run_parallelism, "Volumes processed concurrently");
  run->add_option("--formats", run_formats, "Comma list of nt, ttl");

  // extract
  std::string extract_manifest;
  std::optional<std::uint32_t> extract_volume;
  auto* extract = app.add_subcommand("extract", "Print the record extracted from one page");
  extract->add_option("--manifest", extract_manifest, "Corpus manifest")->required();
  extract->add_option("--volume", extract_volume, "Volume number; omit for the index page");

  // similarity
  std::string sim_a, sim_b;
  auto* similarity = app.add_subcommand("similarity", "Ratcliff-Obershelp similarity of two strings");
  similarity->add_option("--a", sim_a)->required();
  similarity->add_option("--b", sim_b)->required();

  // query
  std::string query_candidates;
  std::string query_class = linking::kCountryClass;
  auto* query = app.add_subcommand("query", "Print the country lookup SPARQL query");
  query->add_option("--candidates", query_candidates, "Comma-separated surfaces")->required();
  query->add_option("--class", query_class, "Class constraint");

  // link
  std::string link_text, link_endpoint;
  bool link_affiliations = false;
  auto* link = app.add_subcommand("link", "Link countries named on a paper's first page");
  link->add_option("--text", link_text, "Plain-text first page")->required();
  link->add_option("--endpoint", link_endpoint, "SPARQL endpoint IRI or mock:<dir>");
  link->add_flag("--affiliations", link_affiliations, "Link affiliations instead of countries");

  // relate
  std::string relate_manifest;
  std::uint32_t relate_volume = 0;
  double relate_threshold = relations::kDefaultThreshold;
  std::string relate_base = rdf::IriPolicy{}.base;
  auto* relate = app.add_subcommand("relate", "Classify a volume's seeAlso links");
  relate->add_option("--manifest", relate_manifest, "Corpus manifest")->required();
  relate->add_option("--volume", relate_volume, "Volume number")->required();
  relate->add_option("--threshold", relate_threshold, "Similarity threshold in (0,1]");
  relate->add_option("--base-iri", relate_base, "Base IRI for minted resources");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\nRun 'volver --help' for usage.\n";
    return kUsage;
  }

  try {
    if (*fetch) {
      FetchOptions options;
      options.limit = fetch_limit;
      options.parallelism = fetch_parallelism;
      options.requests_per_second = fetch_rps;
      FetchResult result = fetch_mirror(fetch_base, options, fetch_out);
      for (const auto& f : result.failures) std::cerr << "warning: " << f.what() << "\n";
      std::cout << fmt::format("fetched {} pages into {}\n", result.manifest.entries.size(),
                               fetch_out);
      return kOk;
    }

    if (*run) {
      if (run_config.empty() && run_manifest.empty()) {
        throw UsageError("run needs --config FILE or --manifest FILE");
      }
      Config cfg = run_config.empty() ? Config{} : load_config(run_config);
      if (auto env = endpoint_from_environment()) cfg.endpoint = *env;
      if (!run_manifest.empty()) cfg.manifest = run_manifest;
      if (!run_out.empty()) cfg.out_dir = run_out;
      if (!run_base.empty()) cfg.base_iri = run_base;
      if (run_threshold) cfg.threshold = *run_threshold;
      if (!run_endpoint.empty()) cfg.endpoint = run_endpoint;
      if (run_parallelism) cfg.parallelism = *run_parallelism;
      if (!run_formats.empty()) {
        cfg.turtle = parse_config("formats = " + run_formats, {}).turtle;
      }
      validate_config(cfg);

      CorpusManifest manifest = load_corpus(cfg.manifest);
      RunOptions options;
      options.out_dir = cfg.out_dir;
      options.policy.base = cfg.base_iri;
      options.threshold = cfg.threshold;
      options.endpoint.endpoint_iri = cfg.endpoint;
      options.endpoint.retries = cfg.retries;
      options.endpoint.backoff = cfg.retry_backoff;
      options.endpoint.timeout = cfg.timeout;
      options.parallelism = cfg.parallelism;
      options.write_turtle = cfg.turtle;
      RunReport report = volver::run(manifest, default_registry(), options);
      std::cout << fmt::format(
          "volumes {}/{} extracted, {} papers linked, {} relations accepted\n",
          report.volumes_extracted, report.volumes_attempted, report.papers_linked,
          report.relations_accepted);
      for (const auto& f : report.failures) {
        std::cerr << fmt::format("failed: Vol-{}: {}\n", f.volume_id.value_or(0), f.error);
      }
      return kOk;
    }

    if (*extract) {
      CorpusManifest manifest = load_corpus(extract_manifest);
      TemplateRegistry registry = default_registry();
      PageDocument page = read_page(manifest, extract_volume);
      Extraction ex = registry.extract(page);
      nlohmann::json out;
      if (auto* v = std::get_if<VolumeRecord>(&ex.record)) {
        out = *v;
      } else {
        out = {{"entries", std::get<IndexRecord>(ex.record).entries}};
      }
      std::cout << out.dump(2) << "\n";
      return kOk;
    }

    if (*similarity) {
      std::cout << fmt::format("{:.6f}\n", relations::ratcliff_obershelp(sim_a, sim_b).value());
      return kOk;
    }

    if (*query) {
      std::cout << linking::build_country_query(split_candidates(query_candidates), query_class)
                << "\n";
      return kOk;
    }

    if (*link) {
      linking::EndpointConfig config;
      if (auto env = endpoint_from_environment()) config.endpoint_iri = *env;
      if (!link_endpoint.empty()) config.endpoint_iri = link_endpoint;
      std::string body = read_text_file(link_text);
      std::vector<linking::LinkedCountry> linked;
      auto transport = linking::make_transport(config);
      if (link_affiliations) {
        config.class_iri = linking::kAffiliationClass;
        linked = linking::link_entities(linking::extract_affiliation_candidates(body), config,
                                        transport);
      } else {
        linked = linking::link_countries(linking::extract_country_candidates(body), config,
                                         transport);
      }
      for (const auto& l : linked) std::cout << l.surface << "\t" << l.iri.value() << "\n";
      return kOk;
    }

    if (*relate) {
      if (!(relate_threshold > 0.0 && relate_threshold <= 1.0)) {
        throw UsageError("--threshold must lie in (0, 1]");
      }
      CorpusManifest manifest = load_corpus(relate_manifest);
      TemplateRegistry registry = default_registry();
      VolumeRecord volume = extract_volume_record(manifest, relate_volume, registry);
      std::vector<VolumeRecord> candidates;
      for (auto n : volume.see_also_volumes) {
        if (!manifest.volume_entry(n)) {
          std::cerr << fmt::format("note: Vol-{} is not in the corpus\n", n);
          continue;
        }
        candidates.push_back(extract_volume_record(manifest, n, registry));
      }
      rdf::IriPolicy policy{relate_base};
      auto result = relations::classify_relations(volume, candidates, relate_threshold, policy);
      for (const auto& d : result.decisions) {
        std::cout << relations::format_decision(d) << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nRun 'volver --help' for usage.\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\nSee the configuration section of the README.\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFatal;
  }
  return kUsage;
}
