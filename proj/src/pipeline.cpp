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

#include "volver/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "volver/errors.hpp"
#include "volver/relations.hpp"

namespace volver {

namespace fs = std::filesystem;

void to_json(nlohmann::json& j, const RunReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"volume_id", f.volume_id ? nlohmann::json(*f.volume_id) : nullptr},
                        {"error", f.error}});
  }
  nlohmann::json linking = nlohmann::json::array();
  for (const auto& f : r.linking_failures) {
    linking.push_back({{"volume_id", f.volume_id ? nlohmann::json(*f.volume_id) : nullptr},
                       {"paper_iri", f.paper_iri},
                       {"error", f.error}});
  }
  j = {{"volumes_attempted", r.volumes_attempted},
       {"volumes_extracted", r.volumes_extracted},
       {"template_wins", r.template_wins},
       {"papers_linked", r.papers_linked},
       {"relations_accepted", r.relations_accepted},
       {"failures", failures},
       {"linking_failures", linking},
       {"notes", r.notes},
       {"started_at", r.started_at},
       {"finished_at", r.finished_at}};
}

namespace {

std::string now_utc() {
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                     fmt::gmtime(std::chrono::system_clock::to_time_t(
                         std::chrono::system_clock::now())));
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << bytes;
  if (!out) throw Error("cannot write " + path.string());
}

struct VolumeOutcome {
  const ManifestEntry* entry = nullptr;
  std::optional<VolumeRecord> record;
  std::string template_id;
  std::string error;
  std::vector<std::string> log;
  rdf::TripleGraph graph;
  std::size_t papers_linked = 0;
  std::vector<LinkingFailure> linking_failures;
};

void link_papers(VolumeOutcome& out, const CorpusManifest& manifest,
                 const RunOptions& options, const linking::Transport& transport) {
  VolumeRecord& record = *out.record;
  auto iris = rdf::mint_papers(options.policy, record);
  for (std::size_t i = 0; i < record.papers.size(); ++i) {
    auto& paper = record.papers[i];
    if (!paper.pdf_href) continue;
    const ManifestEntry* sidecar = manifest.paper_text_entry(*paper.pdf_href);
    if (!sidecar) continue;
    paper.first_page_text_ref = sidecar->relative_path.generic_string();
    try {
      PageDocument text = read_entry(manifest, *sidecar);
      auto candidates = linking::extract_country_candidates(text.body);
      if (candidates.empty()) continue;
      auto linked = linking::link_countries(candidates, options.endpoint, transport);
      if (linked.empty()) continue;
      out.graph.merge(linking::attach_country_triples(iris[i], linked));
      ++out.papers_linked;
    } catch (const Error& e) {
      out.linking_failures.push_back(
          LinkingFailure{record.volume_number, iris[i].value(), e.what()});
    }
  }
}

VolumeOutcome process_volume(const ManifestEntry& entry, const CorpusManifest& manifest,
                             const TemplateRegistry& registry, const RunOptions& options,
                             const linking::Transport& transport) {
  VolumeOutcome out;
  out.entry = &entry;
  try {
    PageDocument page = read_entry(manifest, entry);
    Extraction ex = registry.extract(page, [&](const std::string& line) {
      out.log.push_back(line);
    });
    auto* record = std::get_if<VolumeRecord>(&ex.record);
    if (!record) throw Error("volume page produced an index record");
    out.template_id = ex.template_id;
    out.record = std::move(*record);
    out.graph = rdf::emit_volume(*out.record, options.policy);
  } catch (const std::exception& e) {
    out.record.reset();
    out.graph = rdf::TripleGraph();
    out.error = e.what();
    return out;
  }
  link_papers(out, manifest, options, transport);
  return out;
}

}  // namespace

RunReport run(const CorpusManifest& manifest, const TemplateRegistry& registry,
              const RunOptions& options) {
  if (registry.empty(ContentKind::VolumePage) || registry.empty(ContentKind::IndexPage)) {
    throw Error("template registry has no templates for volume or index pages");
  }
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec || !fs::is_directory(options.out_dir)) {
    throw Error("cannot create output directory " + options.out_dir.string());
  }

  RunReport report;
  report.started_at = now_utc();
  std::vector<std::string> log;

  if (const ManifestEntry* index = manifest.index_entry()) {
    try {
      PageDocument page = read_entry(manifest, *index);
      Extraction ex = registry.extract(page, [&](const std::string& l) { log.push_back(l); });
      ++report.template_wins[ex.template_id];
      const auto& entries = std::get<IndexRecord>(ex.record).entries;
      report.notes.push_back(fmt::format("index lists {} volumes", entries.size()));
    } catch (const std::exception& e) {
      report.notes.push_back(std::string("index page not extracted: ") + e.what());
    }
  } else {
    report.notes.push_back("corpus has no index page");
  }

  auto entries = manifest.volume_entries();
  std::sort(entries.begin(), entries.end(), [](const ManifestEntry* a, const ManifestEntry* b) {
    return a->volume_id < b->volume_id;
  });
  report.volumes_attempted = entries.size();

  linking::Transport transport =
      options.transport ? options.transport : linking::make_transport(options.endpoint);
  std::vector<VolumeOutcome> outcomes(entries.size());
  std::atomic<std::size_t> next{0};
  {
    std::size_t workers = std::clamp<std::size_t>(options.parallelism, 1, entries.size() ? entries.size() : 1);
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
          outcomes[i] = process_volume(*entries[i], manifest, registry, options, transport);
        }
      });
    }
  }

  rdf::TripleGraph dataset;
  std::vector<const VolumeRecord*> extracted;
  for (auto& o : outcomes) {
    log.insert(log.end(), o.log.begin(), o.log.end());
    if (!o.record) {
      report.failures.push_back(VolumeFailure{o.entry->volume_id, o.error});
      continue;
    }
    ++report.volumes_extracted;
    ++report.template_wins[o.template_id];
    report.papers_linked += o.papers_linked;
    report.linking_failures.insert(report.linking_failures.end(), o.linking_failures.begin(),
                                   o.linking_failures.end());
    write_file(options.out_dir / fmt::format("vol-{}.nt", *o.record->volume_number),
               rdf::serialize(o.graph, rdf::Format::NTriples));
    dataset.merge(o.graph);
    extracted.push_back(&*o.record);
  }

  std::string audit;
  for (const VolumeRecord* v : extracted) {
    std::vector<VolumeRecord> candidates;
    for (auto n : v->see_also_volumes) {
      auto it = std::find_if(extracted.begin(), extracted.end(), [&](const VolumeRecord* c) {
        return c->volume_number == n;
      });
      if (it == extracted.end()) {
        report.notes.push_back(
            fmt::format("Vol-{}: seeAlso target Vol-{} not in run", *v->volume_number, n));
      } else {
        candidates.push_back(**it);
      }
    }
    if (candidates.empty()) continue;
    auto c = relations::classify_relations(*v, candidates, options.threshold, options.policy);
    dataset.merge(c.graph);
    for (const auto& d : c.decisions) {
      audit += relations::format_decision(d) + "\n";
      if (d.accepted) ++report.relations_accepted;
    }
  }

  write_file(options.out_dir / "dataset.nt", rdf::serialize(dataset, rdf::Format::NTriples));
  if (options.write_turtle) {
    write_file(options.out_dir / "dataset.ttl", rdf::serialize(dataset, rdf::Format::Turtle));
  }
  write_file(options.out_dir / "relations.tsv", audit);
  std::string log_text;
  for (const auto& l : log) log_text += l + "\n";
  write_file(options.out_dir / "templates.log", log_text);

  report.finished_at = now_utc();
  write_file(options.out_dir / "report.json", nlohmann::json(report).dump(2) + "\n");
  return report;
}

}  // namespace volver
