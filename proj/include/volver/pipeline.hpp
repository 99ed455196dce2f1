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


#ifndef VOLVER_PIPELINE_HPP_
#define VOLVER_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "volver/corpus.hpp"
#include "volver/linking.hpp"
#include "volver/rdf.hpp"
#include "volver/template_engine.hpp"

namespace volver {

struct RunOptions {
  std::filesystem::path out_dir = "out";
  rdf::IriPolicy policy;
  double threshold = 0.6;
  linking::EndpointConfig endpoint;
  // Overrides the transport derived from `endpoint` when set.
  linking::Transport transport;
  std::size_t parallelism = 1;
  bool write_turtle = false;
};

struct VolumeFailure {
  std::optional<std::uint32_t> volume_id;
  std::string error;
};

struct LinkingFailure {
  std::optional<std::uint32_t> volume_id;
  std::string paper_iri;
  std::string error;
};

struct RunReport {
  std::size_t volumes_attempted = 0;
  std::size_t volumes_extracted = 0;
  std::map<std::string, std::size_t> template_wins;
  std::size_t papers_linked = 0;
  std::size_t relations_accepted = 0;
  std::vector<VolumeFailure> failures;
  std::vector<LinkingFailure> linking_failures;
  std::vector<std::string> notes;
  std::string started_at;
  std::string finished_at;
};

void to_json(nlohmann::json& j, const RunReport& r);

// Fatal (throws) only for an empty registry or an unwritable out_dir.
RunReport run(const CorpusManifest& manifest, const TemplateRegistry& registry,
              const RunOptions& options);

}  // namespace volver

#endif  // VOLVER_PIPELINE_HPP_
