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


#ifndef VOLVER_CONFIG_HPP_
#define VOLVER_CONFIG_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace volver {

// Flat "key = value" file; '#' starts a comment line.
struct Config {
  std::filesystem::path manifest;
  std::filesystem::path out_dir = "out";
  std::string base_iri = "http://ceur-ws.org/";
  double threshold = 0.6;
  std::string endpoint = "http://dbpedia.org/sparql";
  std::size_t parallelism = 1;
  bool turtle = false;  // N-Triples is always written
  unsigned retries = 3;
  std::chrono::milliseconds retry_backoff{1000};
  std::chrono::milliseconds timeout{10000};
};

// Relative paths (manifest, out_dir, mock:<dir>) resolve against `base_dir`.
// Throws ConfigError.
Config parse_config(std::string_view text, const std::filesystem::path& base_dir);
Config load_config(const std::filesystem::path& path);

// Throws ConfigError when an invariant does not hold.
void validate_config(const Config& config);

// Value of VOLVER_ENDPOINT, if set and non-empty.
std::optional<std::string> endpoint_from_environment();

}  // namespace volver

#endif  // VOLVER_CONFIG_HPP_
