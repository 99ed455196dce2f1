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

#ifndef VOLVER_FETCH_HPP_
#define VOLVER_FETCH_HPP_

#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "volver/corpus.hpp"
#include "volver/errors.hpp"

namespace volver {

// Spaces requests to the same host at least `interval` apart. Thread-safe.
class HostRateLimiter {
 public:
  explicit HostRateLimiter(double requests_per_second);

  // Blocks until a request to `host` may start.
  void acquire(const std::string& host);

 private:
  std::chrono::steady_clock::duration interval_;
  std::mutex mutex_;
  std::map<std::string, std::chrono::steady_clock::time_point> next_slot_;
};

struct FetchOptions {
  std::size_t limit = 10;        // volume pages to fetch
  std::size_t parallelism = 1;   // requests in flight, capped at 4
  double requests_per_second = 1.0;
  std::chrono::milliseconds timeout{10000};
};

inline constexpr std::size_t kMaxFetchParallelism = 4;

struct FetchResult {
  CorpusManifest manifest;
  std::vector<FetchFailed> failures;
};

// Mirrors the index page at `base_iri` plus up to `limit` of the volume pages
// it links to. Writes `index.html`, `Vol-N/index.html` and `manifest.tsv`
// under out_dir. Per-page failures are collected; AllFetchesFailed is thrown
// when nothing could be fetched.
FetchResult fetch_mirror(const std::string& base_iri,
                         const FetchOptions& options,
                         const std::filesystem::path& out_dir);

}  // namespace volver

#endif  // VOLVER_FETCH_HPP_
