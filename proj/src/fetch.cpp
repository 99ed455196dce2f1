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

#include "volver/fetch.hpp"

#include <atomic>
#include <fstream>
#include <optional>
#include <thread>

#include "volver/errors.hpp"
#include "volver/extractors.hpp"
#include "volver/http.hpp"

namespace volver {

namespace fs = std::filesystem;

HostRateLimiter::HostRateLimiter(double requests_per_second)
    : interval_(requests_per_second > 0
                    ? std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(1.0 / requests_per_second))
                    : std::chrono::steady_clock::duration::zero()) {}

void HostRateLimiter::acquire(const std::string& host) {
  std::chrono::steady_clock::time_point slot;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto now = std::chrono::steady_clock::now();
    auto& next = next_slot_[host];
    slot = std::max(now, next);
    next = slot + interval_;
  }
  std::this_thread::sleep_until(slot);
}

namespace {

struct Fetched {
  std::string body;
  std::chrono::system_clock::time_point at;
};

Fetched fetch_one(const std::string& iri, HostRateLimiter& limiter,
                  const FetchOptions& options) {
  http::Url url;
  try {
    url = http::parse_url(iri);
  } catch (const Error& e) {
    throw FetchFailed(iri, e.what());
  }
  limiter.acquire(url.host);
  http::Response response;
  try {
    response = http::get(iri, {{"User-Agent", "volver/1.0"}}, options.timeout);
  } catch (const Error& e) {
    throw FetchFailed(iri, e.what());
  }
  if (response.status < 200 || response.status >= 300) {
    throw FetchFailed(iri, "HTTP status " + std::to_string(response.status));
  }
  return Fetched{std::move(response.body), std::chrono::system_clock::now()};
}

void write_file(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace

FetchResult fetch_mirror(const std::string& base_iri,
                         const FetchOptions& options, const fs::path& out_dir) {
  if (options.limit == 0) throw Error("fetch limit must be positive");
  if (options.parallelism == 0) throw Error("fetch parallelism must be positive");
  std::size_t workers = std::min(options.parallelism, kMaxFetchParallelism);
  HostRateLimiter limiter(options.requests_per_second);
  FetchResult result;

  Fetched index;
  try {
    index = fetch_one(base_iri, limiter, options);
  } catch (const FetchFailed& e) {
    throw AllFetchesFailed(std::string("index page unavailable: ") + e.what());
  }

  PageDocument index_page;
  index_page.source_iri = base_iri;
  index_page.kind = ContentKind::IndexPage;
  index_page.body = index.body;
  std::vector<VolumeSummary> summaries;
  try {
    summaries = extract_index(index_page);
  } catch (const NoVolumesFound&) {
  }
  if (summaries.size() > options.limit) summaries.resize(options.limit);

  struct Slot {
    std::uint32_t volume;
    std::string iri;
    std::optional<Fetched> page;
    std::optional<FetchFailed> error;
  };
  std::vector<Slot> slots;
  for (const auto& s : summaries) {
    slots.push_back(Slot{*s.volume_number, resolve_iri(base_iri, s.href),
                         std::nullopt, std::nullopt});
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, slots.size()); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < slots.size(); i = next++) {
          try {
            slots[i].page = fetch_one(slots[i].iri, limiter, options);
          } catch (const FetchFailed& e) {
            slots[i].error = e;
          }
        }
      });
    }
  }

  fs::create_directories(out_dir);
  result.manifest.corpus_root = out_dir;
  write_file(out_dir / "index.html", index.body);
  result.manifest.entries.push_back(
      ManifestEntry{"index.html", base_iri, ContentKind::IndexPage, std::nullopt});
  for (auto& slot : slots) {
    if (slot.error) {
      result.failures.push_back(*slot.error);
      continue;
    }
    fs::path rel = fs::path("Vol-" + std::to_string(slot.volume)) / "index.html";
    write_file(out_dir / rel, slot.page->body);
    result.manifest.entries.push_back(
        ManifestEntry{rel, slot.iri, ContentKind::VolumePage, slot.volume});
  }
  write_manifest(result.manifest, out_dir / "manifest.tsv");
  return result;
}

}  // namespace volver
