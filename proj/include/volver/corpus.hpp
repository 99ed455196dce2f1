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

#ifndef VOLVER_CORPUS_HPP_
#define VOLVER_CORPUS_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace volver {

enum class ContentKind { IndexPage, VolumePage, PaperText };

// Manifest spelling: index | volume | papertext.
std::string_view to_string(ContentKind kind);
std::optional<ContentKind> parse_content_kind(std::string_view s);

// One loaded or fetched page. The body is kept byte-for-byte; decoding and
// markup recovery happen in the template layer.
struct PageDocument {
  std::string source_iri;
  std::optional<std::uint32_t> volume_id;  // absent only for the index page
  ContentKind kind = ContentKind::VolumePage;
  std::string body;
  std::chrono::system_clock::time_point fetched_at;
};

struct ManifestEntry {
  std::filesystem::path relative_path;
  std::string source_iri;
  ContentKind kind = ContentKind::VolumePage;
  std::optional<std::uint32_t> volume_id;

  bool operator==(const ManifestEntry&) const = default;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path corpus_root;

  const ManifestEntry* index_entry() const;
  const ManifestEntry* volume_entry(std::uint32_t id) const;
  std::vector<const ManifestEntry*> volume_entries() const;
  // Paper-text sidecar whose source IRI equals `pdf_iri`, if any.
  const ManifestEntry* paper_text_entry(std::string_view pdf_iri) const;
};

// Parses and validates a tab-separated manifest. corpus_root is the
// manifest's directory.
CorpusManifest load_corpus(const std::filesystem::path& manifest_path);

// Validates manifest text already in memory. Used by load_corpus.
CorpusManifest parse_manifest(std::string_view text,
                              const std::filesystem::path& corpus_root);

void write_manifest(const CorpusManifest& manifest,
                    const std::filesystem::path& manifest_path);

// Reads the volume page for `volume_id`, or the index page when absent.
PageDocument read_page(const CorpusManifest& manifest,
                       std::optional<std::uint32_t> volume_id);

PageDocument read_entry(const CorpusManifest& manifest,
                        const ManifestEntry& entry);

// True when `iri` has a scheme and contains no whitespace.
bool is_absolute_iri(std::string_view iri);

// Resolves `href` against `base` (RFC 3986 reference resolution, without
// query/fragment subtleties). Spaces are percent-encoded.
std::string resolve_iri(std::string_view base, std::string_view href);

}  // namespace volver

#endif  // VOLVER_CORPUS_HPP_
