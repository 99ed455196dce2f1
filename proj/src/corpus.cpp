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

#include "volver/corpus.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "volver/errors.hpp"
#include "volver/text.hpp"

namespace volver {

namespace fs = std::filesystem;

std::string_view to_string(ContentKind kind) {
  switch (kind) {
    case ContentKind::IndexPage:
      return "index";
    case ContentKind::VolumePage:
      return "volume";
    case ContentKind::PaperText:
      return "papertext";
  }
  return "volume";
}

std::optional<ContentKind> parse_content_kind(std::string_view s) {
  if (s == "index") return ContentKind::IndexPage;
  if (s == "volume") return ContentKind::VolumePage;
  if (s == "papertext") return ContentKind::PaperText;
  return std::nullopt;
}

const ManifestEntry* CorpusManifest::index_entry() const {
  for (const auto& e : entries) {
    if (e.kind == ContentKind::IndexPage) return &e;
  }
  return nullptr;
}

const ManifestEntry* CorpusManifest::volume_entry(std::uint32_t id) const {
  for (const auto& e : entries) {
    if (e.kind == ContentKind::VolumePage && e.volume_id == id) return &e;
  }
  return nullptr;
}

std::vector<const ManifestEntry*> CorpusManifest::volume_entries() const {
  std::vector<const ManifestEntry*> out;
  for (const auto& e : entries) {
    if (e.kind == ContentKind::VolumePage) out.push_back(&e);
  }
  return out;
}

const ManifestEntry* CorpusManifest::paper_text_entry(
    std::string_view pdf_iri) const {
  for (const auto& e : entries) {
    if (e.kind == ContentKind::PaperText && e.source_iri == pdf_iri) return &e;
  }
  return nullptr;
}

bool is_absolute_iri(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
    return false;
  }
  std::size_t i = 1;
  while (i < iri.size() &&
         (std::isalnum(static_cast<unsigned char>(iri[i])) || iri[i] == '+' ||
          iri[i] == '-' || iri[i] == '.')) {
    ++i;
  }
  if (i >= iri.size() || iri[i] != ':' || i + 1 >= iri.size()) return false;
  for (char c : iri) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '>' ||
        c == '"') {
      return false;
    }
  }
  return true;
}

CorpusManifest parse_manifest(std::string_view text,
                              const fs::path& corpus_root) {
  CorpusManifest manifest;
  manifest.corpus_root = corpus_root;
  std::set<std::uint32_t> volumes;
  bool have_index = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> fields = text::split(line, '\t');
    if (fields.size() != 4) {
      throw ManifestMalformed(line_no, "expected 4 tab-separated fields, got " +
                                           std::to_string(fields.size()));
    }
    ManifestEntry entry;
    entry.relative_path = fields[0];
    entry.source_iri = fields[1];
    if (fields[0].empty() || entry.relative_path.is_absolute()) {
      throw ManifestMalformed(line_no, "path must be relative");
    }
    if (!is_absolute_iri(entry.source_iri)) {
      throw ManifestMalformed(line_no, "source IRI is not absolute");
    }
    auto kind = parse_content_kind(fields[2]);
    if (!kind) throw ManifestMalformed(line_no, "unknown kind '" + fields[2] + "'");
    entry.kind = *kind;
    if (fields[3] != "-") {
      auto id = text::parse_positive_int(fields[3]);
      if (!id || *id > 0xFFFFFFFFL) {
        throw ManifestMalformed(line_no, "bad volume id '" + fields[3] + "'");
      }
      entry.volume_id = static_cast<std::uint32_t>(*id);
    }
    if ((entry.kind == ContentKind::IndexPage) != !entry.volume_id) {
      throw ManifestMalformed(
          line_no, "index entries have no volume id; other entries need one");
    }
    if (entry.kind == ContentKind::IndexPage) {
      if (have_index) throw ManifestMalformed(line_no, "second index entry");
      have_index = true;
    }
    if (entry.kind == ContentKind::VolumePage &&
        !volumes.insert(*entry.volume_id).second) {
      throw DuplicateVolume(*entry.volume_id);
    }
    manifest.entries.push_back(std::move(entry));
  }
  for (const auto& e : manifest.entries) {
    if (!fs::is_regular_file(corpus_root / e.relative_path)) {
      throw MissingFile(e.relative_path.generic_string());
    }
  }
  return manifest;
}

CorpusManifest load_corpus(const fs::path& manifest_path) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw ManifestNotFound(manifest_path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  fs::path root = manifest_path.parent_path();
  if (root.empty()) root = ".";
  return parse_manifest(buf.str(), root);
}

void write_manifest(const CorpusManifest& manifest,
                    const fs::path& manifest_path) {
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write manifest " + manifest_path.string());
  out << "# path\tsource-iri\tkind\tvolume-id\n";
  for (const auto& e : manifest.entries) {
    out << e.relative_path.generic_string() << '\t' << e.source_iri << '\t'
        << to_string(e.kind) << '\t'
        << (e.volume_id ? std::to_string(*e.volume_id) : std::string("-"))
        << '\n';
  }
}

PageDocument read_entry(const CorpusManifest& manifest,
                        const ManifestEntry& entry) {
  fs::path path = manifest.corpus_root / entry.relative_path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(entry.relative_path.generic_string());
  std::ostringstream buf;
  buf << in.rdbuf();
  PageDocument page;
  page.source_iri = entry.source_iri;
  page.volume_id = entry.volume_id;
  page.kind = entry.kind;
  page.body = buf.str();
  auto mtime = fs::last_write_time(path);
  page.fetched_at = std::chrono::time_point_cast<
      std::chrono::system_clock::duration>(
      mtime - fs::file_time_type::clock::now() +
      std::chrono::system_clock::now());
  return page;
}

PageDocument read_page(const CorpusManifest& manifest,
                       std::optional<std::uint32_t> volume_id) {
  const ManifestEntry* entry = volume_id ? manifest.volume_entry(*volume_id)
                                         : manifest.index_entry();
  if (!entry) {
    if (volume_id) throw UnknownVolume(*volume_id);
    throw UnknownVolume(std::string("corpus has no index page"));
  }
  return read_entry(manifest, *entry);
}

namespace {

std::string remove_dot_segments(std::string_view path) {
  std::vector<std::string> out;
  std::vector<std::string> parts = text::split(path, '/');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    bool last = i + 1 == parts.size();
    if (p == ".") {
      if (last) out.emplace_back();
    } else if (p == "..") {
      if (out.size() > 1) out.pop_back();
      if (last) out.emplace_back();
    } else {
      out.push_back(p);
    }
  }
  std::string joined;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) joined.push_back('/');
    joined += out[i];
  }
  return joined;
}

std::string encode_spaces(std::string_view s) {
  std::string out;
  for (char c : text::trim(s)) {
    if (c == ' ') {
      out += "%20";
    } else if (c != '\n' && c != '\r' && c != '\t') {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view href_raw) {
  std::string href = encode_spaces(href_raw);
  if (is_absolute_iri(href)) return href;
  std::size_t scheme_end = base.find("://");
  if (scheme_end == std::string_view::npos) return std::string(base) + href;
  std::size_t authority_end = base.find('/', scheme_end + 3);
  std::string origin(base.substr(0, authority_end));
  std::string base_path = authority_end == std::string_view::npos
                              ? std::string("/")
                              : std::string(base.substr(authority_end));
  if (auto q = base_path.find_first_of("?#"); q != std::string::npos) {
    base_path.resize(q);
  }
  if (href.empty()) return origin + base_path;
  if (href.rfind("//", 0) == 0) {
    return std::string(base.substr(0, scheme_end + 1)) + href;
  }
  if (href[0] == '#' || href[0] == '?') return origin + base_path + href;
  std::string path;
  if (href[0] == '/') {
    path = href;
  } else {
    path = base_path.substr(0, base_path.rfind('/') + 1) + href;
  }
  std::string suffix;
  if (auto q = path.find_first_of("?#"); q != std::string::npos) {
    suffix = path.substr(q);
    path.resize(q);
  }
  return origin + remove_dot_segments(path) + suffix;
}

}  // namespace volver
