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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "volver/corpus.hpp"
#include "volver/errors.hpp"
#include "volver/text.hpp"

namespace volver {

namespace fs = std::filesystem;

namespace {

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ConfigError(key + ": not a number: " + v);
  return d;
}

long parse_count(const std::string& key, const std::string& v) {
  if (v == "0") return 0;
  auto n = text::parse_positive_int(v);
  if (!n) throw ConfigError(key + ": not a non-negative integer: " + v);
  return *n;
}

fs::path resolve(const fs::path& base, const std::string& v) {
  fs::path p(v);
  return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

Config parse_config(std::string_view input, const fs::path& base_dir) {
  Config c;
  std::istringstream in{std::string(input)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(text::trim(line.substr(0, eq)));
    std::string value(text::trim(line.substr(eq + 1)));
    if (key == "manifest") {
      c.manifest = resolve(base_dir, value);
    } else if (key == "out_dir") {
      c.out_dir = resolve(base_dir, value);
    } else if (key == "base_iri") {
      c.base_iri = value;
    } else if (key == "threshold") {
      c.threshold = parse_double(key, value);
    } else if (key == "endpoint") {
      if (value.rfind("mock:", 0) == 0) {
        c.endpoint = "mock:" + resolve(base_dir, value.substr(5)).string();
      } else {
        c.endpoint = value;
      }
    } else if (key == "parallelism") {
      c.parallelism = static_cast<std::size_t>(parse_count(key, value));
    } else if (key == "formats") {
      c.turtle = false;
      for (const auto& f : text::split(value, ',')) {
        std::string fmt(text::trim(f));
        if (fmt == "nt") {
          continue;
        } else if (fmt == "ttl") {
          c.turtle = true;
        } else {
          throw ConfigError("formats: unknown format " + fmt);
        }
      }
    } else if (key == "retries") {
      c.retries = static_cast<unsigned>(parse_count(key, value));
    } else if (key == "retry_backoff_ms") {
      c.retry_backoff = std::chrono::milliseconds(parse_count(key, value));
    } else if (key == "timeout_ms") {
      c.timeout = std::chrono::milliseconds(parse_count(key, value));
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key " + key);
    }
  }
  return c;
}

Config load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

void validate_config(const Config& c) {
  if (c.manifest.empty()) throw ConfigError("manifest is not set");
  if (!(c.threshold > 0.0 && c.threshold <= 1.0)) {
    throw ConfigError("threshold must lie in (0, 1]");
  }
  if (c.parallelism < 1) throw ConfigError("parallelism must be at least 1");
  if (c.timeout.count() <= 0) throw ConfigError("timeout_ms must be positive");
  if (!is_absolute_iri(c.base_iri)) throw ConfigError("base_iri is not an absolute IRI");
  if (c.endpoint.rfind("mock:", 0) != 0 && !is_absolute_iri(c.endpoint)) {
    throw ConfigError("endpoint is neither an IRI nor mock:<dir>");
  }
}

std::optional<std::string> endpoint_from_environment() {
  const char* v = std::getenv("VOLVER_ENDPOINT");
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

}  // namespace volver
