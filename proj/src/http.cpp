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

#include "volver/http.hpp"

#include <httplib.h>

#include <cctype>

#include "volver/errors.hpp"
#include "volver/text.hpp"

namespace volver::http {

std::string Url::origin() const {
  return scheme + "://" + host + ":" + std::to_string(port);
}

Url parse_url(std::string_view url) {
  Url out;
  std::size_t sep = url.find("://");
  if (sep == std::string_view::npos) throw Error("not a URL: " + std::string(url));
  out.scheme = text::to_lower_ascii(url.substr(0, sep));
  if (out.scheme != "http" && out.scheme != "https") {
    throw Error("unsupported scheme in " + std::string(url));
  }
  std::string_view rest = url.substr(sep + 3);
  std::size_t slash = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, slash);
  out.target = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
  if (!out.target.empty() && out.target[0] != '/') out.target.insert(0, "/");
  if (auto hash = out.target.find('#'); hash != std::string::npos) {
    out.target.resize(hash);
  }
  if (auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  std::size_t colon = authority.rfind(':');
  if (colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
    auto port = text::parse_positive_int(authority.substr(colon + 1));
    if (!port || *port > 65535) throw Error("bad port in " + std::string(url));
    out.port = static_cast<int>(*port);
    out.host = std::string(authority.substr(0, colon));
  } else {
    out.host = std::string(authority);
    out.port = out.scheme == "https" ? 443 : 80;
  }
  if (out.host.empty()) throw Error("missing host in " + std::string(url));
  return out;
}

Response get(const std::string& url,
             const std::map<std::string, std::string>& headers,
             std::chrono::milliseconds timeout) {
  Url parsed = parse_url(url);
  httplib::Client client(parsed.origin());
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
  auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  client.set_follow_location(true);
  httplib::Headers hdrs;
  for (const auto& [k, v] : headers) hdrs.emplace(k, v);
  auto result = client.Get(parsed.target, hdrs);
  if (!result) {
    throw TransportError(url + ": " + httplib::to_string(result.error()));
  }
  return Response{result->status, result->body};
}

std::string percent_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

}  // namespace volver::http
