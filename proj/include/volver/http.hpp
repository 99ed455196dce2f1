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

#ifndef VOLVER_HTTP_HPP_
#define VOLVER_HTTP_HPP_

#include <chrono>
#include <map>
#include <string>
#include <string_view>

namespace volver::http {

struct Url {
  std::string scheme;  // http | https
  std::string host;
  int port = 0;
  std::string target;  // path + query, always starts with '/'

  std::string origin() const;  // scheme://host:port
};

// Throws volver::Error when the URL is not http(s).
Url parse_url(std::string_view url);

struct Response {
  int status = 0;
  std::string body;
};

// Blocking GET. Connection and read failures throw TransportError; non-2xx
// statuses are returned to the caller.
Response get(const std::string& url,
             const std::map<std::string, std::string>& headers,
             std::chrono::milliseconds timeout);

std::string percent_encode(std::string_view s);

}  // namespace volver::http

#endif  // VOLVER_HTTP_HPP_
