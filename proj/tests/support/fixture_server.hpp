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


// Local HTTP server for fetcher tests. Serves a directory tree and counts
// concurrent requests so tests can assert the fetcher's parallelism bound.

#ifndef VOLVER_TESTS_FIXTURE_SERVER_HPP_
#define VOLVER_TESTS_FIXTURE_SERVER_HPP_

#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "fixtures.hpp"

namespace volver::testing {

class FixtureServer {
 public:
  explicit FixtureServer(std::filesystem::path root,
                         std::chrono::milliseconds delay = std::chrono::milliseconds(0))
      : root_(std::move(root)), delay_(delay) {
    server_.new_task_queue = [] { return new httplib::ThreadPool(16); };
    server_.Get(R"(/(.*))", [this](const httplib::Request& req, httplib::Response& res) {
      int now = ++in_flight_;
      int seen = max_in_flight_.load();
      while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
      }
      ++requests_;
      if (delay_.count() > 0) std::this_thread::sleep_for(delay_);
      serve(req.path, res);
      --in_flight_;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FixtureServer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  FixtureServer(const FixtureServer&) = delete;
  FixtureServer& operator=(const FixtureServer&) = delete;

  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_) + "/"; }
  int max_in_flight() const { return max_in_flight_.load(); }
  int requests() const { return requests_.load(); }

  // Requests for this path answer 500.
  void fail_path(const std::string& path) {
    std::lock_guard<std::mutex> lock(mutex_);
    failing_.insert(path);
  }

 private:
  void serve(const std::string& path, httplib::Response& res) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (failing_.count(path)) {
        res.status = 500;
        res.set_content("boom", "text/plain");
        return;
      }
    }
    std::filesystem::path file = root_ / path.substr(1);
    if (path.empty() || path.back() == '/') file /= "index.html";
    if (path.find("..") != std::string::npos || !std::filesystem::is_regular_file(file)) {
      res.status = 404;
      return;
    }
    res.set_content(slurp(file), "text/html");
  }

  std::filesystem::path root_;
  std::chrono::milliseconds delay_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
  std::atomic<int> requests_{0};
  std::mutex mutex_;
  std::set<std::string> failing_;
};

}  // namespace volver::testing

#endif  // VOLVER_TESTS_FIXTURE_SERVER_HPP_
