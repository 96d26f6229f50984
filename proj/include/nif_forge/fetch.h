// Copyright 2026 The NIF Forge Authors.
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


#ifndef NIF_FORGE_FETCH_H_
#define NIF_FORGE_FETCH_H_

#include <chrono>
#include <filesystem>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nif_forge {

class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Token bucket. Each Acquire() takes one token and blocks until one is
// available; tokens refill at |rate| per second up to |capacity|. With
// capacity 1 the k-th call returns no earlier than (k-1)/rate seconds after
// the first.
class RateLimiter {
 public:
  explicit RateLimiter(double rate, double capacity = 1.0);
  void Acquire();

 private:
  using Clock = std::chrono::steady_clock;
  std::mutex mu_;
  double rate_;
  double capacity_;
  double tokens_;
  Clock::time_point last_;
};

struct FetchOptions {
  // "http://host:port/path/{title}"; without a {title} placeholder the
  // encoded title is appended as a path segment.
  std::string endpoint;
  double rate = 1.0;  // requests per second
  int max_retries = 3;
  std::chrono::milliseconds backoff{250};  // doubled after each retry
  std::chrono::seconds timeout{30};
};

struct FetchOutcome {
  std::string title;
  bool ok = false;
  int status = 0;  // last HTTP status, 0 for connection failures
  int attempts = 0;
  std::string error;
  std::filesystem::path file;
};

// Renders article titles through an HTTP endpoint. Requests are serialized
// through one rate limiter. Transient failures (connection errors, 429 and
// 5xx) are retried; other statuses fail immediately.
class FetchClient {
 public:
  // Throws FetchError for a malformed endpoint or a non-positive rate.
  explicit FetchClient(FetchOptions options);

  FetchOutcome Fetch(const std::string &title, std::string *body);

  // Saves each rendered page as {dir}/{name}.html, where name is the
  // normalized article name with '/' escaped.
  std::vector<FetchOutcome> FetchAll(const std::vector<std::string> &titles,
                                     const std::filesystem::path &dir);

 private:
  FetchOptions options_;
  std::string scheme_host_port_;
  std::string path_template_;
  RateLimiter limiter_;
};

// Request target for |title| under |path_template|.
std::string ExpandTitle(std::string_view path_template, std::string_view title);

// File name used by FetchAll() and read back by the extract command.
std::string ArticleFileName(std::string_view title);

}  // namespace nif_forge

#endif  // NIF_FORGE_FETCH_H_
