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


#include "nif_forge/fetch.h"

#include <algorithm>
#include <fstream>
#include <thread>

#include "httplib.h"
#include "nif_forge/nif.h"

namespace nif_forge {

RateLimiter::RateLimiter(double rate, double capacity)
    : rate_(rate), capacity_(capacity), tokens_(capacity), last_(Clock::now()) {
  if (!(rate > 0.0) || !(capacity >= 1.0)) {
    throw FetchError("rate limiter needs rate > 0 and capacity >= 1");
  }
}

void RateLimiter::Acquire() {
  std::unique_lock<std::mutex> lock(mu_);
  while (true) {
    const Clock::time_point now = Clock::now();
    const double elapsed = std::chrono::duration<double>(now - last_).count();
    tokens_ = std::min(capacity_, tokens_ + elapsed * rate_);
    last_ = now;
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const auto wait = std::chrono::duration<double>((1.0 - tokens_) / rate_);
    std::this_thread::sleep_for(wait);
  }
}

std::string ExpandTitle(std::string_view path_template, std::string_view title) {
  std::string encoded = NormalizeArticleName(title);
  std::string escaped;
  for (char c : encoded) {
    if (c == '/') {
      escaped += "%2F";
    } else if (static_cast<unsigned char>(c) >= 0x80) {
      static constexpr char kHex[] = "0123456789ABCDEF";
      const auto u = static_cast<unsigned char>(c);
      escaped += '%';
      escaped += kHex[u >> 4];
      escaped += kHex[u & 0xF];
    } else {
      escaped += c;
    }
  }
  std::string path(path_template);
  const std::size_t at = path.find("{title}");
  if (at != std::string::npos) return path.replace(at, 7, escaped);
  if (path.empty() || path.back() != '/') path += '/';
  return path + escaped;
}

std::string ArticleFileName(std::string_view title) {
  std::string name;
  for (char c : NormalizeArticleName(title)) {
    if (c == '/') {
      name += "%2F";
    } else {
      name += c;
    }
  }
  return name + ".html";
}

FetchClient::FetchClient(FetchOptions options)
    : options_(std::move(options)), limiter_(options_.rate) {
  const std::string &url = options_.endpoint;
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw FetchError("endpoint is not an absolute URL: " + url);
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw FetchError("unsupported endpoint scheme: " + scheme);
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw FetchError("built without TLS support: " + url);
#endif
  const std::size_t path_start = url.find('/', scheme_end + 3);
  scheme_host_port_ = url.substr(0, path_start);
  path_template_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (scheme_host_port_.size() <= scheme_end + 3) {
    throw FetchError("endpoint has no host: " + url);
  }
}

FetchOutcome FetchClient::Fetch(const std::string &title, std::string *body) {
  FetchOutcome outcome;
  outcome.title = title;
  httplib::Client client(scheme_host_port_);
  client.set_follow_location(true);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  const std::string target = ExpandTitle(path_template_, title);
  auto backoff = options_.backoff;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    limiter_.Acquire();
    ++outcome.attempts;
    httplib::Result res = client.Get(target);
    if (!res) {
      outcome.status = 0;
      outcome.error = httplib::to_string(res.error());
      continue;
    }
    outcome.status = res->status;
    if (res->status >= 200 && res->status < 300) {
      outcome.ok = true;
      outcome.error.clear();
      if (body) *body = std::move(res->body);
      return outcome;
    }
    outcome.error = "HTTP " + std::to_string(res->status);
    if (res->status != 429 && res->status < 500) break;  // permanent
  }
  return outcome;
}

std::vector<FetchOutcome> FetchClient::FetchAll(
    const std::vector<std::string> &titles, const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  std::vector<FetchOutcome> outcomes;
  for (const std::string &title : titles) {
    std::string body;
    FetchOutcome outcome = Fetch(title, &body);
    if (outcome.ok) {
      outcome.file = dir / ArticleFileName(title);
      std::ofstream out(outcome.file, std::ios::binary);
      out << body;
      if (!out) {
        outcome.ok = false;
        outcome.error = "cannot write " + outcome.file.string();
      }
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace nif_forge
