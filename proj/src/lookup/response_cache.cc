// Copyright 2026 The Tabmatch Authors.
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

#include "lookup/response_cache.h"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "util/error.h"

namespace tabmatch {
namespace {

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string KeyString(const std::string& service, const LookupRequest& r) {
  std::string key = service;
  key.push_back('\x1f');
  key += r.query;
  key.push_back('\x1f');
  key += r.language;
  key.push_back('\x1f');
  key += std::to_string(r.limit);
  return key;
}

}  // namespace

ResponseCache::ResponseCache(std::string directory) : directory_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) throw IoError("cannot create cache directory " + directory_ + ": " + ec.message());
}

std::string ResponseCache::PathFor(const std::string& service,
                                   const LookupRequest& request) const {
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.json",
                static_cast<unsigned long long>(Fnv1a(KeyString(service, request))));
  return (std::filesystem::path(directory_) / name).string();
}

std::optional<std::vector<std::string>> ResponseCache::Get(
    const std::string& service, const LookupRequest& request) const {
  std::ifstream in(PathFor(service, request));
  if (!in) return std::nullopt;
  nlohmann::json body = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded() || !body.is_object()) return std::nullopt;
  // Guard against hash collisions.
  if (body.value("service", "") != service || body.value("query", "") != request.query ||
      body.value("language", "") != request.language ||
      body.value("limit", size_t{0}) != request.limit) {
    return std::nullopt;
  }
  std::vector<std::string> entities;
  for (const auto& e : body["entities"]) {
    if (e.is_string()) entities.push_back(e.get<std::string>());
  }
  return entities;
}

void ResponseCache::Put(const std::string& service, const LookupRequest& request,
                        const std::vector<std::string>& entities) const {
  static std::atomic<uint64_t> counter{0};
  nlohmann::json body = {{"service", service},
                         {"query", request.query},
                         {"language", request.language},
                         {"limit", request.limit},
                         {"entities", entities}};
  const std::string path = PathFor(service, request);
  std::ostringstream tmp_name;
  tmp_name << path << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << "." << counter.fetch_add(1);
  {
    std::ofstream out(tmp_name.str(), std::ios::trunc);
    if (!out) throw IoError("cannot write cache entry " + tmp_name.str());
    out << body.dump(2) << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp_name.str(), path, ec);
  if (ec) {
    std::filesystem::remove(tmp_name.str(), ec);
    throw IoError("cannot commit cache entry " + path);
  }
}

}  // namespace tabmatch
