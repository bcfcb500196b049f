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

#ifndef TABMATCH_LOOKUP_SERVICE_H_
#define TABMATCH_LOOKUP_SERVICE_H_

#include <memory>
#include <string>
#include <vector>

namespace tabmatch {

class KnowledgeGraph;
class ResponseCache;

// One relevance-ordered result list (rank 0 first) from one service for one
// query. Entities are unique within a ranking.
struct ServiceRanking {
  std::string service_id;
  std::string query;
  std::vector<std::string> entities;
};

struct LookupRequest {
  std::string query;
  std::string language = "en";
  size_t limit = 100;
};

// Anything that turns a text query into a ranked entity list. Lookup may
// throw; callers isolate failures.
class LookupService {
 public:
  virtual ~LookupService() = default;
  virtual const std::string& id() const = 0;
  virtual ServiceRanking Lookup(const LookupRequest& request) const = 0;
};

// Label search over the loaded graph. Always available.
class LocalLookupService : public LookupService {
 public:
  explicit LocalLookupService(const KnowledgeGraph& kg, std::string id = "local");
  const std::string& id() const override { return id_; }
  ServiceRanking Lookup(const LookupRequest& request) const override;

 private:
  const KnowledgeGraph& kg_;
  std::string id_;
};

struct ServiceConfig {
  std::string name;
  // local | sparql | lookup-api | wiki-api
  std::string type = "local";
  // May contain "{lang}", replaced by the request language.
  std::string endpoint;
  double timeout_seconds = 10.0;
  bool enabled = true;
  // Prefix turning encyclopedia page titles into entity ids (wiki-api).
  std::string entity_prefix = "http://dbpedia.org/resource/";
};

// Builds the adapter for a remote service config. `cache` may be null.
// Throws ConfigError for an unknown type or malformed endpoint.
std::unique_ptr<LookupService> MakeRemoteService(const ServiceConfig& config,
                                                 const ResponseCache* cache);

}  // namespace tabmatch

#endif  // TABMATCH_LOOKUP_SERVICE_H_
