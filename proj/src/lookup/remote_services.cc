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

#include <algorithm>
#include <chrono>
#include <regex>

#include <httplib.h>
#include <json.hpp>

#include "lookup/response_cache.h"
#include "lookup/service.h"
#include "util/error.h"

namespace tabmatch {
namespace {

using nlohmann::json;

struct Url {
  std::string origin;  // scheme://host[:port]
  std::string path;    // with any fixed query part
};

Url SplitUrl(const std::string& url) {
  static const std::regex kUrl(R"(^(https?://[^/?#]+)([^#]*)$)");
  std::smatch m;
  if (!std::regex_match(url, m, kUrl)) throw ConfigError("malformed endpoint URL: " + url);
  Url out{m[1].str(), m[2].str()};
  if (out.path.empty()) out.path = "/";
  return out;
}

std::string Expand(std::string text, const std::string& language) {
  const std::string token = "{lang}";
  for (size_t pos = text.find(token); pos != std::string::npos; pos = text.find(token)) {
    text.replace(pos, token.size(), language);
  }
  return text;
}

std::string WithParams(std::string path,
                       const std::vector<std::pair<std::string, std::string>>& params) {
  char sep = path.find('?') == std::string::npos ? '?' : '&';
  for (const auto& [k, v] : params) {
    path.push_back(sep);
    path += k + "=" + httplib::detail::encode_query_param(v);
    sep = '&';
  }
  return path;
}

// Shared HTTP plumbing: endpoint expansion, timeout, status checks and the
// response cache. Subclasses build the request path and parse the body.
class HttpLookupService : public LookupService {
 public:
  HttpLookupService(ServiceConfig config, const ResponseCache* cache)
      : config_(std::move(config)), cache_(cache) {
    SplitUrl(Expand(config_.endpoint, "en"));
  }

  const std::string& id() const override { return config_.name; }

  ServiceRanking Lookup(const LookupRequest& request) const override {
    if (cache_) {
      if (auto hit = cache_->Get(config_.name, request)) {
        return ServiceRanking{config_.name, request.query, std::move(*hit)};
      }
    }
    const Url url = SplitUrl(Expand(config_.endpoint, request.language));
    httplib::Client client(url.origin);
    const auto timeout = std::chrono::duration<double>(config_.timeout_seconds);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(timeout);
    client.set_connection_timeout(micros);
    client.set_read_timeout(micros);
    client.set_write_timeout(micros);
    client.set_follow_location(true);
    auto response = client.Get(BuildPath(url.path, request),
                               httplib::Headers{{"Accept", "application/json"}});
    if (!response) {
      throw IoError(config_.name + ": request failed (" +
                    httplib::to_string(response.error()) + ")");
    }
    if (response->status != 200) {
      throw IoError(config_.name + ": HTTP " + std::to_string(response->status));
    }
    json body = json::parse(response->body, nullptr, false);
    if (body.is_discarded()) throw ParseError(config_.name + ": response is not JSON");
    std::vector<std::string> entities = Parse(body);
    if (entities.size() > request.limit) entities.resize(request.limit);
    if (cache_) cache_->Put(config_.name, request, entities);
    return ServiceRanking{config_.name, request.query, std::move(entities)};
  }

 protected:
  virtual std::string BuildPath(const std::string& base,
                                const LookupRequest& request) const = 0;
  virtual std::vector<std::string> Parse(const json& body) const = 0;

  ServiceConfig config_;

 private:
  const ResponseCache* cache_;
};

// Keyword lookup APIs returning either {"docs":[{"resource":[iri]}]} or
// {"results":[{"uri":iri}]}.
class LookupApiService : public HttpLookupService {
 public:
  using HttpLookupService::HttpLookupService;

 protected:
  std::string BuildPath(const std::string& base, const LookupRequest& r) const override {
    return WithParams(base, {{"query", r.query},
                             {"maxResults", std::to_string(r.limit)},
                             {"format", "json"},
                             {"lang", r.language}});
  }

  std::vector<std::string> Parse(const json& body) const override {
    std::vector<std::string> out;
    if (body.contains("docs") && body["docs"].is_array()) {
      for (const auto& doc : body["docs"]) {
        const auto& resource = doc.contains("resource") ? doc["resource"] : json();
        if (resource.is_array() && !resource.empty() && resource[0].is_string()) {
          out.push_back(resource[0].get<std::string>());
        } else if (resource.is_string()) {
          out.push_back(resource.get<std::string>());
        }
      }
    } else if (body.contains("results") && body["results"].is_array()) {
      for (const auto& r : body["results"]) {
        if (r.contains("uri") && r["uri"].is_string()) out.push_back(r["uri"].get<std::string>());
      }
    } else if (body.is_array()) {
      for (const auto& r : body) {
        if (r.is_string()) out.push_back(r.get<std::string>());
      }
    }
    return out;
  }
};

// SPARQL endpoint: subjects carrying the query as an exact label in the
// request language.
class SparqlService : public HttpLookupService {
 public:
  using HttpLookupService::HttpLookupService;

 protected:
  std::string BuildPath(const std::string& base, const LookupRequest& r) const override {
    std::string literal;
    for (char c : r.query) {
      if (c == '"' || c == '\\') literal.push_back('\\');
      literal.push_back(c);
    }
    const std::string sparql =
        "SELECT DISTINCT ?s WHERE { ?s <http://www.w3.org/2000/01/rdf-schema#label> \"" +
        literal + "\"@" + r.language + " } LIMIT " + std::to_string(r.limit);
    return WithParams(base, {{"query", sparql},
                             {"format", "application/sparql-results+json"}});
  }

  std::vector<std::string> Parse(const json& body) const override {
    std::vector<std::string> out;
    if (!body.contains("results")) return out;
    for (const auto& b : body["results"].value("bindings", json::array())) {
      if (b.contains("s") && b["s"].contains("value")) {
        out.push_back(b["s"]["value"].get<std::string>());
      }
    }
    return out;
  }
};

// MediaWiki search with redirect resolution; page titles become entity ids
// under `entity_prefix`.
class WikiService : public HttpLookupService {
 public:
  using HttpLookupService::HttpLookupService;

 protected:
  std::string BuildPath(const std::string& base, const LookupRequest& r) const override {
    return WithParams(base, {{"action", "query"},
                             {"generator", "search"},
                             {"gsrsearch", r.query},
                             {"gsrlimit", std::to_string(r.limit)},
                             {"redirects", "1"},
                             {"format", "json"}});
  }

  std::vector<std::string> Parse(const json& body) const override {
    std::vector<std::pair<long, std::string>> ranked;
    if (body.contains("query") && body["query"].contains("pages")) {
      const auto& pages = body["query"]["pages"];
      auto add = [&](const json& page) {
        if (!page.contains("title")) return;
        std::string title = page["title"].get<std::string>();
        for (char& c : title) {
          if (c == ' ') c = '_';
        }
        ranked.emplace_back(page.value("index", 0L), config_.entity_prefix + title);
      };
      if (pages.is_object()) {
        for (const auto& [key, page] : pages.items()) add(page);
      } else if (pages.is_array()) {
        for (const auto& page : pages) add(page);
      }
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    for (auto& [index, iri] : ranked) out.push_back(std::move(iri));
    return out;
  }
};

}  // namespace

std::unique_ptr<LookupService> MakeRemoteService(const ServiceConfig& config,
                                                 const ResponseCache* cache) {
  if (config.timeout_seconds <= 0) {
    throw ConfigError("service " + config.name + ": timeout must be positive");
  }
  if (config.type == "lookup-api") return std::make_unique<LookupApiService>(config, cache);
  if (config.type == "sparql") return std::make_unique<SparqlService>(config, cache);
  if (config.type == "wiki-api") return std::make_unique<WikiService>(config, cache);
  throw ConfigError("service " + config.name + ": unknown type '" + config.type + "'");
}

}  // namespace tabmatch
