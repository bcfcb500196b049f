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

#include "tabmatch/tabmatch.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "harness/config.h"
#include "harness/evaluate.h"
#include "harness/kg_index.h"
#include "harness/pipeline.h"
#include "lookup/fusion.h"
#include "util/error.h"

struct tm_kg {
  std::unique_ptr<tabmatch::KgIndex> index;
};

struct tm_config {
  tabmatch::RunConfig config;
};

namespace {

thread_local std::string last_error;

tm_status Fail(tm_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

tm_status FromKind(tabmatch::ErrorKind kind) {
  switch (kind) {
    case tabmatch::ErrorKind::kUsage: return TM_ERR_USAGE;
    case tabmatch::ErrorKind::kIo: return TM_ERR_IO;
    case tabmatch::ErrorKind::kParse: return TM_ERR_PARSE;
    case tabmatch::ErrorKind::kData: return TM_ERR_DATA;
    case tabmatch::ErrorKind::kConfig: return TM_ERR_CONFIG;
  }
  return TM_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
tm_status Guard(F&& body) {
  try {
    body();
    return TM_OK;
  } catch (const tabmatch::Error& e) {
    return Fail(FromKind(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(TM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(TM_ERR_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string Opt(const char* s) { return s ? std::string(s) : std::string(); }

void FillStats(const tabmatch::IndexManifest& m, tm_kg_stats* out) {
  out->triples = m.triples;
  out->entities = m.entities;
  out->classes = m.classes;
  out->relations = m.relations;
  out->numeric_profiles = m.profiles;
}

}  // namespace

extern "C" {

const char* tm_version(void) { return "1.0.0"; }

const char* tm_status_name(tm_status status) {
  switch (status) {
    case TM_OK: return "ok";
    case TM_ERR_USAGE: return "usage error";
    case TM_ERR_IO: return "i/o error";
    case TM_ERR_PARSE: return "parse error";
    case TM_ERR_DATA: return "data error";
    case TM_ERR_CONFIG: return "config error";
    case TM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tm_last_error(void) { return last_error.c_str(); }

void tm_string_free(char* s) { std::free(s); }

tm_status tm_kg_build_index(const char* triples_path, const char* out_dir, uint64_t seed,
                            tm_kg_stats* stats) {
  if (!triples_path || !out_dir) return Fail(TM_ERR_USAGE, "triples path and output required");
  return Guard([&] {
    const auto m = tabmatch::BuildIndex(triples_path, out_dir, seed);
    if (stats) FillStats(m, stats);
  });
}

tm_status tm_kg_open(const char* path, tm_kg** out) {
  if (!path || !out) return Fail(TM_ERR_USAGE, "path and output handle required");
  *out = nullptr;
  return Guard([&] {
    auto kg = std::make_unique<tm_kg>();
    kg->index = tabmatch::LoadIndex(path);
    *out = kg.release();
  });
}

tm_status tm_kg_stats_get(const tm_kg* kg, tm_kg_stats* out) {
  if (!kg || !out) return Fail(TM_ERR_USAGE, "graph handle and output required");
  FillStats(kg->index->manifest, out);
  return TM_OK;
}

void tm_kg_free(tm_kg* kg) { delete kg; }

tm_status tm_config_default(tm_config** out) {
  if (!out) return Fail(TM_ERR_USAGE, "output handle required");
  return Guard([&] { *out = new tm_config{}; });
}

tm_status tm_config_load(const char* path, tm_config** out) {
  if (!path || !out) return Fail(TM_ERR_USAGE, "path and output handle required");
  *out = nullptr;
  return Guard([&] { *out = new tm_config{tabmatch::RunConfig::FromFile(path)}; });
}

tm_status tm_config_parse(const char* text, tm_config** out) {
  if (!text || !out) return Fail(TM_ERR_USAGE, "text and output handle required");
  *out = nullptr;
  return Guard([&] { *out = new tm_config{tabmatch::RunConfig::Parse(text)}; });
}

void tm_config_free(tm_config* config) { delete config; }

tm_status tm_lookup(const tm_kg* kg, const tm_config* config, const char* query, size_t limit,
                    const char* language, char** out_json) {
  if (!kg || !query || !out_json) return Fail(TM_ERR_USAGE, "graph, query and output required");
  if (limit < 1) return Fail(TM_ERR_USAGE, "limit must be at least 1");
  if (std::strlen(query) == 0) return Fail(TM_ERR_USAGE, "query must be nonempty");
  *out_json = nullptr;
  return Guard([&] {
    tabmatch::RunConfig cfg = config ? config->config : tabmatch::RunConfig{};
    tabmatch::Engine engine(*kg->index, cfg);
    const std::string lang = language && *language ? language : "en";
    const auto& services = engine.context().services;
    const auto rankings =
        tabmatch::QueryServices(query, lang, services, limit, &kg->index->kg);
    const auto dist = tabmatch::FuseAndNormalize(rankings, limit);
    nlohmann::json j;
    j["query"] = query;
    j["language"] = lang;
    j["limit"] = limit;
    j["services"] = nlohmann::json::array();
    for (const auto& r : rankings) {
      j["services"].push_back({{"id", r.service_id}, {"entities", r.entities}});
    }
    std::vector<std::pair<std::string, double>> items(dist.begin(), dist.end());
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    j["candidates"] = nlohmann::json::array();
    for (const auto& [e, p] : items) j["candidates"].push_back({{"entity", e}, {"probability", p}});
    *out_json = Dup(j.dump());
  });
}

tm_status tm_annotate(const tm_kg* kg, const tm_config* config, const char* tables_dir,
                      const char* cea_targets, const char* cta_targets,
                      const char* cpa_targets, const char* out_dir,
                      tm_annotate_summary* summary) {
  if (!kg || !tables_dir || !out_dir) {
    return Fail(TM_ERR_USAGE, "graph, tables directory and output directory required");
  }
  if (!cea_targets && !cta_targets && !cpa_targets) {
    return Fail(TM_ERR_USAGE, "at least one target file is required");
  }
  return Guard([&] {
    const tabmatch::RunConfig cfg = config ? config->config : tabmatch::RunConfig{};
    const tabmatch::TargetSet targets =
        tabmatch::ReadTargets(Opt(cea_targets), Opt(cta_targets), Opt(cpa_targets));
    tabmatch::Engine engine(*kg->index, cfg);
    const tabmatch::RunResult result =
        tabmatch::RunPipeline(tables_dir, targets, engine.context());
    tabmatch::WriteRunOutputs(out_dir, targets, result, cfg);
    if (summary) {
      *summary = tm_annotate_summary{};
      summary->tables = result.tables.size();
      summary->table_errors = result.errors();
      for (const auto& t : result.tables) {
        summary->cea_answers += t.annotations.cea.size();
        summary->cta_answers += t.annotations.cta.size();
        summary->cpa_answers += t.annotations.cpa.size();
      }
    }
  });
}

tm_status tm_evaluate(const tm_kg* kg, const char* task, const char* gold_path,
                      const char* pred_path, char** out_json) {
  if (!kg || !task || !gold_path || !pred_path || !out_json) {
    return Fail(TM_ERR_USAGE, "graph, task, gold, prediction and output required");
  }
  *out_json = nullptr;
  return Guard([&] {
    const auto report = tabmatch::EvaluateFiles(tabmatch::ParseTask(task), gold_path,
                                                pred_path, kg->index->kg);
    *out_json = Dup(report.ToJson());
  });
}

}  // extern "C"
