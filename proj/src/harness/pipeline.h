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

#ifndef TABMATCH_HARNESS_PIPELINE_H_
#define TABMATCH_HARNESS_PIPELINE_H_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harness/config.h"
#include "harness/kg_index.h"
#include "harness/targets.h"
#include "lookup/distribution.h"
#include "lookup/response_cache.h"
#include "lookup/service.h"
#include "table/annotators.h"
#include "table/ingest.h"
#include "table/table.h"
#include "voting/final_voting.h"

namespace tabmatch {

// Called with every candidate distribution the pipeline produces, tagged
// with the signal name ("s7", "s2", "pr_ee", "reestimated", ...). Must be
// thread-safe when more than one worker runs.
using DistributionObserver =
    std::function<void(std::string_view stage, const CandidateDistribution&)>;

struct PipelineContext {
  const KnowledgeGraph* kg = nullptr;
  const NumericLabeler* labeler = nullptr;  // may be null
  std::vector<const LookupService*> services;
  const Annotators* annotators = nullptr;
  RunConfig config;
  DistributionObserver observer;
};

// Targets of one table in table coordinates.
struct TableTargets {
  std::vector<std::pair<size_t, size_t>> cea;  // (row, col)
  std::vector<size_t> cta;
  std::vector<std::pair<size_t, size_t>> cpa;  // (head, tail)
};

struct TableStats {
  size_t entity_columns = 0;
  size_t literal_columns = 0;
  size_t numeric_columns_labeled = 0;
  size_t cells_queried = 0;
  size_t fallback_queries = 0;
  size_t cells_with_candidates = 0;
  size_t candidates = 0;
  size_t cea_answers = 0;
  size_t cta_answers = 0;
  size_t cpa_answers = 0;
  double seconds = 0.0;
};

// The full pipeline, lookup to voting, for one ingested table. Only targeted
// coordinates are annotated; out-of-range targets are skipped with a
// warning in `warnings`.
AnnotationSet AnnotateTable(const Table& table, const TableTargets& targets,
                            const PipelineContext& ctx, TableStats* stats = nullptr,
                            std::vector<std::string>* warnings = nullptr);

struct TableResult {
  std::string table_id;
  AnnotationSet annotations;
  TableStats stats;
  std::string error;  // empty on success
  std::vector<std::string> warnings;
};

struct RunResult {
  std::vector<TableResult> tables;  // sorted by table id
  std::vector<std::string> warnings;

  size_t errors() const;
  std::map<std::string, AnnotationSet> Annotations() const;
  std::string ReportJson(const RunConfig& config) const;
};

// Reads `<tables_dir>/<table_id>.csv` for every table referenced by
// `targets` and annotates them on `ctx.config.workers` threads. A table
// that fails records its error; the others proceed.
RunResult RunPipeline(const std::string& tables_dir, const TargetSet& targets,
                      const PipelineContext& ctx);

// Writes cea.csv, cta.csv, cpa.csv and run_report.json into `out_dir`.
void WriteRunOutputs(const std::string& out_dir, const TargetSet& targets,
                     const RunResult& result, const RunConfig& config);

// Owns the services, cache and annotators a run needs.
class Engine {
 public:
  // Throws ConfigError when no lookup service is enabled or a service
  // cannot be built.
  Engine(const KgIndex& index, RunConfig config);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const PipelineContext& context() const { return ctx_; }
  PipelineContext& mutable_context() { return ctx_; }

 private:
  std::unique_ptr<ResponseCache> cache_;
  std::vector<std::unique_ptr<LookupService>> services_;
  std::unique_ptr<HeuristicEntityTagger> tagger_;
  std::unique_ptr<NerClassMap> class_map_;
  Annotators annotators_;
  PipelineContext ctx_;
};

}  // namespace tabmatch

#endif  // TABMATCH_HARNESS_PIPELINE_H_
