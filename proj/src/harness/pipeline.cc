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

#include "harness/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <regex>
#include <set>
#include <thread>

#include <json.hpp>

#include "entity/entity_reestimation.h"
#include "kg/knowledge_graph.h"
#include "lookup/fusion.h"
#include "numeric/numeric_labeling.h"
#include "relation/relation_estimation.h"
#include "text/numbers.h"
#include "typing/column_typing.h"
#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {
namespace {

namespace fs = std::filesystem;

std::optional<double> ExtractNumber(const std::string& text) {
  if (auto v = ParseNumber(text)) return v;
  static const std::regex kLeading(R"([-+]?\d[\d,]*(?:\.\d+)?(?:[eE][-+]?\d+)?)");
  std::smatch m;
  if (std::regex_search(text, m, kLeading)) return ParseNumber(m.str());
  return std::nullopt;
}

std::vector<NodeId> SortedIds(const CandidateDistribution& dist, const KnowledgeGraph& kg) {
  std::vector<NodeId> ids;
  for (const auto& [e, p] : dist) {
    if (auto id = kg.Find(e)) ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Per-table working state, indexed [row][col] over all rows (row 0 unused).
struct Work {
  std::vector<ColumnClass> columns;
  std::vector<std::vector<CandidateDistribution>> s7;
  std::vector<std::vector<CandidateDistribution>> final_dist;
  std::vector<std::vector<std::optional<std::string>>> winners;
  std::vector<CandidateDistribution> lookup_types;  // s2 per column
  std::vector<CandidateDistribution> column_types;  // Pr(t|m_j)
  std::map<size_t, RelationRanking> numeric;         // by column
};

class TableAnnotator {
 public:
  TableAnnotator(const Table& table, const PipelineContext& ctx, TableStats* stats,
                 std::vector<std::string>* warnings)
      : table_(table), ctx_(ctx), kg_(*ctx.kg), cfg_(ctx.config), stats_(stats),
        warnings_(warnings) {}

  AnnotationSet Run(const TableTargets& targets);

 private:
  void Observe(std::string_view stage, const CandidateDistribution& d) const {
    if (ctx_.observer) ctx_.observer(stage, d);
  }
  void Warn(std::string message) const {
    if (warnings_) warnings_->push_back(table_.id() + ": " + std::move(message));
  }

  void ClassifyAndPromote(const TableTargets& targets);
  void LookupCells();
  CandidateDistribution LookupCell(size_t row, size_t col);
  void LabelNumericColumns();
  void TypeColumns();
  void ReestimateEntities();
  void FinalizeEntities();
  ColumnPairRelations EstimatePair(size_t head, size_t tail);
  std::optional<std::string> AnnotatePair(size_t head, size_t tail);
  std::vector<std::string> AnnotateColumn(size_t col);
  double WinnerWeight(size_t row, size_t col) const;

  const Table& table_;
  const PipelineContext& ctx_;
  const KnowledgeGraph& kg_;
  const RunConfig& cfg_;
  TableStats* stats_;
  std::vector<std::string>* warnings_;
  Work w_;
  std::map<std::pair<std::string, std::string>, CandidateDistribution> memo_;
};

void TableAnnotator::ClassifyAndPromote(const TableTargets& targets) {
  w_.columns = ClassifyColumns(table_);
  std::set<size_t> promote;
  for (const auto& [row, col] : targets.cea) promote.insert(col);
  for (size_t col : targets.cta) promote.insert(col);
  for (const auto& [head, tail] : targets.cpa) promote.insert(head);
  for (size_t col : promote) {
    if (col >= w_.columns.size()) continue;
    ColumnClass& c = w_.columns[col];
    c.kind = ColumnKind::kEntity;
    c.subkind = LiteralSubkind::kNone;
  }
  if (stats_) {
    for (const ColumnClass& c : w_.columns) {
      ++(c.is_entity() ? stats_->entity_columns : stats_->literal_columns);
    }
  }
}

CandidateDistribution TableAnnotator::LookupCell(size_t row, size_t col) {
  const CellContext& cell = table_.cell(row, col);
  const std::string language = ChooseLanguage(cell.language, table_.language());
  auto run = [&](const std::string& query) {
    auto key = std::make_pair(query, language);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::vector<ServiceRanking> rankings =
        QueryServices(query, language, ctx_.services, cfg_.alpha, &kg_);
    CandidateDistribution d = FuseAndNormalize(rankings, cfg_.alpha);
    memo_.emplace(std::move(key), d);
    return d;
  };
  if (stats_) ++stats_->cells_queried;
  CandidateDistribution d = run(cell.value);
  if (d.empty()) {
    std::string extended = cell.value;
    for (size_t other = 0; other < table_.n_cols(); ++other) {
      if (other == col || table_.value(row, other).empty()) continue;
      if (CellVoteTag(table_.cell(row, other)) != std::optional<std::string>("entity")) continue;
      extended += " " + table_.value(row, other);
    }
    if (extended != cell.value) {
      if (stats_) ++stats_->fallback_queries;
      d = run(extended);
    }
  }
  return d;
}

void TableAnnotator::LookupCells() {
  const size_t rows = table_.n_rows(), cols = table_.n_cols();
  w_.s7.assign(rows, std::vector<CandidateDistribution>(cols));
  for (size_t col = 0; col < cols; ++col) {
    if (!w_.columns[col].is_entity()) continue;
    for (size_t row = 1; row < rows; ++row) {
      if (table_.value(row, col).empty()) continue;
      w_.s7[row][col] = LookupCell(row, col);
      Observe("s7", w_.s7[row][col]);
      if (stats_ && !w_.s7[row][col].empty()) {
        ++stats_->cells_with_candidates;
        stats_->candidates += w_.s7[row][col].size();
      }
    }
  }
}

void TableAnnotator::LabelNumericColumns() {
  if (ctx_.labeler == nullptr) return;
  for (size_t col = 0; col < table_.n_cols(); ++col) {
    const ColumnClass& c = w_.columns[col];
    if (c.is_entity() || c.subkind != LiteralSubkind::kNumerical) continue;
    std::vector<double> values;
    for (size_t row = 1; row < table_.n_rows(); ++row) {
      if (auto v = ExtractNumber(table_.value(row, col))) values.push_back(*v);
    }
    RelationRanking ranking = LabelNumericColumn(values, *ctx_.labeler, cfg_.alpha, col);
    if (ranking.relations.empty()) continue;
    Observe("pr_num", ranking.distribution);
    if (stats_) ++stats_->numeric_columns_labeled;
    w_.numeric.emplace(col, std::move(ranking));
  }
}

void TableAnnotator::TypeColumns() {
  std::vector<RelationRanking> rankings;
  for (const auto& [col, r] : w_.numeric) rankings.push_back(r);
  const CandidateDistribution s1 = InferTypesFromRelations(rankings, kg_);
  Observe("s1", s1);
  const size_t cols = table_.n_cols();
  w_.lookup_types.assign(cols, {});
  w_.column_types.assign(cols, {});
  for (size_t col = 0; col < cols; ++col) {
    if (!w_.columns[col].is_entity()) continue;
    std::vector<CandidateDistribution> cells;
    std::vector<CellContext> contexts;
    for (size_t row = 1; row < table_.n_rows(); ++row) {
      cells.push_back(w_.s7[row][col]);
      contexts.push_back(table_.cell(row, col));
    }
    TypeSignalBundle bundle;
    bundle.s1 = s1;
    bundle.s2 = SignalLookupTypes(cells, kg_);
    bundle.s3 = SignalNerTypes(contexts);
    bundle.s4 = SignalHeaderTypes(table_.header(col), kg_);
    bundle.weights = {cfg_.w(1), cfg_.w(2), cfg_.w(3), cfg_.w(4)};
    bundle.beta = cfg_.beta;
    bundle.aggregation = cfg_.aggregation;
    Observe("s2", bundle.s2);
    Observe("s3", bundle.s3);
    Observe("s4", bundle.s4);
    w_.lookup_types[col] = bundle.s2;
    w_.column_types[col] = AggregateTypeSignals(bundle);
    Observe("column_types", w_.column_types[col]);
  }
}

void TableAnnotator::ReestimateEntities() {
  const size_t rows = table_.n_rows(), cols = table_.n_cols();
  w_.final_dist.assign(rows, std::vector<CandidateDistribution>(cols));
  for (size_t row = 1; row < rows; ++row) {
    std::vector<RowCell> all(cols);
    for (size_t col = 0; col < cols; ++col) {
      all[col].value = table_.value(row, col);
      all[col].entity_column = w_.columns[col].is_entity();
      if (all[col].entity_column) all[col].candidates = SortedIds(w_.s7[row][col], kg_);
    }
    for (size_t col = 0; col < cols; ++col) {
      const CandidateDistribution& s7 = w_.s7[row][col];
      if (s7.empty()) continue;
      std::vector<RowCell> others;
      others.reserve(cols - 1);
      for (size_t j = 0; j < cols; ++j) {
        if (j != col) others.push_back(all[j]);
      }
      EntitySignalBundle bundle;
      bundle.s7 = s7;
      const CandidateDistribution& types = cfg_.s8_source == S8Source::kLookup
                                               ? w_.lookup_types[col]
                                               : w_.column_types[col];
      bundle.s8 = SignalTypeConsistency(s7, types, kg_);
      bundle.s9 = SignalStringSimilarity(s7, table_.value(row, col), kg_);
      bundle.s10 = SignalRowContext(s7, others, kg_);
      bundle.weights = {cfg_.w(7), cfg_.w(8), cfg_.w(9), cfg_.w(10)};
      bundle.aggregation = cfg_.aggregation;
      Observe("s8", bundle.s8);
      Observe("s9", bundle.s9);
      Observe("s10", bundle.s10);
      w_.final_dist[row][col] = Reestimate(bundle);
      Observe("reestimated", w_.final_dist[row][col]);
    }
  }
}

void TableAnnotator::FinalizeEntities() {
  const size_t rows = table_.n_rows(), cols = table_.n_cols();
  w_.winners.assign(rows, std::vector<std::optional<std::string>>(cols));
  for (size_t row = 1; row < rows; ++row) {
    for (size_t col = 0; col < cols; ++col) {
      w_.winners[row][col] = FinalizeCea(w_.final_dist[row][col], w_.s7[row][col]);
    }
  }
}

double TableAnnotator::WinnerWeight(size_t row, size_t col) const {
  if (cfg_.vote_weighting == VoteWeighting::kUniform) return 1.0;
  const auto& winner = w_.winners[row][col];
  return winner ? w_.final_dist[row][col].Get(*winner) : 0.0;
}

ColumnPairRelations TableAnnotator::EstimatePair(size_t head, size_t tail) {
  std::vector<CandidateDistribution> head_cands;
  std::vector<CandidateDistribution> tail_cands;
  std::vector<std::string> tail_values;
  for (size_t row = 1; row < table_.n_rows(); ++row) {
    head_cands.push_back(w_.s7[row][head]);
    tail_cands.push_back(w_.s7[row][tail]);
    tail_values.push_back(table_.value(row, tail));
  }
  ColumnPairRelations pair;
  if (w_.columns[tail].is_entity()) {
    pair = RelationEntityEntity(head_cands, tail_cands, kg_);
    Observe("pr_ee", pair.distribution);
  }
  if (pair.distribution.empty()) {
    pair = RelationEntityLiteral(head_cands, tail_values, kg_, cfg_.beta, cfg_.pair_aggregation);
    Observe("pr_el", pair.distribution);
    if (auto it = w_.numeric.find(tail); it != w_.numeric.end()) {
      pair.distribution = CombineNumericRelations(pair.distribution, it->second.distribution,
                                                  cfg_.w(5), cfg_.w(6), cfg_.aggregation);
      Observe("pr_el_num", pair.distribution);
    }
  }
  pair.head = head;
  pair.tail = tail;
  return pair;
}

std::optional<std::string> TableAnnotator::AnnotatePair(size_t head, size_t tail) {
  const ColumnPairRelations pair_relations = EstimatePair(head, tail);
  std::vector<Vote> votes;
  for (size_t row = 1; row < table_.n_rows(); ++row) {
    const auto& wh = w_.winners[row][head];
    if (!wh) continue;
    const double weight = WinnerWeight(row, head);
    if (pair_relations.kind == PairKind::kEntityEntity) {
      const auto& wt = w_.winners[row][tail];
      if (!wt) continue;
      for (std::string& r : kg_.RelationsBetween(*wh, *wt)) {
        votes.push_back({std::move(r), weight * WinnerWeight(row, tail)});
      }
    } else {
      const std::optional<NodeId> id = kg_.Find(*wh);
      if (!id || table_.value(row, tail).empty()) continue;
      for (const auto& [r, score] :
           KeptAttributeRelations(*id, table_.value(row, tail), kg_, cfg_.beta)) {
        votes.push_back({r, weight});
      }
    }
  }
  return RevoteCpa(votes, pair_relations.distribution);
}

std::vector<std::string> TableAnnotator::AnnotateColumn(size_t col) {
  std::vector<Vote> votes;
  for (size_t row = 1; row < table_.n_rows(); ++row) {
    if (const auto& winner = w_.winners[row][col]) {
      votes.push_back({*winner, WinnerWeight(row, col)});
    }
  }
  return RevoteCta(votes, kg_, w_.column_types[col]);
}

AnnotationSet TableAnnotator::Run(const TableTargets& targets) {
  AnnotationSet out;
  out.table_id = table_.id();
  const size_t rows = table_.n_rows(), cols = table_.n_cols();

  TableTargets valid;
  for (const auto& [row, col] : targets.cea) {
    if (row == 0 || row >= rows || col >= cols) {
      Warn("CEA target (" + std::to_string(col) + "," + std::to_string(row) +
           ") outside the data rows");
    } else {
      valid.cea.emplace_back(row, col);
    }
  }
  for (size_t col : targets.cta) {
    if (col >= cols) Warn("CTA target column " + std::to_string(col) + " out of range");
    else valid.cta.push_back(col);
  }
  for (const auto& [head, tail] : targets.cpa) {
    if (head >= cols || tail >= cols || head == tail) {
      Warn("CPA target (" + std::to_string(head) + "," + std::to_string(tail) + ") invalid");
    } else {
      valid.cpa.emplace_back(head, tail);
    }
  }
  if (valid.cea.empty() && valid.cta.empty() && valid.cpa.empty()) return out;

  ClassifyAndPromote(valid);
  LookupCells();
  LabelNumericColumns();
  TypeColumns();
  ReestimateEntities();
  FinalizeEntities();

  for (const auto& [row, col] : valid.cea) {
    if (const auto& winner = w_.winners[row][col]) out.cea[{row, col}] = *winner;
  }
  for (size_t col : valid.cta) {
    std::vector<std::string> classes = AnnotateColumn(col);
    if (!classes.empty()) out.cta[col] = std::move(classes);
  }
  for (const auto& [head, tail] : valid.cpa) {
    if (auto r = AnnotatePair(head, tail)) out.cpa[{head, tail}] = *r;
  }
  if (stats_) {
    stats_->cea_answers = out.cea.size();
    stats_->cta_answers = out.cta.size();
    stats_->cpa_answers = out.cpa.size();
  }
  return out;
}

nlohmann::json StatsJson(const TableStats& s) {
  return {{"entity_columns", s.entity_columns},
          {"literal_columns", s.literal_columns},
          {"numeric_columns_labeled", s.numeric_columns_labeled},
          {"cells_queried", s.cells_queried},
          {"fallback_queries", s.fallback_queries},
          {"cells_with_candidates", s.cells_with_candidates},
          {"candidates", s.candidates},
          {"cea_answers", s.cea_answers},
          {"cta_answers", s.cta_answers},
          {"cpa_answers", s.cpa_answers},
          {"seconds", s.seconds}};
}

std::string TablePath(const std::string& dir, const std::string& id) {
  const fs::path with_ext = fs::path(dir) / (id + ".csv");
  std::error_code ec;
  if (fs::exists(with_ext, ec)) return with_ext.string();
  const fs::path bare = fs::path(dir) / id;
  if (fs::is_regular_file(bare, ec)) return bare.string();
  return with_ext.string();
}

}  // namespace

AnnotationSet AnnotateTable(const Table& table, const TableTargets& targets,
                            const PipelineContext& ctx, TableStats* stats,
                            std::vector<std::string>* warnings) {
  if (ctx.kg == nullptr) throw ConfigError("pipeline context has no knowledge graph");
  const auto start = std::chrono::steady_clock::now();
  TableAnnotator annotator(table, ctx, stats, warnings);
  AnnotationSet out = annotator.Run(targets);
  if (stats) {
    stats->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

size_t RunResult::errors() const {
  return std::count_if(tables.begin(), tables.end(),
                       [](const TableResult& t) { return !t.error.empty(); });
}

std::map<std::string, AnnotationSet> RunResult::Annotations() const {
  std::map<std::string, AnnotationSet> out;
  for (const TableResult& t : tables) {
    if (t.error.empty()) out.emplace(t.table_id, t.annotations);
  }
  return out;
}

std::string RunResult::ReportJson(const RunConfig& config) const {
  nlohmann::json j;
  j["config"] = nlohmann::json::parse(config.ToJson());
  j["tables"] = nlohmann::json::array();
  for (const TableResult& t : tables) {
    nlohmann::json entry = {{"table_id", t.table_id}, {"stats", StatsJson(t.stats)}};
    if (!t.error.empty()) entry["error"] = t.error;
    entry["warnings"] = t.warnings;
    j["tables"].push_back(std::move(entry));
  }
  j["errors"] = errors();
  j["warnings"] = warnings;
  return j.dump(2) + "\n";
}

RunResult RunPipeline(const std::string& tables_dir, const TargetSet& targets,
                      const PipelineContext& ctx) {
  RunResult result;
  result.warnings = targets.warnings;
  std::map<std::string, TableTargets> by_table;
  for (const CeaTarget& t : targets.cea) by_table[t.table].cea.emplace_back(t.row, t.col);
  for (const CtaTarget& t : targets.cta) by_table[t.table].cta.push_back(t.col);
  for (const CpaTarget& t : targets.cpa) by_table[t.table].cpa.emplace_back(t.head, t.tail);
  for (const auto& [id, t] : by_table) result.tables.push_back(TableResult{id, {}, {}, {}, {}});
  if (result.tables.empty()) return result;

  const Annotators annotators = ctx.annotators ? *ctx.annotators : Annotators::Default();
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < result.tables.size(); i = next++) {
      TableResult& r = result.tables[i];
      r.annotations.table_id = r.table_id;
      try {
        const Table table = IngestTable(TablePath(tables_dir, r.table_id), annotators);
        r.warnings = table.warnings();
        if (table.id() != r.table_id) {
          throw DataError("table file name does not match id " + r.table_id);
        }
        r.annotations = AnnotateTable(table, by_table.at(r.table_id), ctx, &r.stats, &r.warnings);
      } catch (const std::exception& e) {
        r.error = e.what();
        r.annotations = AnnotationSet{};
        r.annotations.table_id = r.table_id;
      }
    }
  };
  const size_t n = std::min(std::max<size_t>(ctx.config.workers, 1), result.tables.size());
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return result;
}

void WriteRunOutputs(const std::string& out_dir, const TargetSet& targets,
                     const RunResult& result, const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  const auto annotations = result.Annotations();
  const fs::path dir(out_dir);
  WriteFile((dir / "cea.csv").string(), FormatCea(targets.cea, annotations));
  WriteFile((dir / "cta.csv").string(), FormatCta(targets.cta, annotations));
  WriteFile((dir / "cpa.csv").string(), FormatCpa(targets.cpa, annotations));
  WriteFile((dir / "run_report.json").string(), result.ReportJson(config));
}

Engine::Engine(const KgIndex& index, RunConfig config) {
  config.Validate();
  if (!config.cache_dir.empty()) cache_ = std::make_unique<ResponseCache>(config.cache_dir);
  if (config.local_service) {
    services_.push_back(std::make_unique<LocalLookupService>(index.kg));
  }
  for (const ServiceConfig& s : config.services) {
    if (s.enabled) services_.push_back(MakeRemoteService(s, cache_.get()));
  }
  if (services_.empty()) throw ConfigError("no lookup service is enabled");

  annotators_ = Annotators::Default();
  if (!config.gazetteer.empty()) {
    tagger_ = std::make_unique<HeuristicEntityTagger>(
        HeuristicEntityTagger::FromGazetteerFile(config.gazetteer));
    annotators_.entity = tagger_.get();
  }
  if (!config.ner_class_map.empty()) {
    class_map_ = std::make_unique<NerClassMap>(NerClassMap::FromFile(config.ner_class_map));
    annotators_.class_map = class_map_.get();
  }

  ctx_.kg = &index.kg;
  ctx_.labeler = index.labeler.get();
  for (const auto& s : services_) ctx_.services.push_back(s.get());
  ctx_.annotators = &annotators_;
  ctx_.config = std::move(config);
}

}  // namespace tabmatch
