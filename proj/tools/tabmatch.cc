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

// Command-line front end over the C API.
//
//   tabmatch build-kg --triples F --out DIR
//   tabmatch annotate --kg DIR --tables DIR [--targets-cea F] [--targets-cta F]
//                     [--targets-cpa F] --out DIR [--config F]
//   tabmatch lookup   --kg DIR --query S [--limit N] [--language L]
//   tabmatch evaluate --task cea|cta|cpa --gold F --pred F --kg DIR
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tabmatch/tabmatch.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

int Report(tm_status status) {
  if (status == TM_OK) return kExitOk;
  std::cerr << "tabmatch: " << tm_status_name(status) << ": " << tm_last_error() << "\n";
  return status == TM_ERR_USAGE ? kExitUsage : kExitData;
}

struct KgDeleter {
  void operator()(tm_kg* kg) const { tm_kg_free(kg); }
};
struct ConfigDeleter {
  void operator()(tm_config* c) const { tm_config_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { tm_string_free(s); }
};
using KgHandle = std::unique_ptr<tm_kg, KgDeleter>;
using ConfigHandle = std::unique_ptr<tm_config, ConfigDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

int OpenKg(const std::string& path, KgHandle* out) {
  tm_kg* kg = nullptr;
  if (int rc = Report(tm_kg_open(path.c_str(), &kg))) return rc;
  out->reset(kg);
  return kExitOk;
}

const char* OrNull(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Match tables to a knowledge graph (CEA, CTA, CPA)."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tm_version()));

  std::string triples, out, kg_path, tables, cea, cta, cpa, config, query, language = "en";
  std::string task, gold, pred;
  uint64_t seed = 20190815;
  size_t limit = 100;

  CLI::App* build = app.add_subcommand("build-kg", "Index an N-Triples file");
  build->add_option("--triples", triples, "N-Triples input")->required();
  build->add_option("--out", out, "Index directory to write")->required();
  build->add_option("--seed", seed, "Seed for numeric profile sampling");

  CLI::App* annotate = app.add_subcommand("annotate", "Annotate tables");
  annotate->add_option("--kg", kg_path, "Index directory or N-Triples file")->required();
  annotate->add_option("--tables", tables, "Directory of <table_id>.csv files")->required();
  annotate->add_option("--targets-cea", cea, "CEA targets: table_id,col_id,row_id");
  annotate->add_option("--targets-cta", cta, "CTA targets: table_id,col_id");
  annotate->add_option("--targets-cpa", cpa, "CPA targets: table_id,head_col_id,tail_col_id");
  annotate->add_option("--out", out, "Output directory")->required();
  annotate->add_option("--config", config, "Run configuration (key = value)");

  CLI::App* lookup = app.add_subcommand("lookup", "Rank entities for a query");
  lookup->add_option("--kg", kg_path, "Index directory or N-Triples file")->required();
  lookup->add_option("--query", query, "Query text")->required();
  lookup->add_option("--limit", limit, "Maximum results per service")
      ->check(CLI::PositiveNumber);
  lookup->add_option("--language", language, "ISO-639-1 language code");
  bool json_output = false;
  lookup->add_flag("--json", json_output, "Print the full JSON response");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against gold");
  evaluate->add_option("--task", task, "cea, cta or cpa")
      ->required()
      ->check(CLI::IsMember({"cea", "cta", "cpa"}));
  evaluate->add_option("--gold", gold, "Gold annotations")->required();
  evaluate->add_option("--pred", pred, "Predicted annotations")->required();
  evaluate->add_option("--kg", kg_path, "Index directory or N-Triples file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (build->parsed()) {
    tm_kg_stats stats{};
    if (int rc = Report(tm_kg_build_index(triples.c_str(), out.c_str(), seed, &stats))) {
      return rc;
    }
    std::printf("indexed %zu triples: %zu entities, %zu classes, %zu relations, "
                "%zu numeric profiles\n",
                stats.triples, stats.entities, stats.classes, stats.relations,
                stats.numeric_profiles);
    return kExitOk;
  }

  if (annotate->parsed()) {
    if (cea.empty() && cta.empty() && cpa.empty()) {
      std::cerr << "tabmatch: annotate needs at least one --targets-* file\n";
      return kExitUsage;
    }
    ConfigHandle cfg;
    tm_config* raw = nullptr;
    const tm_status st = config.empty() ? tm_config_default(&raw)
                                        : tm_config_load(config.c_str(), &raw);
    if (int rc = Report(st)) return rc;
    cfg.reset(raw);
    KgHandle kg;
    if (int rc = OpenKg(kg_path, &kg)) return rc;
    tm_annotate_summary summary{};
    if (int rc = Report(tm_annotate(kg.get(), cfg.get(), tables.c_str(), OrNull(cea),
                                    OrNull(cta), OrNull(cpa), out.c_str(), &summary))) {
      return rc;
    }
    std::printf("annotated %zu tables (%zu failed): %zu CEA, %zu CTA, %zu CPA answers\n",
                summary.tables, summary.table_errors, summary.cea_answers,
                summary.cta_answers, summary.cpa_answers);
    if (summary.table_errors > 0) {
      std::cerr << "tabmatch: " << summary.table_errors
                << " table(s) failed; see run_report.json\n";
    }
    return kExitOk;
  }

  if (lookup->parsed()) {
    KgHandle kg;
    if (int rc = OpenKg(kg_path, &kg)) return rc;
    char* raw = nullptr;
    if (int rc = Report(tm_lookup(kg.get(), nullptr, query.c_str(), limit, language.c_str(),
                                  &raw))) {
      return rc;
    }
    OwnedString json(raw);
    if (json_output) {
      std::printf("%s\n", json.get());
      return kExitOk;
    }
    const auto doc = nlohmann::json::parse(json.get());
    size_t rank = 0;
    for (const auto& c : doc["candidates"]) {
      std::printf("%zu\t%s\t%.6f\n", rank++, c["entity"].get<std::string>().c_str(),
                  c["probability"].get<double>());
    }
    return kExitOk;
  }

  if (evaluate->parsed()) {
    KgHandle kg;
    if (int rc = OpenKg(kg_path, &kg)) return rc;
    char* raw = nullptr;
    if (int rc = Report(tm_evaluate(kg.get(), task.c_str(), gold.c_str(), pred.c_str(), &raw))) {
      return rc;
    }
    OwnedString json(raw);
    std::printf("%s\n", nlohmann::json::parse(json.get()).dump(2).c_str());
    return kExitOk;
  }
  return kExitUsage;
}
