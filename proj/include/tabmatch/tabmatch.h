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

#ifndef TABMATCH_TABMATCH_H_
#define TABMATCH_TABMATCH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TM_API __declspec(dllexport)
#else
#define TM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

// Status codes. Every function that can fail returns one; the message of
// the most recent failure on the calling thread is kept by tm_last_error().
typedef enum tm_status {
  TM_OK = 0,
  TM_ERR_USAGE = 1,     // invalid argument
  TM_ERR_IO = 2,        // file cannot be read or written
  TM_ERR_PARSE = 3,     // malformed input file
  TM_ERR_DATA = 4,      // well-formed but unusable data
  TM_ERR_CONFIG = 5,    // invalid run configuration
  TM_ERR_INTERNAL = 6,  // unexpected failure
} tm_status;

typedef struct tm_kg tm_kg;          // a loaded, immutable knowledge graph
typedef struct tm_config tm_config;  // a validated run configuration

typedef struct tm_kg_stats {
  size_t triples;
  size_t entities;
  size_t classes;
  size_t relations;
  size_t numeric_profiles;
} tm_kg_stats;

typedef struct tm_annotate_summary {
  size_t tables;
  size_t table_errors;
  size_t cea_answers;
  size_t cta_answers;
  size_t cpa_answers;
} tm_annotate_summary;

TM_API const char* tm_version(void);
TM_API const char* tm_status_name(tm_status status);
// Thread-local; valid until the next failing call on the same thread.
TM_API const char* tm_last_error(void);

// Strings returned through `char**` are owned by the caller.
TM_API void tm_string_free(char* s);

// Parses an N-Triples file and writes an index directory.
TM_API tm_status tm_kg_build_index(const char* triples_path, const char* out_dir,
                                   uint64_t seed, tm_kg_stats* stats);
// Opens an index directory or a bare N-Triples file.
TM_API tm_status tm_kg_open(const char* path, tm_kg** out);
TM_API tm_status tm_kg_stats_get(const tm_kg* kg, tm_kg_stats* out);
TM_API void tm_kg_free(tm_kg* kg);

TM_API tm_status tm_config_default(tm_config** out);
TM_API tm_status tm_config_load(const char* path, tm_config** out);
TM_API tm_status tm_config_parse(const char* text, tm_config** out);
TM_API void tm_config_free(tm_config* config);

// Queries the configured services (local search only when `config` is
// NULL) and returns JSON:
// {"query":..,"language":..,"limit":..,"services":[{"id":..,"entities":[..]}],
//  "candidates":[{"entity":..,"probability":..}]}, candidates by
// probability descending.
TM_API tm_status tm_lookup(const tm_kg* kg, const tm_config* config, const char* query,
                           size_t limit, const char* language, char** out_json);

// Annotates every table referenced by the target files (any of which may be
// NULL) found in `tables_dir`, writing cea.csv, cta.csv, cpa.csv and
// run_report.json to `out_dir`. A failing table is recorded in the report
// and counted in `summary->table_errors`; it does not fail the call.
TM_API tm_status tm_annotate(const tm_kg* kg, const tm_config* config, const char* tables_dir,
                             const char* cea_targets, const char* cta_targets,
                             const char* cpa_targets, const char* out_dir,
                             tm_annotate_summary* summary);

// `task` is "cea", "cta" or "cpa". Returns the report as JSON.
TM_API tm_status tm_evaluate(const tm_kg* kg, const char* task, const char* gold_path,
                             const char* pred_path, char** out_json);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // TABMATCH_TABMATCH_H_
