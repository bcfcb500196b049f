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

#ifndef TABMATCH_HARNESS_KG_INDEX_H_
#define TABMATCH_HARNESS_KG_INDEX_H_

#include <cstdint>
#include <memory>
#include <string>

#include "kg/knowledge_graph.h"
#include "numeric/numeric_labeling.h"

namespace tabmatch {

inline constexpr int kIndexFormatVersion = 1;

struct IndexManifest {
  int format_version = kIndexFormatVersion;
  std::string similarity_method = "ks";
  uint64_t seed = kDefaultProfileSeed;
  size_t profile_cap = kDefaultProfileCap;
  size_t triples = 0;
  size_t entities = 0;
  size_t classes = 0;
  size_t relations = 0;
  size_t profiles = 0;
};

// A loaded graph with its numeric profiles and labeler.
struct KgIndex {
  KnowledgeGraph kg;
  ProfileSet profiles;
  IndexManifest manifest;
  std::unique_ptr<NumericLabeler> labeler;
};

// Loads `triples_path`, then writes `out_dir`/{graph.nt,
// numeric_profiles.json, manifest.json}. Returns the manifest.
IndexManifest BuildIndex(const std::string& triples_path, const std::string& out_dir,
                         uint64_t seed = kDefaultProfileSeed,
                         size_t cap = kDefaultProfileCap);

// Accepts an index directory or a bare N-Triples file (indexed in memory).
// Throws IoError / ParseError / DataError.
std::unique_ptr<KgIndex> LoadIndex(const std::string& path);

}  // namespace tabmatch

#endif  // TABMATCH_HARNESS_KG_INDEX_H_
