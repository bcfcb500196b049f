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

#include "harness/kg_index.h"

#include <filesystem>

#include <json.hpp>

#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {
namespace {

namespace fs = std::filesystem;

constexpr const char* kGraphFile = "graph.nt";
constexpr const char* kProfilesFile = "numeric_profiles.json";
constexpr const char* kManifestFile = "manifest.json";

IndexManifest Describe(const KnowledgeGraph& kg, const ProfileSet& profiles) {
  IndexManifest m;
  m.similarity_method = profiles.method;
  m.seed = profiles.seed;
  m.profile_cap = profiles.cap;
  m.triples = kg.triples().size();
  m.entities = kg.entities().size();
  m.classes = kg.classes().size();
  m.relations = kg.relations().size();
  m.profiles = profiles.profiles.size();
  return m;
}

std::unique_ptr<KgIndex> Assemble(KnowledgeGraph kg, ProfileSet profiles) {
  auto index = std::make_unique<KgIndex>();
  index->kg = std::move(kg);
  index->manifest = Describe(index->kg, profiles);
  index->profiles = std::move(profiles);
  index->labeler = std::make_unique<KsNumericLabeler>(index->profiles.profiles);
  return index;
}

}  // namespace

IndexManifest BuildIndex(const std::string& triples_path, const std::string& out_dir,
                         uint64_t seed, size_t cap) {
  KnowledgeGraph kg = KnowledgeGraph::LoadNTriples(triples_path);
  ProfileSet profiles;
  profiles.seed = seed;
  profiles.cap = cap;
  profiles.profiles = BuildNumericProfiles(kg, cap, seed);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  std::string graph;
  for (const Triple& t : kg.triples()) {
    graph += FormatTriple(t);
    graph.push_back('\n');
  }
  WriteFile((fs::path(out_dir) / kGraphFile).string(), graph);
  SaveProfiles(profiles, (fs::path(out_dir) / kProfilesFile).string());

  const IndexManifest m = Describe(kg, profiles);
  nlohmann::json j;
  j["format_version"] = m.format_version;
  j["similarity_method"] = m.similarity_method;
  j["seed"] = m.seed;
  j["profile_cap"] = m.profile_cap;
  j["triples"] = m.triples;
  j["entities"] = m.entities;
  j["classes"] = m.classes;
  j["relations"] = m.relations;
  j["profiles"] = m.profiles;
  WriteFile((fs::path(out_dir) / kManifestFile).string(), j.dump(2) + "\n");
  return m;
}

std::unique_ptr<KgIndex> LoadIndex(const std::string& path) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) {
    if (!fs::exists(path, ec)) throw IoError("knowledge graph not found: " + path);
    KnowledgeGraph kg = KnowledgeGraph::LoadNTriples(path);
    ProfileSet profiles;
    profiles.profiles = BuildNumericProfiles(kg, profiles.cap, profiles.seed);
    return Assemble(std::move(kg), std::move(profiles));
  }
  const fs::path dir(path);
  const nlohmann::json manifest =
      nlohmann::json::parse(ReadFile((dir / kManifestFile).string()), nullptr, false);
  if (manifest.is_discarded() || !manifest.is_object()) {
    throw ParseError(path + ": manifest.json is not valid JSON");
  }
  const int version = manifest.value("format_version", -1);
  if (version != kIndexFormatVersion) {
    throw DataError(path + ": unsupported index format version " + std::to_string(version));
  }
  KnowledgeGraph kg = KnowledgeGraph::LoadNTriples((dir / kGraphFile).string());
  ProfileSet profiles = LoadProfiles((dir / kProfilesFile).string());
  if (profiles.method != "ks") {
    throw DataError(path + ": unknown similarity method '" + profiles.method + "'");
  }
  return Assemble(std::move(kg), std::move(profiles));
}

}  // namespace tabmatch
