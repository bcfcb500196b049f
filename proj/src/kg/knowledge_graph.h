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

#ifndef TABMATCH_KG_KNOWLEDGE_GRAPH_H_
#define TABMATCH_KG_KNOWLEDGE_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kg/label_index.h"
#include "kg/ntriples.h"

namespace tabmatch {

using NodeId = uint32_t;

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsSubClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

struct LiteralAttribute {
  enum class Kind { kTextual, kNumerical };

  std::string relation;
  std::string text;      // lexical form
  std::u32string folded; // case-folded code points of `text`
  double number = 0.0;   // meaningful when kind == kNumerical
  Kind kind = Kind::kTextual;

  bool numerical() const { return kind == Kind::kNumerical; }
};

struct Edge {
  NodeId relation;
  NodeId target;
};

// Immutable in-memory knowledge graph G = (E, T, R) under a closed-world
// reading. `rdf:type`, `rdfs:subClassOf` and `rdfs:label` are interpreted
// (the compact forms `rdf:type` etc. are accepted as IRIs too); every other
// predicate is a relation. IRI objects become entity-entity triples and
// literal objects entity-literal triples. Safe for concurrent reads.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  // Throws DataError when subclass edges contain a cycle.
  static KnowledgeGraph FromTriples(std::vector<Triple> triples);
  // Throws IoError / ParseError (with line number) / DataError.
  static KnowledgeGraph LoadNTriples(const std::string& path);

  // Sorted IRIs.
  const std::vector<std::string>& entities() const { return entity_iris_; }
  const std::vector<std::string>& classes() const { return class_iris_; }
  const std::vector<std::string>& relations() const { return relation_iris_; }

  bool IsEntity(std::string_view iri) const;
  bool IsClass(std::string_view iri) const;
  bool IsRelation(std::string_view iri) const;

  std::optional<NodeId> Find(std::string_view iri) const;
  const std::string& Iri(NodeId id) const { return iris_[id]; }

  std::vector<std::string> Labels(std::string_view iri) const;
  std::span<const std::string> Labels(NodeId id) const;
  // Labels of a class; falls back to its local name split at case changes
  // ("PopulatedPlace" -> "Populated Place").
  std::vector<std::string> ClassLabels(std::string_view class_iri) const;

  // Direct types closed under subclass edges, sorted. Unknown -> empty.
  std::vector<std::string> TypesOf(std::string_view entity) const;
  std::vector<std::string> DirectTypesOf(std::string_view entity) const;
  // Sorted class ids (closure), by node id.
  std::span<const NodeId> TypeIdsOf(NodeId entity) const;

  // Relations r with a triple e1 -r-> e2, sorted.
  std::vector<std::string> RelationsBetween(std::string_view e1,
                                            std::string_view e2) const;
  std::vector<NodeId> RelationIdsBetween(NodeId e1, NodeId e2) const;

  std::vector<LiteralAttribute> LiteralAttributes(std::string_view entity) const;
  std::span<const LiteralAttribute> LiteralAttributes(NodeId entity) const;

  // Subject-side classes (with ancestors) of relation r, sorted.
  std::vector<std::string> TypesForRelation(std::string_view relation) const;

  std::span<const Edge> OutEdges(NodeId entity) const;
  std::span<const Edge> InEdges(NodeId entity) const;

  // Strict ancestors of a class, nearest first (breadth-first), then by IRI.
  std::vector<std::string> AncestorsOf(std::string_view class_iri) const;
  std::vector<std::string> ParentsOf(std::string_view class_iri) const;
  // Longest path to a root; roots have depth 0. Unknown -> -1.
  int Depth(std::string_view class_iri) const;
  bool IsStrictAncestor(std::string_view ancestor, std::string_view cls) const;

  // Follows owl:sameAs / wikiPageRedirects links to a canonical entity.
  std::string Canonicalize(std::string_view iri) const;

  // Tiered label search: exact (case-insensitive), then prefix, then fuzzy
  // matches with normalized similarity >= 0.6; at most `limit` entities.
  std::vector<std::string> SearchLabel(std::string_view query, size_t limit) const;

  const std::vector<Triple>& triples() const { return triples_; }
  size_t ee_triple_count() const { return ee_count_; }
  size_t el_triple_count() const { return el_count_; }

 private:
  enum Role : uint8_t { kNone = 0, kEntity = 1, kClass = 2, kRelation = 4 };

  NodeId Intern(std::string_view iri);
  std::optional<NodeId> FindWithRole(std::string_view iri, Role role) const;
  void BuildClassClosure();

  std::vector<Triple> triples_;
  std::vector<std::string> iris_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<uint8_t> roles_;

  std::vector<std::string> entity_iris_;
  std::vector<std::string> class_iris_;
  std::vector<std::string> relation_iris_;

  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<NodeId>> direct_types_;
  std::vector<std::vector<NodeId>> type_closure_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<std::vector<NodeId>> class_ancestors_;  // strict, BFS order
  std::vector<int> depth_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::vector<std::vector<LiteralAttribute>> literals_;
  std::unordered_map<NodeId, std::vector<NodeId>> relation_types_;
  std::unordered_map<NodeId, NodeId> redirects_;
  size_t ee_count_ = 0;
  size_t el_count_ = 0;

  LabelIndex label_index_;
};

}  // namespace tabmatch

#endif  // TABMATCH_KG_KNOWLEDGE_GRAPH_H_
