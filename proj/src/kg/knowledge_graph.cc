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

#include "kg/knowledge_graph.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <tuple>
#include <unordered_set>

#include "text/numbers.h"
#include "text/unicode.h"
#include "util/error.h"

namespace tabmatch {
namespace {

constexpr std::string_view kOwlSameAs = "http://www.w3.org/2002/07/owl#sameAs";
constexpr std::string_view kWikiRedirect =
    "http://dbpedia.org/ontology/wikiPageRedirects";

std::string_view CanonicalPredicate(std::string_view p) {
  if (p == "rdf:type" || p == "a") return kRdfType;
  if (p == "rdfs:subClassOf") return kRdfsSubClassOf;
  if (p == "rdfs:label") return kRdfsLabel;
  return p;
}

bool IsClassMeta(std::string_view iri) {
  return iri == "http://www.w3.org/2002/07/owl#Class" ||
         iri == "http://www.w3.org/2000/01/rdf-schema#Class" ||
         iri == "owl:Class" || iri == "rdfs:Class";
}

bool IsPropertyMeta(std::string_view iri) {
  return iri == "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property" ||
         iri == "http://www.w3.org/2002/07/owl#ObjectProperty" ||
         iri == "http://www.w3.org/2002/07/owl#DatatypeProperty" ||
         iri == "http://www.w3.org/2002/07/owl#AnnotationProperty" ||
         iri == "rdf:Property" || iri == "owl:ObjectProperty" ||
         iri == "owl:DatatypeProperty";
}

bool IsNumericDatatype(std::string_view dt) {
  static const std::unordered_set<std::string_view> kNumeric = {
      "integer", "int", "long", "short", "byte", "decimal", "double", "float",
      "nonNegativeInteger", "positiveInteger", "negativeInteger",
      "nonPositiveInteger", "unsignedInt", "unsignedLong", "unsignedShort",
      "unsignedByte", "gYear"};
  std::string_view local = dt;
  if (dt.starts_with(kXsdNs)) {
    local = dt.substr(kXsdNs.size());
  } else if (dt.starts_with("xsd:")) {
    local = dt.substr(4);
  } else {
    return false;
  }
  return kNumeric.contains(local);
}

std::string NodeKey(const Term& t) {
  return t.kind == Term::Kind::kBlank ? "_:" + t.value : t.value;
}

std::string SplitCamelCase(std::string_view local) {
  std::string out;
  for (size_t i = 0; i < local.size(); ++i) {
    const char c = local[i];
    if (c == '_' || c == '-') {
      out.push_back(' ');
      continue;
    }
    if (i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
        std::islower(static_cast<unsigned char>(local[i - 1]))) {
      out.push_back(' ');
    }
    out.push_back(c);
  }
  return out;
}

std::string LocalName(std::string_view iri) {
  const size_t cut = iri.find_last_of("/#:");
  return std::string(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

}  // namespace

NodeId KnowledgeGraph::Intern(std::string_view iri) {
  auto it = ids_.find(std::string(iri));
  if (it != ids_.end()) return it->second;
  const NodeId id = static_cast<NodeId>(iris_.size());
  iris_.emplace_back(iri);
  ids_.emplace(iris_.back(), id);
  roles_.push_back(kNone);
  return id;
}

std::optional<NodeId> KnowledgeGraph::Find(std::string_view iri) const {
  auto it = ids_.find(std::string(iri));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> KnowledgeGraph::FindWithRole(std::string_view iri,
                                                   Role role) const {
  auto id = Find(iri);
  if (!id || (roles_[*id] & role) == 0) return std::nullopt;
  return id;
}

bool KnowledgeGraph::IsEntity(std::string_view iri) const {
  return FindWithRole(iri, kEntity).has_value();
}
bool KnowledgeGraph::IsClass(std::string_view iri) const {
  return FindWithRole(iri, kClass).has_value();
}
bool KnowledgeGraph::IsRelation(std::string_view iri) const {
  return FindWithRole(iri, kRelation).has_value();
}

KnowledgeGraph KnowledgeGraph::LoadNTriples(const std::string& path) {
  return FromTriples(ReadNTriplesFile(path));
}

KnowledgeGraph KnowledgeGraph::FromTriples(std::vector<Triple> triples) {
  KnowledgeGraph g;
  g.triples_ = std::move(triples);

  // Roles first: classes and relations take precedence over entities.
  for (const Triple& t : g.triples_) {
    const std::string_view p = CanonicalPredicate(t.predicate);
    const NodeId s = g.Intern(NodeKey(t.subject));
    if (p == kRdfType && !t.object.is_literal()) {
      const std::string object = NodeKey(t.object);
      if (IsClassMeta(object)) {
        g.roles_[s] |= kClass;
      } else if (IsPropertyMeta(object)) {
        g.roles_[s] |= kRelation;
      } else {
        g.roles_[g.Intern(object)] |= kClass;
      }
    } else if (p == kRdfsSubClassOf && !t.object.is_literal()) {
      g.roles_[s] |= kClass;
      g.roles_[g.Intern(NodeKey(t.object))] |= kClass;
    } else if (p != kRdfType && p != kRdfsSubClassOf && p != kRdfsLabel) {
      g.roles_[g.Intern(p)] |= kRelation;
      if (!t.object.is_literal()) g.Intern(NodeKey(t.object));
    }
  }
  for (const Triple& t : g.triples_) {
    const std::string_view p = CanonicalPredicate(t.predicate);
    const NodeId s = *g.Find(NodeKey(t.subject));
    if ((g.roles_[s] & (kClass | kRelation)) == 0) g.roles_[s] |= kEntity;
    if (p != kRdfType && p != kRdfsSubClassOf && p != kRdfsLabel &&
        !t.object.is_literal()) {
      const NodeId o = *g.Find(NodeKey(t.object));
      if ((g.roles_[o] & (kClass | kRelation)) == 0) g.roles_[o] |= kEntity;
    }
  }

  const size_t n = g.iris_.size();
  g.labels_.resize(n);
  g.direct_types_.resize(n);
  g.parents_.resize(n);
  g.out_.resize(n);
  g.in_.resize(n);
  g.literals_.resize(n);

  std::set<std::tuple<NodeId, NodeId, NodeId>> seen_edges;
  for (const Triple& t : g.triples_) {
    const std::string_view p = CanonicalPredicate(t.predicate);
    const NodeId s = *g.Find(NodeKey(t.subject));
    if (p == kRdfsLabel) {
      if (t.object.is_literal()) g.labels_[s].push_back(t.object.value);
      continue;
    }
    if (p == kRdfType) {
      if (t.object.is_literal()) continue;
      const NodeId o = *g.Find(NodeKey(t.object));
      if (g.roles_[o] & kClass && g.roles_[s] & kEntity) {
        g.direct_types_[s].push_back(o);
      }
      continue;
    }
    if (p == kRdfsSubClassOf) {
      if (!t.object.is_literal()) g.parents_[s].push_back(*g.Find(NodeKey(t.object)));
      continue;
    }
    const NodeId r = *g.Find(p);
    if (t.object.is_literal()) {
      LiteralAttribute attr;
      attr.relation = std::string(p);
      attr.text = t.object.value;
      attr.folded = ToCodePoints(FoldCaseUtf8(attr.text));
      const bool typed = !t.object.datatype.empty();
      if (!typed || IsNumericDatatype(t.object.datatype)) {
        if (auto v = ParseNumber(t.object.value)) {
          attr.kind = LiteralAttribute::Kind::kNumerical;
          attr.number = *v;
        }
      }
      g.literals_[s].push_back(std::move(attr));
      ++g.el_count_;
    } else {
      const NodeId o = *g.Find(NodeKey(t.object));
      ++g.ee_count_;
      if (seen_edges.emplace(s, r, o).second) {
        g.out_[s].push_back(Edge{r, o});
        g.in_[o].push_back(Edge{r, s});
      }
      if (p == kOwlSameAs || p == kWikiRedirect) g.redirects_[s] = o;
    }
  }

  for (NodeId id = 0; id < n; ++id) {
    auto& dt = g.direct_types_[id];
    std::sort(dt.begin(), dt.end());
    dt.erase(std::unique(dt.begin(), dt.end()), dt.end());
    auto& ps = g.parents_[id];
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    if (g.roles_[id] & kEntity) g.entity_iris_.push_back(g.iris_[id]);
    if (g.roles_[id] & kClass) g.class_iris_.push_back(g.iris_[id]);
    if (g.roles_[id] & kRelation) g.relation_iris_.push_back(g.iris_[id]);
  }
  std::sort(g.entity_iris_.begin(), g.entity_iris_.end());
  std::sort(g.class_iris_.begin(), g.class_iris_.end());
  std::sort(g.relation_iris_.begin(), g.relation_iris_.end());

  g.BuildClassClosure();

  // Per-entity type closure and relation -> subject classes.
  g.type_closure_.resize(n);
  for (NodeId id = 0; id < n; ++id) {
    if (g.direct_types_[id].empty()) continue;
    std::vector<NodeId> closure = g.direct_types_[id];
    for (NodeId t : g.direct_types_[id]) {
      closure.insert(closure.end(), g.class_ancestors_[t].begin(),
                     g.class_ancestors_[t].end());
    }
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    g.type_closure_[id] = std::move(closure);
  }
  for (NodeId id = 0; id < n; ++id) {
    if (g.type_closure_[id].empty()) continue;
    std::unordered_set<NodeId> used;
    for (const Edge& e : g.out_[id]) used.insert(e.relation);
    for (const LiteralAttribute& a : g.literals_[id]) used.insert(*g.Find(a.relation));
    for (NodeId r : used) {
      auto& types = g.relation_types_[r];
      types.insert(types.end(), g.type_closure_[id].begin(), g.type_closure_[id].end());
    }
  }
  for (auto& [r, types] : g.relation_types_) {
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
  }

  std::vector<std::pair<std::string, std::string>> entity_labels;
  for (NodeId id = 0; id < n; ++id) {
    if (!(g.roles_[id] & kEntity)) continue;
    for (const auto& label : g.labels_[id]) entity_labels.emplace_back(label, g.iris_[id]);
  }
  g.label_index_ = LabelIndex(entity_labels);
  return g;
}

void KnowledgeGraph::BuildClassClosure() {
  const size_t n = iris_.size();
  // 0 unvisited, 1 on stack, 2 done.
  std::vector<uint8_t> state(n, 0);
  depth_.assign(n, -1);
  std::function<int(NodeId)> visit = [&](NodeId c) -> int {
    if (state[c] == 2) return depth_[c];
    if (state[c] == 1) {
      throw DataError("subclass cycle through " + iris_[c]);
    }
    state[c] = 1;
    int d = 0;
    for (NodeId p : parents_[c]) d = std::max(d, visit(p) + 1);
    state[c] = 2;
    depth_[c] = d;
    return d;
  };
  for (NodeId id = 0; id < n; ++id) {
    if (roles_[id] & kClass) visit(id);
  }

  class_ancestors_.assign(n, {});
  for (NodeId id = 0; id < n; ++id) {
    if (!(roles_[id] & kClass)) continue;
    std::unordered_set<NodeId> seen;
    std::vector<NodeId> stack(parents_[id].begin(), parents_[id].end());
    while (!stack.empty()) {
      const NodeId c = stack.back();
      stack.pop_back();
      if (!seen.insert(c).second) continue;
      for (NodeId p : parents_[c]) stack.push_back(p);
    }
    std::vector<NodeId> ancestors(seen.begin(), seen.end());
    // Deepest first keeps every parent after its children.
    std::sort(ancestors.begin(), ancestors.end(), [&](NodeId a, NodeId b) {
      if (depth_[a] != depth_[b]) return depth_[a] > depth_[b];
      return iris_[a] < iris_[b];
    });
    class_ancestors_[id] = std::move(ancestors);
  }
}

std::vector<std::string> KnowledgeGraph::Labels(std::string_view iri) const {
  auto id = Find(iri);
  if (!id) return {};
  return labels_[*id];
}

std::span<const std::string> KnowledgeGraph::Labels(NodeId id) const {
  return labels_[id];
}

std::vector<std::string> KnowledgeGraph::ClassLabels(std::string_view class_iri) const {
  auto id = FindWithRole(class_iri, kClass);
  if (!id) return {};
  if (!labels_[*id].empty()) return labels_[*id];
  return {SplitCamelCase(LocalName(class_iri))};
}

std::vector<std::string> KnowledgeGraph::TypesOf(std::string_view entity) const {
  auto id = FindWithRole(entity, kEntity);
  if (!id) return {};
  std::vector<std::string> out;
  for (NodeId t : type_closure_[*id]) out.push_back(iris_[t]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> KnowledgeGraph::DirectTypesOf(std::string_view entity) const {
  auto id = FindWithRole(entity, kEntity);
  if (!id) return {};
  std::vector<std::string> out;
  for (NodeId t : direct_types_[*id]) out.push_back(iris_[t]);
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const NodeId> KnowledgeGraph::TypeIdsOf(NodeId entity) const {
  return type_closure_[entity];
}

std::vector<NodeId> KnowledgeGraph::RelationIdsBetween(NodeId e1, NodeId e2) const {
  std::vector<NodeId> out;
  // Scan the smaller adjacency list.
  if (out_[e1].size() <= in_[e2].size()) {
    for (const Edge& e : out_[e1]) {
      if (e.target == e2) out.push_back(e.relation);
    }
  } else {
    for (const Edge& e : in_[e2]) {
      if (e.target == e1) out.push_back(e.relation);
    }
  }
  return out;
}

std::vector<std::string> KnowledgeGraph::RelationsBetween(std::string_view e1,
                                                          std::string_view e2) const {
  auto a = Find(e1);
  auto b = Find(e2);
  if (!a || !b) return {};
  std::vector<std::string> out;
  for (NodeId r : RelationIdsBetween(*a, *b)) out.push_back(iris_[r]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LiteralAttribute> KnowledgeGraph::LiteralAttributes(
    std::string_view entity) const {
  auto id = Find(entity);
  if (!id) return {};
  return literals_[*id];
}

std::span<const LiteralAttribute> KnowledgeGraph::LiteralAttributes(NodeId entity) const {
  return literals_[entity];
}

std::vector<std::string> KnowledgeGraph::TypesForRelation(std::string_view relation) const {
  auto id = FindWithRole(relation, kRelation);
  if (!id) return {};
  auto it = relation_types_.find(*id);
  if (it == relation_types_.end()) return {};
  std::vector<std::string> out;
  for (NodeId t : it->second) out.push_back(iris_[t]);
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const Edge> KnowledgeGraph::OutEdges(NodeId entity) const { return out_[entity]; }
std::span<const Edge> KnowledgeGraph::InEdges(NodeId entity) const { return in_[entity]; }

std::vector<std::string> KnowledgeGraph::AncestorsOf(std::string_view class_iri) const {
  auto id = FindWithRole(class_iri, kClass);
  if (!id) return {};
  std::vector<std::string> out;
  for (NodeId a : class_ancestors_[*id]) out.push_back(iris_[a]);
  return out;
}

std::vector<std::string> KnowledgeGraph::ParentsOf(std::string_view class_iri) const {
  auto id = FindWithRole(class_iri, kClass);
  if (!id) return {};
  std::vector<std::string> out;
  for (NodeId p : parents_[*id]) out.push_back(iris_[p]);
  std::sort(out.begin(), out.end());
  return out;
}

int KnowledgeGraph::Depth(std::string_view class_iri) const {
  auto id = FindWithRole(class_iri, kClass);
  return id ? depth_[*id] : -1;
}

bool KnowledgeGraph::IsStrictAncestor(std::string_view ancestor,
                                      std::string_view cls) const {
  auto a = FindWithRole(ancestor, kClass);
  auto c = FindWithRole(cls, kClass);
  if (!a || !c) return false;
  const auto& list = class_ancestors_[*c];
  return std::find(list.begin(), list.end(), *a) != list.end();
}

std::string KnowledgeGraph::Canonicalize(std::string_view iri) const {
  auto id = Find(iri);
  if (!id) return std::string(iri);
  std::unordered_set<NodeId> seen{*id};
  NodeId current = *id;
  for (auto it = redirects_.find(current); it != redirects_.end();
       it = redirects_.find(current)) {
    if (!seen.insert(it->second).second) break;
    current = it->second;
  }
  return iris_[current];
}

std::vector<std::string> KnowledgeGraph::SearchLabel(std::string_view query,
                                                     size_t limit) const {
  std::vector<std::string> out;
  for (auto& hit : label_index_.Search(query, limit)) out.push_back(std::move(hit.entity));
  return out;
}

}  // namespace tabmatch
