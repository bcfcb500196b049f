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

#ifndef TABMATCH_TESTS_SUPPORT_FIXTURES_H_
#define TABMATCH_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "harness/targets.h"
#include "kg/ntriples.h"

namespace tabmatch::testing {

inline constexpr const char* kDbo = "http://dbpedia.org/ontology/";
inline constexpr const char* kDbr = "http://dbpedia.org/resource/";
inline constexpr const char* kXsd = "http://www.w3.org/2001/XMLSchema#";

// Portable deterministic draws (mt19937_64 is fully specified; the standard
// distributions are not).
class Rng {
 public:
  explicit Rng(uint64_t seed);
  uint64_t Next();
  size_t Below(size_t n);  // uniform in [0, n)
  double Unit();           // uniform in [0, 1)
  bool Chance(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct FixtureTable {
  std::string id;
  std::vector<std::vector<std::string>> rows;  // row 0 is the header
};

struct Fixture {
  std::vector<Triple> triples;
  std::vector<FixtureTable> tables;
  TargetSet targets;
  std::vector<CeaAnswer> gold_cea;
  std::vector<CtaAnswer> gold_cta;  // exact class only
  std::vector<CpaAnswer> gold_cpa;
};

// Toy graph: 10 countries, 20 cities and 20 people; six classes on three
// levels (Place > PopulatedPlace > {City, Country}; Agent > Person); eight
// relations; ten tables built from its triples with full CEA/CTA/CPA gold.
Fixture MakeToyFixture();

// Every data cell independently receives one random character edit
// (insert, delete or substitute) with probability `p`.
Fixture Perturb(const Fixture& clean, double p, uint64_t seed);

// Fraction of CEA targets whose cell value is strictly closest (normalized
// Levenshtein on folded text) to a label of the gold entity, over all
// entity labels of the graph.
double NearestLabelOracle(const Fixture& fixture);

// Writes kg.nt, tables/<id>.csv, targets_{cea,cta,cpa}.csv and
// gold_{cea,cta,cpa}.csv into `dir`.
void WriteFixture(const Fixture& fixture, const std::string& dir);

// Random graph with exactly `n_triples` triples over a random class DAG,
// typed entities, entity-entity links and mixed literals.
std::vector<Triple> RandomGraph(size_t n_triples, uint64_t seed);

// A graph of `n_entities` uniquely labeled entities with types, links and
// numeric/textual attributes, plus one table of `rows` data rows and five
// columns derived from it (subject, linked entity, number, text, number).
struct ScaleFixture {
  std::vector<Triple> triples;
  FixtureTable table;
  TargetSet targets;
};
ScaleFixture MakeScaleFixture(size_t n_entities, size_t rows, uint64_t seed);

std::string ToCsv(const FixtureTable& table);
std::string ToNTriples(const std::vector<Triple>& triples);

Term Iri(std::string iri);
Term Literal(std::string value, std::string datatype = "", std::string language = "");

}  // namespace tabmatch::testing

#endif  // TABMATCH_TESTS_SUPPORT_FIXTURES_H_
