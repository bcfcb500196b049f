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

#include "support/fixtures.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>

#include "text/similarity.h"
#include "util/csv.h"

namespace tabmatch::testing {
namespace {

constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr const char* kSubClass = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
constexpr const char* kLabel = "http://www.w3.org/2000/01/rdf-schema#label";

std::string Dbo(const std::string& local) { return std::string(kDbo) + local; }
std::string Dbr(const std::string& label) {
  std::string id = label;
  std::replace(id.begin(), id.end(), ' ', '_');
  return std::string(kDbr) + id;
}

struct Country {
  const char* name;
  const char* demonym;
  const char* population;
  const char* area;
};

struct City {
  const char* name;
  size_t country;
  const char* population;
  const char* area;
};

struct Person {
  const char* name;
  size_t city;
  const char* year;
};

const std::vector<Country>& Countries() {
  static const std::vector<Country> v = {
      {"Japan", "Japanese", "125700000", "377975"},
      {"France", "French", "68000000", "643801"},
      {"Germany", "German", "84300000", "357588"},
      {"Italy", "Italian", "58900000", "301340"},
      {"Spain", "Spanish", "48300000", "505990"},
      {"Argentina", "Argentine", "46200000", "2780400"},
      {"Canada", "Canadian", "40100000", "9984670"},
      {"Egypt", "Egyptian", "105000000", "1002450"},
      {"Kenya", "Kenyan", "54000000", "580367"},
      {"Norway", "Norwegian", "5500000", "385207"},
  };
  return v;
}

// Cities 2k are capitals of country k, cities 2k+1 are second cities.
const std::vector<City>& Cities() {
  static const std::vector<City> v = {
      {"Tokyo", 0, "13960000", "2194.07"},    {"Osaka", 0, "2750000", "225.21"},
      {"Paris", 1, "2100000", "105.4"},       {"Lyon", 1, "522000", "47.87"},
      {"Berlin", 2, "3850000", "891.7"},      {"Munich", 2, "1510000", "310.43"},
      {"Rome", 3, "2760000", "1285.0"},       {"Milan", 3, "1370000", "181.76"},
      {"Madrid", 4, "3330000", "604.3"},      {"Seville", 4, "684000", "140.8"},
      {"Buenos Aires", 5, "3120000", "203.0"}, {"Cordoba", 5, "1390000", "576.0"},
      {"Ottawa", 6, "1020000", "2790.3"},     {"Toronto", 6, "2790000", "630.2"},
      {"Cairo", 7, "10100000", "3085.1"},     {"Alexandria", 7, "5380000", "2300.0"},
      {"Nairobi", 8, "4400000", "696.1"},     {"Mombasa", 8, "1200000", "294.7"},
      {"Oslo", 9, "709000", "454.0"},         {"Bergen", 9, "286000", "465.3"},
  };
  return v;
}

const std::vector<Person>& People() {
  static const std::vector<Person> v = {
      {"Akira Tanaka", 0, "1948"},     {"Yuki Morimoto", 1, "1975"},
      {"Claire Dubois", 2, "1962"},    {"Julien Marchand", 3, "1981"},
      {"Hanna Vogel", 4, "1955"},      {"Lukas Brenner", 5, "1990"},
      {"Giulia Ferraro", 6, "1969"},   {"Marco Bellini", 7, "1944"},
      {"Lucia Navarro", 8, "1987"},    {"Diego Castillo", 9, "1958"},
      {"Rafael Moreno", 10, "1972"},   {"Beatriz Quiroga", 11, "1966"},
      {"Ethan Caldwell", 12, "1983"},  {"Olivia Thornton", 13, "1951"},
      {"Omar Haddad", 14, "1939"},     {"Nadia Farouk", 15, "1978"},
      {"Wanjiru Kamau", 16, "1985"},   {"Daniel Otieno", 17, "1960"},
      {"Ingrid Solberg", 18, "1947"},  {"Henrik Dahl", 19, "1993"},
  };
  return v;
}

std::string WithCommas(const std::string& digits) {
  std::string out;
  const size_t n = digits.size();
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

// Picks `k` distinct indices below `n` in a seeded order.
std::vector<size_t> Pick(size_t n, size_t k, Rng& rng) {
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  for (size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[rng.Below(i)]);
  idx.resize(std::min(k, n));
  return idx;
}

class FixtureBuilder {
 public:
  explicit FixtureBuilder(Fixture* f) : f_(f) {}

  // `entity_cols` maps column -> gold class (empty string: no CTA target).
  void Add(std::string id, std::vector<std::string> header,
           std::vector<std::vector<std::string>> data,
           std::vector<std::vector<std::string>> gold_entities,
           std::map<size_t, std::string> cta,
           std::vector<std::tuple<size_t, size_t, std::string>> cpa) {
    FixtureTable t{id, {std::move(header)}};
    for (auto& row : data) t.rows.push_back(std::move(row));
    for (size_t r = 0; r < gold_entities.size(); ++r) {
      for (size_t c = 0; c < gold_entities[r].size(); ++c) {
        if (gold_entities[r][c].empty()) continue;
        CeaTarget target{id, c, r + 1};
        f_->targets.cea.push_back(target);
        f_->gold_cea.push_back({target, gold_entities[r][c]});
      }
    }
    for (const auto& [col, cls] : cta) {
      f_->targets.cta.push_back({id, col});
      f_->gold_cta.push_back({{id, col}, {cls}});
    }
    for (const auto& [h, tl, rel] : cpa) {
      f_->targets.cpa.push_back({id, h, tl});
      f_->gold_cpa.push_back({{id, h, tl}, rel});
    }
    f_->tables.push_back(std::move(t));
  }

 private:
  Fixture* f_;
};

}  // namespace

Rng::Rng(uint64_t seed) : engine_(seed) {}
uint64_t Rng::Next() { return engine_(); }
size_t Rng::Below(size_t n) { return n == 0 ? 0 : static_cast<size_t>(Next() % n); }
double Rng::Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

Term Iri(std::string iri) {
  Term t;
  t.kind = Term::Kind::kIri;
  t.value = std::move(iri);
  return t;
}

Term Literal(std::string value, std::string datatype, std::string language) {
  Term t;
  t.kind = Term::Kind::kLiteral;
  t.value = std::move(value);
  t.datatype = std::move(datatype);
  t.language = std::move(language);
  return t;
}

Fixture MakeToyFixture() {
  Fixture f;
  auto add = [&](const std::string& s, const std::string& p, Term o) {
    f.triples.push_back({Iri(s), p, std::move(o)});
  };
  const std::string xsd = kXsd;
  // Classes.
  const std::vector<std::pair<std::string, std::string>> hierarchy = {
      {"PopulatedPlace", "Place"}, {"City", "PopulatedPlace"},
      {"Country", "PopulatedPlace"}, {"Person", "Agent"}};
  for (const auto& [child, parent] : hierarchy) add(Dbo(child), kSubClass, Iri(Dbo(parent)));
  for (const char* cls : {"Place", "PopulatedPlace", "City", "Country", "Agent", "Person"}) {
    std::string label;
    for (const char* c = cls; *c; ++c) {
      if (c != cls && std::isupper(static_cast<unsigned char>(*c))) label.push_back(' ');
      label.push_back(*c);
    }
    add(Dbo(cls), kLabel, Literal(label, "", "en"));
  }
  for (const Country& c : Countries()) {
    const std::string e = Dbr(c.name);
    add(e, kRdfType, Iri(Dbo("Country")));
    add(e, kLabel, Literal(c.name, "", "en"));
    add(e, Dbo("demonym"), Literal(c.demonym, "", "en"));
    add(e, Dbo("populationTotal"), Literal(c.population, xsd + "nonNegativeInteger"));
    add(e, Dbo("areaTotal"), Literal(c.area, xsd + "double"));
  }
  for (size_t i = 0; i < Countries().size(); ++i) {
    add(Dbr(Countries()[i].name), Dbo("capital"), Iri(Dbr(Cities()[2 * i].name)));
  }
  for (const City& c : Cities()) {
    const std::string e = Dbr(c.name);
    add(e, kRdfType, Iri(Dbo("City")));
    add(e, kLabel, Literal(c.name, "", "en"));
    add(e, Dbo("country"), Iri(Dbr(Countries()[c.country].name)));
    add(e, Dbo("populationTotal"), Literal(c.population, xsd + "nonNegativeInteger"));
    add(e, Dbo("areaTotal"), Literal(c.area, xsd + "double"));
  }
  for (const Person& p : People()) {
    const std::string e = Dbr(p.name);
    add(e, kRdfType, Iri(Dbo("Person")));
    add(e, kLabel, Literal(p.name, "", "en"));
    add(e, Dbo("birthPlace"), Iri(Dbr(Cities()[p.city].name)));
    add(e, Dbo("nationality"), Iri(Dbr(Countries()[Cities()[p.city].country].name)));
    add(e, Dbo("birthYear"), Literal(p.year, xsd + "gYear"));
  }

  Rng rng(7);
  FixtureBuilder b(&f);
  const auto& countries = Countries();
  const auto& cities = Cities();
  const auto& people = People();
  auto country_of = [&](const City& c) -> const Country& { return countries[c.country]; };

  {  // Cities with their country and population.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(cities.size(), 20, rng)) {
      const City& c = cities[i];
      data.push_back({c.name, country_of(c).name, c.population});
      gold.push_back({Dbr(c.name), Dbr(country_of(c).name), ""});
    }
    b.Add("t01_cities", {"City", "Country", "Population"}, data, gold,
          {{0, Dbo("City")}, {1, Dbo("Country")}},
          {{0, 1, Dbo("country")}, {0, 2, Dbo("populationTotal")}});
  }
  {  // Countries with capital, demonym and area.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(countries.size(), 10, rng)) {
      const Country& c = countries[i];
      data.push_back({c.name, cities[2 * i].name, c.demonym, c.area});
      gold.push_back({Dbr(c.name), Dbr(cities[2 * i].name), "", ""});
    }
    b.Add("t02_countries", {"Country", "Capital", "Demonym", "Area"}, data, gold,
          {{0, Dbo("Country")}, {1, Dbo("City")}},
          {{0, 1, Dbo("capital")}, {0, 2, Dbo("demonym")}, {0, 3, Dbo("areaTotal")}});
  }
  {  // People with birth place and year.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(people.size(), 20, rng)) {
      const Person& p = people[i];
      data.push_back({p.name, cities[p.city].name, p.year});
      gold.push_back({Dbr(p.name), Dbr(cities[p.city].name), ""});
    }
    b.Add("t03_people", {"Name", "Birth place", "Born"}, data, gold,
          {{0, Dbo("Person")}, {1, Dbo("City")}},
          {{0, 1, Dbo("birthPlace")}, {0, 2, Dbo("birthYear")}});
  }
  {  // People and nationality.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(people.size(), 12, rng)) {
      const Person& p = people[i];
      const Country& c = country_of(cities[p.city]);
      data.push_back({p.name, c.name});
      gold.push_back({Dbr(p.name), Dbr(c.name)});
    }
    b.Add("t04_nationality", {"Person", "Nationality"}, data, gold,
          {{0, Dbo("Person")}, {1, Dbo("Country")}}, {{0, 1, Dbo("nationality")}});
  }
  {  // Subject column in the middle.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(cities.size(), 14, rng)) {
      const City& c = cities[i];
      data.push_back({c.area, c.name, country_of(c).name});
      gold.push_back({"", Dbr(c.name), Dbr(country_of(c).name)});
    }
    b.Add("t05_city_area", {"Area (km2)", "City", "Country"}, data, gold,
          {{1, Dbo("City")}, {2, Dbo("Country")}},
          {{1, 0, Dbo("areaTotal")}, {1, 2, Dbo("country")}});
  }
  {  // Country figures with grouped digits.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(countries.size(), 10, rng)) {
      const Country& c = countries[i];
      data.push_back({c.name, WithCommas(c.population), WithCommas(c.area)});
      gold.push_back({Dbr(c.name), "", ""});
    }
    b.Add("t06_country_figures", {"Name", "Population", "Area"}, data, gold,
          {{0, Dbo("Country")}},
          {{0, 1, Dbo("populationTotal")}, {0, 2, Dbo("areaTotal")}});
  }
  {  // Capitals.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(countries.size(), 10, rng)) {
      const City& c = cities[2 * i];
      data.push_back({c.name, country_of(c).name, c.population});
      gold.push_back({Dbr(c.name), Dbr(country_of(c).name), ""});
    }
    b.Add("t07_capitals", {"Capital", "Country", "Inhabitants"}, data, gold,
          {{0, Dbo("City")}, {1, Dbo("Country")}},
          {{0, 1, Dbo("country")}, {0, 2, Dbo("populationTotal")}});
  }
  {  // People with country and city.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(people.size(), 15, rng)) {
      const Person& p = people[i];
      const City& c = cities[p.city];
      data.push_back({p.name, country_of(c).name, c.name});
      gold.push_back({Dbr(p.name), Dbr(country_of(c).name), Dbr(c.name)});
    }
    b.Add("t08_people_places", {"Name", "Country", "City"}, data, gold,
          {{0, Dbo("Person")}, {1, Dbo("Country")}, {2, Dbo("City")}},
          {{0, 1, Dbo("nationality")}, {0, 2, Dbo("birthPlace")}});
  }
  {  // Countries, population and capital.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(countries.size(), 10, rng)) {
      const Country& c = countries[i];
      data.push_back({c.name, c.population, cities[2 * i].name});
      gold.push_back({Dbr(c.name), "", Dbr(cities[2 * i].name)});
    }
    b.Add("t09_country_capital", {"Country", "Population", "Capital"}, data, gold,
          {{0, Dbo("Country")}, {2, Dbo("City")}},
          {{0, 1, Dbo("populationTotal")}, {0, 2, Dbo("capital")}});
  }
  {  // Second cities.
    std::vector<std::vector<std::string>> data, gold;
    for (size_t i : Pick(countries.size(), 10, rng)) {
      const City& c = cities[2 * i + 1];
      data.push_back({c.name, c.population, c.area, country_of(c).name});
      gold.push_back({Dbr(c.name), "", "", Dbr(country_of(c).name)});
    }
    b.Add("t10_second_cities", {"City", "Population", "Area", "Country"}, data, gold,
          {{0, Dbo("City")}, {3, Dbo("Country")}},
          {{0, 1, Dbo("populationTotal")}, {0, 2, Dbo("areaTotal")}, {0, 3, Dbo("country")}});
  }
  return f;
}

Fixture Perturb(const Fixture& clean, double p, uint64_t seed) {
  Fixture f = clean;
  Rng rng(seed);
  static constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyz";
  for (FixtureTable& t : f.tables) {
    for (size_t r = 1; r < t.rows.size(); ++r) {
      for (std::string& cell : t.rows[r]) {
        if (!rng.Chance(p) || cell.empty()) continue;
        const char c = kAlphabet[rng.Below(26)];
        size_t op = rng.Below(3);
        if (cell.size() < 2 && op == 1) op = 2;
        switch (op) {
          case 0:
            cell.insert(cell.begin() + static_cast<long>(rng.Below(cell.size() + 1)), c);
            break;
          case 1:
            cell.erase(rng.Below(cell.size()), 1);
            break;
          default: {
            const size_t pos = rng.Below(cell.size());
            cell[pos] = cell[pos] == c ? kAlphabet[(c - 'a' + 1) % 26] : c;
          }
        }
      }
    }
  }
  return f;
}

double NearestLabelOracle(const Fixture& fixture) {
  std::vector<std::pair<std::string, std::string>> labels;  // (label, entity)
  std::set<std::string> classes;
  for (const Triple& t : fixture.triples) {
    if (t.predicate == kRdfType) classes.insert(t.object.value);
  }
  for (const Triple& t : fixture.triples) {
    if (t.predicate == kLabel && t.subject.value.rfind(kDbr, 0) == 0) {
      labels.emplace_back(t.object.value, t.subject.value);
    }
  }
  std::map<std::string, const FixtureTable*> tables;
  for (const FixtureTable& t : fixture.tables) tables[t.id] = &t;
  size_t correct = 0;
  for (const CeaAnswer& gold : fixture.gold_cea) {
    const FixtureTable& t = *tables.at(gold.target.table);
    const std::string& cell = t.rows[gold.target.row][gold.target.col];
    double best = -1.0;
    std::set<std::string> argmax;
    for (const auto& [label, entity] : labels) {
      const double s = LabelSimilarity(cell, label);
      if (s > best) {
        best = s;
        argmax = {entity};
      } else if (s == best) {
        argmax.insert(entity);
      }
    }
    if (argmax.size() == 1 && *argmax.begin() == gold.entity) ++correct;
  }
  return fixture.gold_cea.empty()
             ? 0.0
             : static_cast<double>(correct) / static_cast<double>(fixture.gold_cea.size());
}

std::string ToCsv(const FixtureTable& table) {
  std::string out;
  for (const auto& row : table.rows) out += CsvLine(row) + "\n";
  return out;
}

std::string ToNTriples(const std::vector<Triple>& triples) {
  std::string out;
  for (const Triple& t : triples) out += FormatTriple(t) + "\n";
  return out;
}

void WriteFixture(const Fixture& f, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "tables");
  WriteFile((fs::path(dir) / "kg.nt").string(), ToNTriples(f.triples));
  for (const FixtureTable& t : f.tables) {
    WriteFile((fs::path(dir) / "tables" / (t.id + ".csv")).string(), ToCsv(t));
  }
  std::string cea, cta, cpa, gcea, gcta, gcpa;
  for (const auto& t : f.targets.cea) {
    cea += CsvLine({t.table, std::to_string(t.col), std::to_string(t.row)}) + "\n";
  }
  for (const auto& t : f.targets.cta) cta += CsvLine({t.table, std::to_string(t.col)}) + "\n";
  for (const auto& t : f.targets.cpa) {
    cpa += CsvLine({t.table, std::to_string(t.head), std::to_string(t.tail)}) + "\n";
  }
  for (const auto& a : f.gold_cea) {
    gcea += CsvLine({a.target.table, std::to_string(a.target.col), std::to_string(a.target.row),
                     a.entity}) + "\n";
  }
  for (const auto& a : f.gold_cta) {
    gcta += CsvLine({a.target.table, std::to_string(a.target.col), a.classes.front()}) + "\n";
  }
  for (const auto& a : f.gold_cpa) {
    gcpa += CsvLine({a.target.table, std::to_string(a.target.head),
                     std::to_string(a.target.tail), a.relation}) + "\n";
  }
  WriteFile((fs::path(dir) / "targets_cea.csv").string(), cea);
  WriteFile((fs::path(dir) / "targets_cta.csv").string(), cta);
  WriteFile((fs::path(dir) / "targets_cpa.csv").string(), cpa);
  WriteFile((fs::path(dir) / "gold_cea.csv").string(), gcea);
  WriteFile((fs::path(dir) / "gold_cta.csv").string(), gcta);
  WriteFile((fs::path(dir) / "gold_cpa.csv").string(), gcpa);
}

std::vector<Triple> RandomGraph(size_t n_triples, uint64_t seed) {
  Rng rng(seed);
  const std::string ex = "http://example.org/";
  const size_t n_classes = 30, n_relations = 15, n_entities = 1500;
  std::vector<Triple> out;
  out.reserve(n_triples);
  auto cls = [&](size_t i) { return ex + "class/C" + std::to_string(i); };
  auto rel = [&](size_t i) { return ex + "rel/r" + std::to_string(i); };
  auto ent = [&](size_t i) { return ex + "entity/e" + std::to_string(i); };
  // Class DAG: parents always have smaller indices.
  for (size_t i = 1; i < n_classes && out.size() < n_triples; ++i) {
    if (rng.Chance(0.85)) out.push_back({Iri(cls(i)), kSubClass, Iri(cls(rng.Below(i)))});
    if (i > 3 && rng.Chance(0.2)) out.push_back({Iri(cls(i)), kSubClass, Iri(cls(rng.Below(i)))});
  }
  const std::string xsd = kXsd;
  while (out.size() < n_triples) {
    const size_t e = rng.Below(n_entities);
    const double roll = rng.Unit();
    if (roll < 0.15) {
      out.push_back({Iri(ent(e)), kRdfType, Iri(cls(rng.Below(n_classes)))});
    } else if (roll < 0.25) {
      out.push_back({Iri(ent(e)), kLabel, Literal("label " + std::to_string(e), "", "en")});
    } else if (roll < 0.65) {
      out.push_back({Iri(ent(e)), rel(rng.Below(n_relations)), Iri(ent(rng.Below(n_entities)))});
    } else {
      const size_t r = rng.Below(n_relations);
      const size_t kind = rng.Below(5);
      const std::string number = std::to_string(rng.Below(100000));
      Term o;
      switch (kind) {
        case 0: o = Literal(number, xsd + "integer"); break;
        case 1: o = Literal(number + ".5", xsd + "double"); break;
        case 2: o = Literal(number); break;
        case 3: o = Literal("text " + number, "", "en"); break;
        default: o = Literal(number, xsd + "gYear"); break;
      }
      out.push_back({Iri(ent(e)), rel(r), std::move(o)});
    }
  }
  return out;
}

ScaleFixture MakeScaleFixture(size_t n_entities, size_t rows, uint64_t seed) {
  Rng rng(seed);
  static constexpr const char* kSyllables[] = {
      "ka", "lo", "mi", "ra", "ne", "to", "su", "vi", "da", "pe", "zo", "ru",
      "ha", "qi", "bo", "le", "fa", "xu", "wi", "go", "mo", "ti", "ny", "se"};
  const size_t n_syl = sizeof(kSyllables) / sizeof(kSyllables[0]);
  std::set<std::string> used;
  std::vector<std::string> names;
  names.reserve(n_entities);
  while (names.size() < n_entities) {
    std::string name;
    const size_t parts = 3 + rng.Below(3);
    for (size_t i = 0; i < parts; ++i) name += kSyllables[rng.Below(n_syl)];
    name[0] = static_cast<char>(name[0] - 'a' + 'A');
    if (used.insert(name).second) names.push_back(name);
  }
  const std::string ex = "http://example.org/";
  const std::string xsd = kXsd;
  ScaleFixture s;
  const size_t n_classes = 12;
  for (size_t c = 1; c < n_classes; ++c) {
    s.triples.push_back({Iri(ex + "class/K" + std::to_string(c)), kSubClass,
                         Iri(ex + "class/K" + std::to_string((c - 1) / 3))});
  }
  std::vector<size_t> partner(n_entities);
  for (size_t i = 0; i < n_entities; ++i) {
    const std::string e = ex + "entity/" + names[i];
    s.triples.push_back({Iri(e), kLabel, Literal(names[i], "", "en")});
    s.triples.push_back(
        {Iri(e), kRdfType, Iri(ex + "class/K" + std::to_string(1 + rng.Below(n_classes - 1)))});
    partner[i] = rng.Below(n_entities);
    s.triples.push_back({Iri(e), ex + "rel/link" + std::to_string(i % 4),
                         Iri(ex + "entity/" + names[partner[i]])});
    s.triples.push_back({Iri(e), ex + "rel/size" + std::to_string(i % 3),
                         Literal(std::to_string(1000 + rng.Below(900000)), xsd + "integer")});
    s.triples.push_back({Iri(e), ex + "rel/code", Literal("C-" + std::to_string(i), "", "en")});
    s.triples.push_back({Iri(e), ex + "rel/year",
                         Literal(std::to_string(1800 + rng.Below(220)), xsd + "integer")});
  }
  s.table.id = "scale";
  s.table.rows.push_back({"Name", "Partner", "Size", "Code", "Year"});
  // Look the generated literals back up so the table agrees with the graph.
  std::map<std::string, std::map<std::string, std::string>> attrs;
  for (const Triple& t : s.triples) {
    if (t.object.is_literal()) attrs[t.subject.value][t.predicate] = t.object.value;
  }
  for (size_t i : Pick(n_entities, rows, rng)) {
    const std::string e = ex + "entity/" + names[i];
    s.table.rows.push_back({names[i], names[partner[i]],
                            attrs[e][ex + "rel/size" + std::to_string(i % 3)],
                            attrs[e][ex + "rel/code"], attrs[e][ex + "rel/year"]});
  }
  for (size_t r = 1; r < s.table.rows.size(); ++r) {
    s.targets.cea.push_back({"scale", 0, r});
    s.targets.cea.push_back({"scale", 1, r});
  }
  s.targets.cta.push_back({"scale", 0});
  s.targets.cta.push_back({"scale", 1});
  s.targets.cpa.push_back({"scale", 0, 1});
  s.targets.cpa.push_back({"scale", 0, 2});
  s.targets.cpa.push_back({"scale", 0, 4});
  return s;
}

}  // namespace tabmatch::testing
