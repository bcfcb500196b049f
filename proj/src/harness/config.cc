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

#include "harness/config.h"

#include <charconv>
#include <map>
#include <optional>
#include <regex>
#include <variant>

#include <json.hpp>

#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {
namespace {

using Value = std::variant<std::string, double, bool>;

struct Entry {
  Value value;
  size_t line;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string Where(const std::string& origin, size_t line) {
  return origin + ":" + std::to_string(line) + ": ";
}

// Parses the value part of a line; trailing comments are allowed.
Value ParseValue(std::string_view text, const std::string& where) {
  text = Trim(text);
  if (text.empty()) throw ConfigError(where + "missing value");
  if (text.front() == '"' || text.front() == '\'') {
    const char quote = text.front();
    std::string out;
    size_t i = 1;
    for (; i < text.size() && text[i] != quote; ++i) {
      char c = text[i];
      if (quote == '"' && c == '\\' && i + 1 < text.size()) {
        const char e = text[++i];
        switch (e) {
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          case '"': c = '"'; break;
          case '\\': c = '\\'; break;
          default: throw ConfigError(where + "unsupported escape \\" + std::string(1, e));
        }
      }
      out.push_back(c);
    }
    if (i >= text.size()) throw ConfigError(where + "unterminated string");
    const std::string_view rest = Trim(text.substr(i + 1));
    if (!rest.empty() && rest.front() != '#') throw ConfigError(where + "trailing characters");
    return out;
  }
  if (const size_t hash = text.find('#'); hash != std::string_view::npos) {
    text = Trim(text.substr(0, hash));
  }
  if (text == "true") return true;
  if (text == "false") return false;
  std::string cleaned;
  for (char c : text) {
    if (c != '_') cleaned.push_back(c);
  }
  double number = 0;
  const char* begin = cleaned.data();
  if (!cleaned.empty() && cleaned.front() == '+') ++begin;
  const char* end = cleaned.data() + cleaned.size();
  auto [ptr, ec] = std::from_chars(begin, end, number);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(where + "cannot parse value '" + std::string(text) + "'");
  }
  return number;
}

class Reader {
 public:
  Reader(std::map<std::string, Entry> entries, std::string origin)
      : entries_(std::move(entries)), origin_(std::move(origin)) {}

  std::optional<std::string> String(const std::string& key) {
    auto e = Take(key);
    if (!e) return std::nullopt;
    if (auto* s = std::get_if<std::string>(&e->value)) return *s;
    throw ConfigError(Where(origin_, e->line) + key + " must be a string");
  }
  std::optional<double> Number(const std::string& key) {
    auto e = Take(key);
    if (!e) return std::nullopt;
    if (auto* d = std::get_if<double>(&e->value)) return *d;
    throw ConfigError(Where(origin_, e->line) + key + " must be a number");
  }
  std::optional<size_t> Count(const std::string& key) {
    auto e = Peek(key);
    auto d = Number(key);
    if (!d) return std::nullopt;
    if (*d < 0 || *d != static_cast<double>(static_cast<uint64_t>(*d))) {
      throw ConfigError(Where(origin_, e->line) + key + " must be a non-negative integer");
    }
    return static_cast<size_t>(*d);
  }
  std::optional<bool> Bool(const std::string& key) {
    auto e = Take(key);
    if (!e) return std::nullopt;
    if (auto* b = std::get_if<bool>(&e->value)) return *b;
    throw ConfigError(Where(origin_, e->line) + key + " must be true or false");
  }
  std::vector<std::string> ServiceNames() const {
    std::vector<std::string> names;
    for (const auto& [key, e] : entries_) {
      if (key.rfind("services.", 0) != 0) continue;
      const size_t dot = key.find('.', 9);
      if (dot == std::string::npos) continue;
      std::string name = key.substr(9, dot - 9);
      if (names.empty() || names.back() != name) names.push_back(std::move(name));
    }
    return names;
  }
  void RejectLeftovers() const {
    if (entries_.empty()) return;
    const auto& [key, e] = *entries_.begin();
    throw ConfigError(Where(origin_, e.line) + "unknown key '" + key + "'");
  }
  const std::string& origin() const { return origin_; }

 private:
  std::optional<Entry> Peek(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<Entry> Take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    Entry e = std::move(it->second);
    entries_.erase(it);
    return e;
  }

  std::map<std::string, Entry> entries_;
  std::string origin_;
};

}  // namespace

RunConfig RunConfig::Parse(std::string_view content, const std::string& origin) {
  static const std::regex kKey(R"(^[A-Za-z0-9_-]+(\.[A-Za-z0-9_-]+)*$)");
  std::map<std::string, Entry> entries;
  std::string section;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= content.size()) {
    size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = Trim(content.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string where = Where(origin, line_no);
    if (line.front() == '[') {
      const size_t close = line.find(']');
      if (close == std::string_view::npos) throw ConfigError(where + "unterminated section");
      section = std::string(Trim(line.substr(1, close - 1)));
      if (!std::regex_match(section, kKey)) throw ConfigError(where + "bad section name");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key = value");
    std::string key(Trim(line.substr(0, eq)));
    if (!std::regex_match(key, kKey)) throw ConfigError(where + "bad key '" + key + "'");
    if (!section.empty()) key = section + "." + key;
    Value value = ParseValue(line.substr(eq + 1), where);
    if (!entries.emplace(key, Entry{std::move(value), line_no}).second) {
      throw ConfigError(where + "duplicate key '" + key + "'");
    }
  }

  Reader r(std::move(entries), origin);
  RunConfig cfg;
  if (auto v = r.Count("alpha")) cfg.alpha = *v;
  if (auto v = r.Number("beta")) cfg.beta = *v;
  for (int k = 1; k <= 10; ++k) {
    if (auto v = r.Number("weights.w" + std::to_string(k))) cfg.weights[k - 1] = *v;
  }
  if (auto v = r.String("aggregation")) {
    if (*v == "sum") cfg.aggregation = Aggregation::kSum;
    else if (*v == "product") cfg.aggregation = Aggregation::kProduct;
    else throw ConfigError(origin + ": aggregation must be sum or product");
  }
  if (auto v = r.String("pair_aggregation")) {
    if (*v == "max") cfg.pair_aggregation = PairAggregation::kMax;
    else if (*v == "sum") cfg.pair_aggregation = PairAggregation::kSum;
    else throw ConfigError(origin + ": pair_aggregation must be max or sum");
  }
  if (auto v = r.String("s8_source")) {
    if (*v == "lookup") cfg.s8_source = S8Source::kLookup;
    else if (*v == "fused") cfg.s8_source = S8Source::kFused;
    else throw ConfigError(origin + ": s8_source must be lookup or fused");
  }
  if (auto v = r.String("vote_weighting")) {
    if (*v == "uniform") cfg.vote_weighting = VoteWeighting::kUniform;
    else if (*v == "probability") cfg.vote_weighting = VoteWeighting::kProbability;
    else throw ConfigError(origin + ": vote_weighting must be uniform or probability");
  }
  if (auto v = r.String("cache_dir")) cfg.cache_dir = *v;
  if (auto v = r.Count("seed")) cfg.seed = *v;
  if (auto v = r.Count("workers")) cfg.workers = *v;
  if (auto v = r.String("gazetteer")) cfg.gazetteer = *v;
  if (auto v = r.String("ner_class_map")) cfg.ner_class_map = *v;
  for (const std::string& name : r.ServiceNames()) {
    const std::string prefix = "services." + name + ".";
    ServiceConfig svc;
    svc.name = name;
    svc.type = r.String(prefix + "type").value_or(name == "local" ? "local" : "");
    if (auto v = r.String(prefix + "endpoint")) svc.endpoint = *v;
    if (auto v = r.Number(prefix + "timeout")) svc.timeout_seconds = *v;
    if (auto v = r.Bool(prefix + "enabled")) svc.enabled = *v;
    if (auto v = r.String(prefix + "entity_prefix")) svc.entity_prefix = *v;
    if (svc.type == "local") {
      cfg.local_service = svc.enabled;
      continue;
    }
    cfg.services.push_back(std::move(svc));
  }
  r.RejectLeftovers();
  cfg.Validate();
  return cfg;
}

RunConfig RunConfig::FromFile(const std::string& path) {
  return Parse(ReadFile(path), path);
}

void RunConfig::Validate() const {
  if (alpha < 1) throw ConfigError("alpha must be at least 1");
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("beta must lie in [0, 1]");
  for (size_t k = 0; k < weights.size(); ++k) {
    if (!(weights[k] >= 0.0)) {
      throw ConfigError("weights.w" + std::to_string(k + 1) + " must be non-negative");
    }
  }
  auto positive = [&](int from, int to) {
    for (int k = from; k <= to; ++k) {
      if (w(k) > 0.0) return true;
    }
    return false;
  };
  if (!positive(1, 4)) throw ConfigError("weights.w1..w4 are all zero");
  if (!positive(5, 6)) throw ConfigError("weights.w5..w6 are both zero");
  if (!positive(7, 10)) throw ConfigError("weights.w7..w10 are all zero");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  for (const ServiceConfig& s : services) {
    if (s.type != "sparql" && s.type != "lookup-api" && s.type != "wiki-api") {
      throw ConfigError("services." + s.name + ".type must be local, sparql, lookup-api or wiki-api");
    }
    if (s.enabled && s.endpoint.empty()) {
      throw ConfigError("services." + s.name + ".endpoint is required");
    }
    if (!(s.timeout_seconds > 0.0)) {
      throw ConfigError("services." + s.name + ".timeout must be positive");
    }
  }
}

std::string RunConfig::ToJson() const {
  nlohmann::json j;
  j["alpha"] = alpha;
  j["beta"] = beta;
  for (int k = 1; k <= 10; ++k) j["weights"]["w" + std::to_string(k)] = w(k);
  j["aggregation"] = aggregation == Aggregation::kSum ? "sum" : "product";
  j["pair_aggregation"] = pair_aggregation == PairAggregation::kMax ? "max" : "sum";
  j["s8_source"] = s8_source == S8Source::kLookup ? "lookup" : "fused";
  j["vote_weighting"] = vote_weighting == VoteWeighting::kUniform ? "uniform" : "probability";
  j["services"] = nlohmann::json::array();
  if (local_service) j["services"].push_back({{"name", "local"}, {"type", "local"}});
  for (const ServiceConfig& s : services) {
    j["services"].push_back({{"name", s.name},
                             {"type", s.type},
                             {"endpoint", s.endpoint},
                             {"timeout", s.timeout_seconds},
                             {"enabled", s.enabled}});
  }
  j["cache_dir"] = cache_dir;
  j["seed"] = seed;
  j["workers"] = workers;
  return j.dump();
}

}  // namespace tabmatch
