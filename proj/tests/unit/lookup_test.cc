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

#include <gtest/gtest.h>

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <thread>

#include <unistd.h>

#include "kg/knowledge_graph.h"
#include "lookup/distribution.h"
#include "lookup/fusion.h"
#include "lookup/response_cache.h"
#include "lookup/service.h"
#include "support/fixtures.h"
#include "support/oracles.h"
#include "util/error.h"

namespace tabmatch {
namespace {

using testing::Rng;

TEST(DistributionTest, NormalizeDropsZerosAndSumsToOne) {
  const auto d = CandidateDistribution::Normalize({{"a", 3}, {"b", 1}, {"c", 0}});
  EXPECT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.Get("a"), 0.75);
  EXPECT_NEAR(d.Sum(), 1.0, 1e-12);
  EXPECT_EQ(d.Argmax(), "a");
  EXPECT_TRUE(CandidateDistribution::Normalize({}).empty());
  EXPECT_TRUE(CandidateDistribution::Normalize({{"a", 0}}).empty());
  EXPECT_THROW(CandidateDistribution::Normalize({{"a", -1}}), Error);
}

TEST(DistributionTest, ScalingInvariance) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    ScoreMap raw, scaled;
    const double c = 0.01 + rng.Unit() * 100;
    for (size_t k = 1 + rng.Below(10); k > 0; --k) {
      const std::string key = "e" + std::to_string(rng.Below(20));
      const double v = rng.Unit();
      raw[key] = v;
      scaled[key] = v * c;
    }
    const auto a = CandidateDistribution::Normalize(raw);
    const auto b = CandidateDistribution::Normalize(scaled);
    ASSERT_EQ(a.size(), b.size());
    for (const auto& [k, p] : a) EXPECT_NEAR(b.Get(k), p, 1e-12);
    EXPECT_EQ(a.Argmax(), b.Argmax());
  }
}

TEST(RankScoreTest, Examples) {
  std::vector<std::string> entities(100);
  for (size_t i = 0; i < entities.size(); ++i) entities[i] = "e" + std::to_string(i);
  const auto scores = RankScore({"s", "q", entities}, 100);
  EXPECT_EQ(scores.at("e0"), 100.0);
  EXPECT_EQ(scores.at("e99"), 1.0);
  EXPECT_TRUE(RankScore({"s", "q", {}}, 100).empty());
}

TEST(FusionTest, Examples) {
  const std::vector<ServiceRanking> one = {{"a", "q", {"e"}}};
  EXPECT_DOUBLE_EQ(FuseAndNormalize(one, 100).Get("e"), 1.0);

  const std::vector<ServiceRanking> two = {{"a", "q", {"e1", "e2"}}, {"b", "q", {"e2", "e1"}}};
  const auto d = FuseAndNormalize(two, 100);
  EXPECT_DOUBLE_EQ(d.Get("e1"), 0.5);
  EXPECT_DOUBLE_EQ(d.Get("e2"), 0.5);

  const std::vector<ServiceRanking> single = {{"a", "q", {"e1", "e2"}}};
  const auto s = FuseAndNormalize(single, 100);
  EXPECT_DOUBLE_EQ(s.Get("e1"), 100.0 / 199.0);
  EXPECT_DOUBLE_EQ(s.Get("e2"), 99.0 / 199.0);
}

TEST(FusionTest, MatchesOracleAndPermutationInvariant) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const size_t alpha = 1 + rng.Below(20);
    std::vector<ServiceRanking> rankings;
    std::vector<std::vector<std::string>> lists;
    for (size_t s = 1 + rng.Below(5); s > 0; --s) {
      std::vector<std::string> list;
      for (size_t k = rng.Below(alpha + 1); k > 0; --k) {
        const std::string e = "e" + std::to_string(rng.Below(30));
        if (std::find(list.begin(), list.end(), e) == list.end()) list.push_back(e);
      }
      lists.push_back(list);
      rankings.push_back({"s" + std::to_string(s), "q", list});
    }
    const auto fused = FuseAndNormalize(rankings, alpha);
    const auto oracle = testing::FusionOracle(lists, alpha);
    ASSERT_EQ(fused.items(), oracle);
    std::reverse(rankings.begin(), rankings.end());
    ASSERT_EQ(FuseAndNormalize(rankings, alpha).items(), fused.items());
  }
}

TEST(LanguageChoiceTest, CellOverridesTableWhenConfident) {
  EXPECT_EQ(ChooseLanguage({"de", 0.9, false}, {"en", 0.6, false}), "de");
  EXPECT_EQ(ChooseLanguage({"de", 0.3, false}, {"en", 0.6, false}), "en");
  EXPECT_EQ(ChooseLanguage({"en", 0.0, true}, {"fr", 0.4, false}), "fr");
}

class ThrowingService : public LookupService {
 public:
  const std::string& id() const override { return id_; }
  ServiceRanking Lookup(const LookupRequest&) const override { throw IoError("timeout"); }

 private:
  std::string id_ = "broken";
};

TEST(LocalServiceTest, ExactLabelFirstAndIsolation) {
  const auto f = testing::MakeToyFixture();
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples(f.triples);
  const LocalLookupService local(kg);
  const ThrowingService broken;
  const std::vector<const LookupService*> services = {&local, &broken};
  const auto rankings = QueryServices("Tokyo", "en", services, 100, &kg);
  ASSERT_EQ(rankings.size(), 2u);
  ASSERT_FALSE(rankings[0].entities.empty());
  EXPECT_EQ(rankings[0].entities[0], std::string(testing::kDbr) + "Tokyo");
  EXPECT_TRUE(rankings[1].entities.empty());

  const auto prefix = local.Lookup({"Toky", "en", 100});
  ASSERT_FALSE(prefix.entities.empty());
  EXPECT_EQ(prefix.entities[0], std::string(testing::kDbr) + "Tokyo");

  const std::vector<const LookupService*> only = {&local};
  for (const auto& r : QueryServices("O", "en", only, 1, &kg)) EXPECT_LE(r.entities.size(), 1u);
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("tabmatch_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string str() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(ResponseCacheTest, RoundTripKeyedByRequest) {
  TempDir dir;
  const ResponseCache cache(dir.str());
  const LookupRequest req{"Tokyo", "en", 10};
  EXPECT_FALSE(cache.Get("svc", req));
  cache.Put("svc", req, {"a", "b"});
  EXPECT_EQ(cache.Get("svc", req), (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(cache.Get("svc", {"Tokyo", "de", 10}));
  EXPECT_FALSE(cache.Get("other", req));
  EXPECT_FALSE(cache.Get("svc", {"Tokyo", "en", 11}));
}

// Minimal HTTP backends on a loopback port, one per remote adapter type.
class FakeServer {
 public:
  FakeServer() {
    server_.Get("/lookup", [](const httplib::Request& req, httplib::Response& res) {
      const std::string q = req.get_param_value("query");
      res.set_content(R"({"docs":[{"resource":["http://x/)" + q + R"("]},{"resource":["http://x/Other"]}]})",
                      "application/json");
    });
    server_.Get("/sparql", [](const httplib::Request& req, httplib::Response& res) {
      const bool ok = req.get_param_value("query").find("\"Tokyo\"@en") != std::string::npos;
      res.set_content(ok ? R"({"results":{"bindings":[{"s":{"value":"http://x/Tokyo"}}]}})"
                         : R"({"results":{"bindings":[]}})",
                      "application/json");
    });
    server_.Get("/w/api.php", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(
          R"({"query":{"pages":{"2":{"title":"Tokyo Tower","index":2},"1":{"title":"Tokyo","index":1}}}})",
          "application/json");
    });
    server_.Get("/slow", [](const httplib::Request&, httplib::Response& res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(1500));
      res.set_content("[]", "application/json");
    });
    server_.Get("/broken", [](const httplib::Request&, httplib::Response& res) {
      res.status = 500;
    });
    server_.Get("/html", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("<html>", "text/html");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeServer() {
    server_.stop();
    thread_.join();
  }
  std::string url(const std::string& path) const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

ServiceConfig Remote(const std::string& name, const std::string& type, const std::string& url,
                     double timeout = 5.0) {
  ServiceConfig c;
  c.name = name;
  c.type = type;
  c.endpoint = url;
  c.timeout_seconds = timeout;
  c.entity_prefix = "http://x/";
  return c;
}

TEST(RemoteServiceTest, AdaptersParseTheirFormats) {
  FakeServer server;
  auto lookup = MakeRemoteService(Remote("l", "lookup-api", server.url("/lookup")), nullptr);
  EXPECT_EQ(lookup->Lookup({"Tokyo", "en", 10}).entities,
            (std::vector<std::string>{"http://x/Tokyo", "http://x/Other"}));
  EXPECT_EQ(lookup->Lookup({"Tokyo", "en", 1}).entities.size(), 1u);

  auto sparql = MakeRemoteService(Remote("s", "sparql", server.url("/sparql")), nullptr);
  EXPECT_EQ(sparql->Lookup({"Tokyo", "en", 10}).entities,
            std::vector<std::string>{"http://x/Tokyo"});
  EXPECT_TRUE(sparql->Lookup({"Tokyo", "ja", 10}).entities.empty());

  auto wiki = MakeRemoteService(Remote("w", "wiki-api", server.url("/w/api.php")), nullptr);
  EXPECT_EQ(wiki->Lookup({"Tokyo", "en", 10}).entities,
            (std::vector<std::string>{"http://x/Tokyo", "http://x/Tokyo_Tower"}));
}

TEST(RemoteServiceTest, FailuresAreErrorsAndIsolated) {
  FakeServer server;
  auto broken = MakeRemoteService(Remote("b", "lookup-api", server.url("/broken")), nullptr);
  auto html = MakeRemoteService(Remote("h", "lookup-api", server.url("/html")), nullptr);
  auto slow = MakeRemoteService(Remote("t", "lookup-api", server.url("/slow"), 0.2), nullptr);
  auto good = MakeRemoteService(Remote("g", "lookup-api", server.url("/lookup")), nullptr);
  EXPECT_THROW(broken->Lookup({"x", "en", 5}), Error);
  EXPECT_THROW(html->Lookup({"x", "en", 5}), Error);
  EXPECT_THROW(slow->Lookup({"x", "en", 5}), Error);
  const std::vector<const LookupService*> services = {slow.get(), good.get()};
  const auto rankings = QueryServices("Tokyo", "en", services, 5);
  EXPECT_TRUE(rankings[0].entities.empty());
  EXPECT_EQ(rankings[1].entities.size(), 2u);
}

TEST(RemoteServiceTest, CacheServesRepeatRequests) {
  TempDir dir;
  const ResponseCache cache(dir.str());
  {
    FakeServer server;
    auto svc = MakeRemoteService(Remote("l", "lookup-api", server.url("/lookup")), &cache);
    svc->Lookup({"Tokyo", "en", 10});
  }
  // The server is gone; the answer must come from the cache.
  auto svc = MakeRemoteService(Remote("l", "lookup-api", "http://127.0.0.1:9/lookup"), &cache);
  EXPECT_EQ(svc->Lookup({"Tokyo", "en", 10}).entities.front(), "http://x/Tokyo");
}

TEST(RemoteServiceTest, ConfigErrors) {
  EXPECT_THROW(MakeRemoteService(Remote("x", "gopher", "http://h/"), nullptr), Error);
  EXPECT_THROW(MakeRemoteService(Remote("x", "sparql", "http://h/", 0), nullptr), Error);
  EXPECT_THROW(MakeRemoteService(Remote("x", "sparql", "not a url"), nullptr), Error);
}

}  // namespace
}  // namespace tabmatch
