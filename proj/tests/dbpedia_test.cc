// Copyright 2026 The Mosaic Authors.
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

#include <algorithm>
#include <chrono>
#include <thread>

#include "doctest.h"
#include "mosaic/dbpedia.h"
#include "mosaic/errors.h"
#include "mosaic/text_pipeline.h"
#include "support/fixtures.h"
#include "support/mock_sparql_server.h"

namespace mosaic {
namespace {

using namespace std::chrono_literals;
using testing::MockSparqlServer;

constexpr const char *kRes = "http://dbpedia.org/resource/";

EndpointConfig FastConfig(const MockSparqlServer &server) {
  EndpointConfig cfg;
  cfg.url = server.url();
  cfg.min_request_interval = 0ms;
  cfg.backoff_base = 5ms;
  cfg.timeout = 2000ms;
  return cfg;
}

std::vector<std::string> Labels(const MockSparqlServer &server) {
  std::vector<std::string> out;
  for (const auto &r : server.requests()) out.push_back(r.label.value_or("<unparsed>"));
  return out;
}

TEST_SUITE("dbpedia") {

TEST_CASE("normalize label") {
  CHECK(NormalizeLabel("NEW YORK") == "New york");
  CHECK(NormalizeLabel("manchester") == "Manchester");
  CHECK(NormalizeLabel("  semantic   Web ") == "Semantic web");
  CHECK(NormalizeLabel("éCOLE") == "École");
  CHECK(NormalizeLabel("Theory of Relativity") == "Theory of relativity");
  for (const char *blank : {"", "   ", "\t\n"}) {
    try {
      NormalizeLabel(blank);
      FAIL("expected normalization error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kNormalization);
    }
  }
}

TEST_CASE("normalization is idempotent") {
  for (const char *s : {"NEW YORK", "a", "  x  Y z ", "Ünïcode TEXT", "42 things"}) {
    std::string once = NormalizeLabel(s);
    CHECK(NormalizeLabel(once) == once);
  }
}

TEST_CASE("build query") {
  EndpointConfig cfg;
  CHECK(BuildQuery("Manchester", cfg) ==
        "SELECT DISTINCT ?s WHERE { ?s <http://www.w3.org/2000/01/rdf-schema#label> "
        "\"Manchester\"@en } LIMIT 10");
  std::string q = BuildQuery("Say \"hi\"\\", cfg);
  CHECK(q.find("\"Say \\\"hi\\\"\\\\\"@en") != std::string::npos);
  CHECK(EscapeSparqlString("a\nb\tc") == "a\\nb\\tc");
  cfg.language_tag = "de";
  CHECK(BuildQuery("Berlin", cfg).find("\"Berlin\"@de") != std::string::npos);
}

TEST_CASE("endpoint config validation") {
  EndpointConfig cfg;
  CHECK_NOTHROW(ValidateEndpointConfig(cfg));
  auto code = [](EndpointConfig c) {
    try {
      ValidateEndpointConfig(c);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kContract;
  };
  EndpointConfig bad = cfg;
  bad.max_retries = -1;
  CHECK(code(bad) == ErrorCode::kConfig);
  bad = cfg;
  bad.url = "ftp://example.org/sparql";
  CHECK(code(bad) == ErrorCode::kConfig);
  bad = cfg;
  bad.language_tag = "english!";
  CHECK(code(bad) == ErrorCode::kConfig);
  bad = cfg;
  bad.min_request_interval = -1ms;
  CHECK(code(bad) == ErrorCode::kConfig);
}

TEST_CASE("two bindings, two results") {
  MockSparqlServer server;
  server.AddLabel("Manchester", {std::string(kRes) + "Manchester",
                                 std::string(kRes) + "Manchester_(disambiguation)"});
  auto results = QueryLabel("manchester", FastConfig(server));
  REQUIRE(results.size() == 2);
  CHECK(results[0].resource_uri == std::string(kRes) + "Manchester");
  CHECK(results[0].matched_label == "Manchester");
  CHECK(Labels(server) == std::vector<std::string>{"Manchester"});
}

TEST_CASE("503 three times then 200 succeeds on the fourth attempt") {
  MockSparqlServer server;
  server.AddLabel("Paris", {std::string(kRes) + "Paris"});
  server.ScriptStatuses({503, 503, 503, 200});
  EndpointConfig cfg = FastConfig(server);
  cfg.max_retries = 3;
  CHECK(QueryLabel("Paris", cfg).size() == 1);
  CHECK(server.request_count() == 4);
}

TEST_CASE("always 503 exhausts retries") {
  MockSparqlServer server;
  server.ScriptStatuses({503, 503, 503, 503, 503});
  EndpointConfig cfg = FastConfig(server);
  cfg.max_retries = 2;
  try {
    QueryLabel("Paris", cfg);
    FAIL("expected throttled error");
  } catch (const ThrottledEndpointError &e) {
    CHECK(e.attempts() == 3);
    CHECK(e.code() == ErrorCode::kThrottled);
  }
  CHECK(server.request_count() == 3);
}

TEST_CASE("retry waits grow exponentially") {
  MockSparqlServer server;
  server.ScriptStatuses({503, 503, 200});
  EndpointConfig cfg = FastConfig(server);
  cfg.backoff_base = 40ms;
  QueryLabel("Paris", cfg);
  auto log = server.requests();
  REQUIRE(log.size() == 3);
  CHECK(log[1].arrival - log[0].arrival >= 40ms);
  CHECK(log[2].arrival - log[1].arrival >= 80ms);
}

TEST_CASE("other statuses are transport errors") {
  MockSparqlServer server;
  server.ScriptStatuses({500});
  try {
    QueryLabel("Paris", FastConfig(server));
    FAIL("expected transport error");
  } catch (const TransportError &e) {
    CHECK(e.status() == 500);
  }
  CHECK(server.request_count() == 1);
}

TEST_CASE("malformed results body is a parse error") {
  MockSparqlServer server;
  server.SetRawBody("{\"results\": 17}");
  try {
    QueryLabel("Paris", FastConfig(server));
    FAIL("expected parse error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}

TEST_CASE("unreachable endpoint is a transport error") {
  EndpointConfig cfg;
  cfg.url = "http://127.0.0.1:1/sparql";
  cfg.timeout = 500ms;
  cfg.min_request_interval = 0ms;
  CHECK_THROWS_AS(QueryLabel("Paris", cfg), TransportError);
}

TEST_CASE("requests are paced by the minimum interval") {
  MockSparqlServer server;
  EndpointConfig cfg = FastConfig(server);
  cfg.min_request_interval = 60ms;
  for (const char *label : {"One", "Two", "Three", "Four"}) QueryLabel(label, cfg);
  auto log = server.requests();
  REQUIRE(log.size() == 4);
  for (size_t i = 1; i < log.size(); ++i) {
    CHECK(log[i].arrival - log[i - 1].arrival >= 60ms);
  }
}

TEST_CASE("pacing holds across threads") {
  MockSparqlServer server;
  EndpointConfig cfg = FastConfig(server);
  cfg.min_request_interval = 40ms;
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { QueryLabel("Label" + std::to_string(t), cfg); });
  }
  for (auto &t : threads) t.join();
  auto log = server.requests();
  REQUIRE(log.size() == 4);
  std::sort(log.begin(), log.end(),
            [](const auto &a, const auto &b) { return a.arrival < b.arrival; });
  for (size_t i = 1; i < log.size(); ++i) {
    CHECK(log[i].arrival - log[i - 1].arrival >= 40ms);
  }
}

TEST_CASE("annotate trigram match") {
  MockSparqlServer server;
  server.AddLabel("Theory of relativity", {std::string(kRes) + "Theory_of_relativity"});
  TokenStream s = Tokenize("He studied the theory of relativity.");
  auto anns = AnnotateDbpedia(s, FastConfig(server),
                              testing::TestProvenance(SourceKind::kDbpedia));
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].surface == "theory of relativity");
  CHECK(anns[0].span == Span{15, 35});
  CHECK(anns[0].concepts[0].id == std::string(kRes) + "Theory_of_relativity");
  CHECK(anns[0].concepts[0].label == "Theory of relativity");
  // Six words, all distinct: 6 unigrams, 5 bigrams and 4 trigrams.
  CHECK(server.request_count() == 6 + 5 + 4);
}

TEST_CASE("repeated label is queried once and annotated per occurrence") {
  MockSparqlServer server;
  server.AddLabel("Paris", {std::string(kRes) + "Paris"});
  TokenStream s = Tokenize("Paris Paris");
  auto anns = AnnotateDbpedia(s, FastConfig(server),
                              testing::TestProvenance(SourceKind::kDbpedia));
  CHECK(Labels(server) == std::vector<std::string>{"Paris", "Paris paris"});
  REQUIRE(anns.size() == 2);
  CHECK(anns[0].span == Span{0, 5});
  CHECK(anns[1].span == Span{6, 11});
}

TEST_CASE("no matches: one request per distinct normalized label") {
  MockSparqlServer server;
  TokenStream s = Tokenize("the THE the");
  auto anns = AnnotateDbpedia(s, FastConfig(server),
                              testing::TestProvenance(SourceKind::kDbpedia));
  CHECK(anns.empty());
  // "The", "The the", "The the the".
  CHECK(Labels(server) == std::vector<std::string>{"The", "The the", "The the the"});
}

TEST_CASE("annotate surfaces the failing label") {
  MockSparqlServer server;
  server.ScriptStatuses({404});
  try {
    AnnotateDbpedia(Tokenize("Paris"), FastConfig(server),
                    testing::TestProvenance(SourceKind::kDbpedia));
    FAIL("expected transport error");
  } catch (const TransportError &e) {
    CHECK(std::string(e.what()).find("Paris") != std::string::npos);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace mosaic
