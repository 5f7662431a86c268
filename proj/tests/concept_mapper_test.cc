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

#include <functional>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "mosaic/concept_mapper.h"
#include "mosaic/errors.h"
#include "support/fixtures.h"
#include "support/mock_mapper_server.h"
#include "support/oracles.h"

namespace mosaic {
namespace {

using namespace std::chrono_literals;
using testing::MockMapperServer;

ConceptMapping Mi() {
  return {"C0027051", "Myocardial Infarction", "myocardial infarction", 861.0};
}
ConceptMapping MiAlt() {
  return {"C0155626", "Acute myocardial infarction", "myocardial infarction", 694.0};
}
ConceptMapping Aspirin() { return {"C0004057", "Aspirin", "aspirin", 1000.0}; }

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kContract;
}

TEST_SUITE("concept-mapper") {

TEST_CASE("frames") {
  CHECK(EncodeRequestFrame("a \"b\"\n") ==
        "{\"v\":1,\"op\":\"map\",\"text\":\"a \\\"b\\\"\\n\"}\n");
  auto mappings = DecodeResponseFrame(
      R"({"v":1,"mappings":[{"id":"C1","name":"One","phrase":"one","score":2.5},)"
      R"({"id":"C2","name":"Two","phrase":"two"}]})");
  REQUIRE(mappings.size() == 2);
  CHECK(mappings[0] == ConceptMapping{"C1", "One", "one", 2.5});
  CHECK_FALSE(mappings[1].mapper_score.has_value());
  for (const char *bad : {"not json", R"({"v":2,"mappings":[]})", R"({"v":1})",
                          R"({"v":1,"mappings":[{"name":"x","phrase":"x"}]})",
                          R"({"v":1,"mappings":[{"id":"C","name":"x","phrase":""}]})"}) {
    CHECK(CodeOf([&] { DecodeResponseFrame(bad); }) == ErrorCode::kProtocol);
  }
}

TEST_CASE("two mappings from the mock server") {
  MockMapperServer server;
  server.SetMappings({Mi(), MiAlt()});
  auto got = RequestMappings("Signs of myocardial infarction.", server.endpoint());
  CHECK(got == std::vector<ConceptMapping>{Mi(), MiAlt()});
  auto frames = server.frames();
  REQUIRE(frames.size() == 1);
  auto request = nlohmann::json::parse(frames[0]);
  CHECK(request["op"] == "map");
  CHECK(request["text"] == "Signs of myocardial infarction.");
}

TEST_CASE("empty mapping list") {
  MockMapperServer server;
  server.SetMappings({});
  CHECK(RequestMappings("nothing here", server.endpoint()).empty());
}

TEST_CASE("unreachable and misbehaving servers") {
  MapperEndpoint down{"127.0.0.1", testing::UnusedPort(), 500ms};
  CHECK(CodeOf([&] { RequestMappings("x", down); }) == ErrorCode::kEndpointUnreachable);

  MockMapperServer slow;
  slow.SetMappings({});
  slow.SetReplyDelay(1500ms);
  MapperEndpoint ep = slow.endpoint();
  ep.timeout = 200ms;
  CHECK(CodeOf([&] { RequestMappings("x", ep); }) == ErrorCode::kEndpointUnreachable);

  MockMapperServer garbled;
  garbled.SetRawReply("{\"v\":1,\"mappings\":");
  CHECK(CodeOf([&] { RequestMappings("x", garbled.endpoint()); }) ==
        ErrorCode::kProtocol);

  MockMapperServer rude;
  rude.SetHangUp();
  CHECK(CodeOf([&] { RequestMappings("x", rude.endpoint()); }) == ErrorCode::kProtocol);
}

TEST_CASE("endpoint validation") {
  CHECK_THROWS_AS(ValidateMapperEndpoint({"localhost", 0, 100ms}), Error);
  CHECK_THROWS_AS(ValidateMapperEndpoint({"localhost", 70000, 100ms}), Error);
  CHECK_THROWS_AS(ValidateMapperEndpoint({"", 8066, 100ms}), Error);
  CHECK_NOTHROW(ValidateMapperEndpoint({"localhost", 8066, 100ms}));
}

TEST_CASE("find occurrences respects word boundaries") {
  CHECK(FindOccurrences("Aspirin, then aspirin again", "aspirin") ==
        std::vector<Span>{{0, 7}, {14, 21}});
  CHECK(FindOccurrences("aspirinate", "aspirin").empty());
  CHECK(FindOccurrences("noaspirin", "aspirin").empty());
  CHECK(FindOccurrences("Die Ärztin, die ärztin", "ärztin") ==
        std::vector<Span>{{4, 10}, {16, 22}});
  CHECK(FindOccurrences("abc", "").empty());
}

TEST_CASE("enrich counts and drops") {
  testing::WarningCapture warnings;
  std::string text = "Aspirin was given; aspirin again.";
  auto enriched = Enrich({Aspirin(), Mi()}, text);
  REQUIRE(enriched.size() == 1);
  CHECK(enriched[0].prevalence == 2);
  CHECK(enriched[0].occurrences == std::vector<Span>{{0, 7}, {19, 26}});
  CHECK(warnings.Contains("C0027051"));
}

TEST_CASE("prevalence matches the brute-force oracle") {
  testing::WarningCapture quiet;
  std::mt19937 rng(31337);
  const std::vector<std::string> pieces = {"ab", "AB", "b", "a", " ", " ", ",", "x1"};
  const std::vector<std::string> phrases = {"ab", "a b", "b", "x1", "ab ab", "b,a"};
  for (int round = 0; round < 500; ++round) {
    std::string text;
    for (size_t i = 0, n = rng() % 20; i < n; ++i) text += pieces[rng() % pieces.size()];
    const std::string &phrase = phrases[rng() % phrases.size()];
    auto expected = testing::oracle::Occurrences(text, phrase);
    auto got = FindOccurrences(text, phrase);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].start == expected[i].first);
      CHECK(got[i].end == expected[i].second);
    }
    ConceptMapping m{"C1", "Name", phrase, std::nullopt};
    auto enriched = Enrich({m}, text);
    CHECK(enriched.size() == (expected.empty() ? 0u : 1u));
    if (!enriched.empty()) CHECK(enriched[0].prevalence == expected.size());
  }
}

TEST_CASE("one annotation per occurrence") {
  MockMapperServer server;
  server.SetMappings({Aspirin()});
  std::string text = "Aspirin was given; aspirin again.";
  auto anns = AnnotateMapper(text, server.endpoint(),
                             testing::TestProvenance(SourceKind::kMetaMap));
  REQUIRE(anns.size() == 2);
  for (const auto &a : anns) {
    CHECK(a.source == SourceKind::kMetaMap);
    CHECK(a.concepts[0].id == "C0004057");
    CHECK(a.concepts[0].label == "Aspirin");
    CHECK(a.concepts[0].prevalence == 2);
    CHECK_FALSE(a.score.has_value());
  }
  CHECK(anns[1].surface == "aspirin");
  CHECK(server.connection_count() == 1);
}

TEST_CASE("a custom mapper plugs in") {
  struct Fixed : ConceptMapper {
    std::vector<ConceptMapping> RequestMappings(std::string_view) override {
      return {Mi()};
    }
  } mapper;
  auto anns = AnnotateMapper("Acute myocardial infarction.", mapper,
                             testing::TestProvenance(SourceKind::kMetaMap));
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].span == Span{6, 27});
}

}  // TEST_SUITE

}  // namespace
}  // namespace mosaic
