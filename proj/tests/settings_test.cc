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

#include "doctest.h"
#include "mosaic/errors.h"
#include "mosaic/settings.h"
#include "support/fixtures.h"

namespace mosaic {
namespace {

using namespace std::chrono_literals;

constexpr std::string_view kProvenanceLines =
    "agent.name = Mosaic test\n"
    "agent.version = 0.1\n"
    "environment.description = unit tests\n"
    "location = Manchester\n";

std::string Config(std::string_view body) {
  return std::string(kProvenanceLines) + std::string(body);
}

ErrorCode CodeOf(const std::function<void()> &fn, std::string *message = nullptr) {
  try {
    fn();
  } catch (const Error &e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kContract;
}

TEST_SUITE("settings") {

TEST_CASE("two sources with paths") {
  Settings s = ParseSettingsText(
      Config("# thesauri\nsources = skos, wordnet\nskos.files = a.txt, /abs/b.rdf\n"
             "wordnet.path = dict\n"),
      "/etc/mosaic");
  CHECK(s.sources == std::vector<SourceKind>{SourceKind::kSkos, SourceKind::kWordNet});
  CHECK(s.skos_files == std::vector<std::filesystem::path>{"/etc/mosaic/a.txt",
                                                            "/abs/b.rdf"});
  CHECK(s.wordnet_path == std::filesystem::path("/etc/mosaic/dict"));
  CHECK(s.provenance.agent_name == "Mosaic test");
  CHECK(s.enabled(SourceKind::kSkos));
  CHECK_FALSE(s.enabled(SourceKind::kDbpedia));
}

TEST_CASE("dbpedia defaults") {
  Settings s = ParseSettingsText(Config("sources=dbpedia\n"));
  CHECK(s.dbpedia.url == "http://dbpedia.org/sparql");
  CHECK(s.dbpedia.min_request_interval == 200ms);
  CHECK(s.dbpedia.max_retries == 3);
  CHECK(s.dbpedia.language_tag == "en");
  CHECK_FALSE(s.dbpedia_optional);
}

TEST_CASE("dbpedia and metamap keys") {
  Settings s = ParseSettingsText(Config(
      "sources=metamap,dbpedia\ndbpedia.endpoint=http://localhost:8890/sparql\n"
      "dbpedia.min_interval_ms=50\ndbpedia.max_retries=1\ndbpedia.lang=de\n"
      "dbpedia.optional=true\nmetamap.host=127.0.0.1\nmetamap.port=8066\n"
      "metamap.optional=yes\n"));
  CHECK(s.sources == std::vector<SourceKind>{SourceKind::kDbpedia, SourceKind::kMetaMap});
  CHECK(s.dbpedia.url == "http://localhost:8890/sparql");
  CHECK(s.dbpedia.min_request_interval == 50ms);
  CHECK(s.dbpedia.max_retries == 1);
  CHECK(s.dbpedia.language_tag == "de");
  CHECK(s.dbpedia_optional);
  CHECK(s.metamap.host == "127.0.0.1");
  CHECK(s.metamap.port == 8066);
  CHECK(s.metamap_optional);
}

TEST_CASE("source list parsing") {
  CHECK(ParseSourceList("MetaMap,skos,SKOS") ==
        std::vector<SourceKind>{SourceKind::kSkos, SourceKind::kMetaMap});
  CHECK(CodeOf([] { ParseSourceList(""); }) == ErrorCode::kConfig);
  CHECK(CodeOf([] { ParseSourceList("skos,umls"); }) == ErrorCode::kConfig);
}

TEST_CASE("invalid settings") {
  std::string message;
  CHECK(CodeOf([&] { ParseSettingsText(Config("sources=\n"), {}); }, &message) ==
        ErrorCode::kConfig);
  CHECK(message.find("line 5") != std::string::npos);

  CHECK(CodeOf([&] { ParseSettingsText(Config("sources=skos\nno equals sign\n")); },
               &message) == ErrorCode::kConfig);
  CHECK(message.find("line 6") != std::string::npos);

  CHECK(CodeOf([&] { ParseSettingsText(Config("sources=skos\n")); }, &message) ==
        ErrorCode::kConfig);
  CHECK(message.find("skos.files") != std::string::npos);

  CHECK(CodeOf([&] { ParseSettingsText(Config("sources=metamap\n")); }, &message) ==
        ErrorCode::kConfig);
  CHECK(message.find("metamap.port") != std::string::npos);

  CHECK(CodeOf([&] { ParseSettingsText("sources=dbpedia\n"); }, &message) ==
        ErrorCode::kConfig);
  CHECK(message.find("agent.name") != std::string::npos);

  CHECK(CodeOf([&] {
          ParseSettingsText(Config("sources=dbpedia\ndbpedia.max_retries=many\n"));
        }) == ErrorCode::kConfig);
  CHECK(CodeOf([&] {
          ParseSettingsText(Config("sources=dbpedia\ndbpedia.optional=perhaps\n"));
        }) == ErrorCode::kConfig);
  CHECK(CodeOf([&] { ParseSettingsText(Config("")); }, &message) == ErrorCode::kConfig);
}

TEST_CASE("unknown keys warn") {
  testing::WarningCapture warnings;
  ParseSettingsText(Config("sources=dbpedia\ncolour=blue\n"));
  CHECK(warnings.Contains("colour"));
}

TEST_CASE("settings file relative paths resolve against its directory") {
  testing::ScratchDir dir;
  auto file = dir.Write("settings.cfg", Config("sources=skos\nskos.files=t.txt\n"));
  Settings s = ParseSettings(file);
  CHECK(s.skos_files.at(0) == dir.path() / "t.txt");
  std::string message;
  CHECK(CodeOf([&] { ParseSettings(dir.path() / "missing.cfg"); }, &message) ==
        ErrorCode::kConfig);
  CHECK(message.find("missing.cfg") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
}  // namespace mosaic
