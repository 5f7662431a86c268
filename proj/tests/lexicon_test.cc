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

#include "doctest.h"
#include "mosaic/errors.h"
#include "mosaic/lexicon.h"
#include "support/fixtures.h"

namespace mosaic {
namespace {

using testing::TestData;

std::vector<std::string> Ids(const std::vector<Synset> &synsets) {
  std::vector<std::string> out;
  for (const Synset &s : synsets) out.push_back(s.id);
  return out;
}

TEST_SUITE("lexicon") {

TEST_CASE("load fixture database") {
  LexDatabase db = LoadWndb(TestData("wndb"));
  CHECK(db.synset_count() == 14);
  auto bank = db.Senses("bank", Pos::kNoun);
  CHECK(Ids(bank) == std::vector<std::string>{"n08420278", "n09213565"});
  CHECK(bank[1].gloss == "sloping land (especially the slope beside a body of water)");
  CHECK(bank[0].lemmas ==
        std::vector<std::string>{"bank", "depository_financial_institution"});

  const Synset *quiet = db.FindSynset("a01918984");
  REQUIRE(quiet != nullptr);
  CHECK(quiet->lemmas == std::vector<std::string>{"quiet"});
  CHECK(quiet->pos == Pos::kAdj);

  const Synset *money = db.FindSynset("n13384557");
  REQUIRE(money != nullptr);
  CHECK(money->gloss == "the most common medium of exchange");
  CHECK(db.Contains("physician", Pos::kNoun));
  CHECK_FALSE(db.Contains("bank", Pos::kVerb));
}

TEST_CASE("headers-only files give an empty database") {
  LexDatabase db = LoadWndb(TestData("wndb_empty"));
  CHECK(db.synset_count() == 0);
  CHECK(db.lemma_count() == 0);
}

TEST_CASE("data line without gloss separator is a parse error") {
  try {
    LoadWndb(TestData("wndb_bad"));
    FAIL("expected parse error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kParse);
    // Errors are reported as <file>:<line>: <reason>.
    CHECK(std::string(e.what()).find("data.noun:3:") != std::string::npos);
  }
}

TEST_CASE("missing directory is a load error naming the file") {
  try {
    LoadWndb(TestData("no-such-wndb"));
    FAIL("expected load error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kLoad);
    CHECK(std::string(e.what()).find("no-such-wndb") != std::string::npos);
  }
}

TEST_CASE("lookup with morphological fallback") {
  LexDatabase db = LoadWndb(TestData("wndb"));
  CHECK(LookupSenses(db, "bank", Pos::kNoun).size() == 2);
  CHECK(LookupSenses(db, "zzzz", Pos::kNoun).empty());
  CHECK(LookupSenses(db, "banks", Pos::kNoun) == LookupSenses(db, "bank", Pos::kNoun));
  CHECK(LookupSenses(db, "Bank", Pos::kNoun).size() == 2);
  CHECK(Ids(LookupSenses(db, "running", Pos::kVerb)) ==
        std::vector<std::string>{"v01926311"});
  CHECK(Ids(LookupSenses(db, "hoping", Pos::kVerb)) ==
        std::vector<std::string>{"v01811441"});
  CHECK(Ids(LookupSenses(db, "deposited", Pos::kVerb)) ==
        std::vector<std::string>{"v02256354"});
  CHECK(Ids(LookupSenses(db, "visits", Pos::kVerb)) ==
        std::vector<std::string>{"v02460619"});
  CHECK(Ids(LookupSenses(db, "doctors", Pos::kNoun)) ==
        std::vector<std::string>{"n10020890"});
  CHECK(LookupSenses(db, "quietly", Pos::kAdj).empty());
}

TEST_CASE("morphological candidates") {
  auto has = [](const std::vector<std::string> &v, const std::string &s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  CHECK(has(MorphologicalCandidates("bodies", Pos::kNoun), "body"));
  CHECK(has(MorphologicalCandidates("boxes", Pos::kNoun), "box"));
  CHECK(has(MorphologicalCandidates("running", Pos::kVerb), "run"));
  CHECK(has(MorphologicalCandidates("hoping", Pos::kVerb), "hope"));
  CHECK(has(MorphologicalCandidates("stopped", Pos::kVerb), "stop"));
  CHECK(MorphologicalCandidates("quick", Pos::kAdj).empty());
}

TEST_CASE("sense registration is validated") {
  LexDatabase db;
  db.AddSynset({"n1", Pos::kNoun, {"cell"}, "basic unit"});
  CHECK_THROWS_AS(db.AddSynset({"n1", Pos::kNoun, {"cell"}, ""}), Error);
  CHECK_THROWS_AS(db.AddSynset({"n2", Pos::kNoun, {}, ""}), Error);
  CHECK_THROWS_AS(db.AddSense("cell", Pos::kVerb, "n1"), Error);
  CHECK_THROWS_AS(db.AddSense("prison", Pos::kNoun, "n1"), Error);
  CHECK_THROWS_AS(db.AddSense("cell", Pos::kNoun, "n9"), Error);
  db.AddSense("Cell", Pos::kNoun, "n1");
  db.AddSense("cell", Pos::kNoun, "n1");
  CHECK(db.Senses("cell", Pos::kNoun).size() == 1);
}

}  // TEST_SUITE

}  // namespace
}  // namespace mosaic
