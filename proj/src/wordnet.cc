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

#include "mosaic/wordnet.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "mosaic/errors.h"
#include "mosaic/unicode.h"

namespace mosaic {
namespace {

#include "stopwords.inc"

std::vector<std::string> ParseStopwords() {
  std::vector<std::string> words;
  std::istringstream in{std::string(kStopwordData)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line);
  }
  return words;
}

}  // namespace

const std::vector<std::string> &Stopwords() {
  static const std::vector<std::string> words = ParseStopwords();
  return words;
}

bool IsStopword(std::string_view lowercase_word) {
  static const std::unordered_set<std::string_view> set(Stopwords().begin(),
                                                        Stopwords().end());
  return set.count(lowercase_word) > 0;
}

std::vector<std::string> DefinitionWords(std::string_view gloss,
                                         const LeskOptions &options) {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  for (const Token &token : Tokenize(gloss).tokens) {
    if (token.is_punctuation()) continue;
    std::string word = unicode::Lower(token.surface);
    if (options.drop_stopwords && IsStopword(word)) continue;
    if (seen.insert(word).second) words.push_back(std::move(word));
  }
  return words;
}

LeskScore ScoreSense(const Synset &sense, std::span<const std::string> context,
                     const LeskOptions &options) {
  std::unordered_set<std::string_view> window(context.begin(), context.end());
  std::vector<std::string> definition = DefinitionWords(sense.gloss, options);
  LeskScore score;
  score.definition_length = std::max<size_t>(definition.size(), 1);
  score.overlap = static_cast<size_t>(
      std::count_if(definition.begin(), definition.end(),
                    [&](const std::string &w) { return window.count(w) > 0; }));
  return score;
}

std::vector<RankedSense> LeskRank(std::span<const Synset> senses,
                                  std::span<const std::string> context,
                                  const LeskOptions &options) {
  std::vector<RankedSense> ranked;
  ranked.reserve(senses.size());
  for (const Synset &sense : senses) {
    ranked.push_back({sense, ScoreSense(sense, context, options)});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedSense &a, const RankedSense &b) {
                     return a.score > b.score;
                   });
  return ranked;
}

std::vector<RankedSense> TopRanked(std::vector<RankedSense> ranked) {
  if (ranked.empty()) return ranked;
  LeskScore best = ranked.front().score;
  auto tail = std::find_if(ranked.begin(), ranked.end(),
                           [&](const RankedSense &r) { return r.score != best; });
  ranked.erase(tail, ranked.end());
  return ranked;
}

std::vector<Synset> Disambiguate(std::span<const Synset> senses,
                                 std::span<const std::string> context,
                                 const LeskOptions &options) {
  if (senses.empty()) {
    throw Error(ErrorCode::kContract, "disambiguation needs at least one sense");
  }
  std::vector<Synset> out;
  for (RankedSense &r : TopRanked(LeskRank(senses, context, options))) {
    out.push_back(std::move(r.synset));
  }
  return out;
}

namespace {

std::string JoinLemmas(const std::vector<std::string> &lemmas) {
  std::string out;
  for (const std::string &l : lemmas) {
    if (!out.empty()) out += ", ";
    out += NormalizeLemma(l);
  }
  return out;
}

}  // namespace

std::vector<Annotation> AnnotateWordNet(const TokenStream &stream,
                                        const LexDatabase &db,
                                        const ProvenanceRecord &provenance,
                                        const LeskOptions &options) {
  AnnotatedDocument doc(stream.text);
  for (size_t i = 0; i < stream.size(); ++i) {
    const Token &token = stream[i];
    if (token.pos == Pos::kOther) continue;
    std::vector<Synset> senses = LookupSenses(db, token.surface, token.pos);
    if (senses.empty()) continue;
    std::vector<std::string> context = ContextWindow(stream, i);
    for (const RankedSense &r : TopRanked(LeskRank(senses, context, options))) {
      Annotation ann;
      ann.span = token.span;
      ann.surface = token.surface;
      ann.source = SourceKind::kWordNet;
      ConceptRef concept_ref;
      concept_ref.id = r.synset.id;
      concept_ref.label = JoinLemmas(r.synset.lemmas);
      if (!r.synset.gloss.empty()) concept_ref.definition = r.synset.gloss;
      ann.concepts.push_back(std::move(concept_ref));
      ann.score = r.score.value();
      ann.provenance = provenance;
      doc.Add(std::move(ann));
    }
  }
  return doc.annotations();
}

}  // namespace mosaic
