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

#ifndef MOSAIC_WORDNET_H_
#define MOSAIC_WORDNET_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/annotation.h"
#include "mosaic/lexicon.h"
#include "mosaic/provenance.h"
#include "mosaic/text_pipeline.h"

namespace mosaic {

// Proportion of a sense's distinct definition words found in the context.
// Kept as an exact rational; value() is only for output.
struct LeskScore {
  size_t overlap = 0;
  size_t definition_length = 1;

  double value() const {
    return static_cast<double>(overlap) / static_cast<double>(definition_length);
  }

  // Exact comparison by cross multiplication.
  std::strong_ordering operator<=>(const LeskScore &other) const {
    return overlap * other.definition_length <=>
           other.overlap * definition_length;
  }
  bool operator==(const LeskScore &other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }
};

struct LeskOptions {
  bool drop_stopwords = true;
};

struct RankedSense {
  Synset synset;
  LeskScore score;
};

// The shipped function-word stoplist.
const std::vector<std::string> &Stopwords();
bool IsStopword(std::string_view lowercase_word);

// Distinct lowercased word tokens of a gloss in first-occurrence order,
// stopwords removed when requested.
std::vector<std::string> DefinitionWords(std::string_view gloss,
                                         const LeskOptions &options = {});

LeskScore ScoreSense(const Synset &sense,
                     std::span<const std::string> context,
                     const LeskOptions &options = {});

// Every sense with its score, best first; equal scores keep input order.
std::vector<RankedSense> LeskRank(std::span<const Synset> senses,
                                  std::span<const std::string> context,
                                  const LeskOptions &options = {});

// Leading entries of a LeskRank result that share the maximum score.
std::vector<RankedSense> TopRanked(std::vector<RankedSense> ranked);

// The best sense, or all senses tied on the best score. Throws
// Error(kContract) when `senses` is empty.
std::vector<Synset> Disambiguate(std::span<const Synset> senses,
                                 std::span<const std::string> context,
                                 const LeskOptions &options = {});

// One WordNet annotation per selected sense of every open-class token that
// has senses. `stream` must be POS tagged.
std::vector<Annotation> AnnotateWordNet(const TokenStream &stream,
                                        const LexDatabase &db,
                                        const ProvenanceRecord &provenance,
                                        const LeskOptions &options = {});

}  // namespace mosaic

#endif  // MOSAIC_WORDNET_H_
