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

#ifndef MOSAIC_LEXICON_H_
#define MOSAIC_LEXICON_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mosaic/types.h"

namespace mosaic {

// One WordNet sense.
struct Synset {
  std::string id;  // POS letter + database offset, e.g. "n09213565"
  Pos pos = Pos::kNoun;
  std::vector<std::string> lemmas;
  // Definition part of the gloss; usage examples are not kept.
  std::string gloss;

  bool operator==(const Synset &) const = default;
};

// Lemma/POS to senses store. Sense order is the order senses were added,
// which for WNDB files is index-file order.
class LexDatabase {
 public:
  // Throws Error(kValidation) on an empty id, no lemmas, or a repeated id.
  void AddSynset(Synset synset);

  // Appends synset `id` to the senses of (lemma, pos). The synset must exist,
  // have the same POS and list the lemma. Throws Error(kValidation)
  // otherwise.
  void AddSense(std::string_view lemma, Pos pos, std::string_view id);

  const Synset *FindSynset(std::string_view id) const;

  // Exact match on the lowercased lemma; no morphology.
  std::vector<Synset> Senses(std::string_view lemma, Pos pos) const;
  bool Contains(std::string_view lemma, Pos pos) const;

  size_t synset_count() const { return synsets_.size(); }
  size_t lemma_count() const { return senses_.size(); }

 private:
  std::vector<Synset> synsets_;
  std::unordered_map<std::string, size_t> by_id_;
  std::map<std::pair<std::string, Pos>, std::vector<size_t>> senses_;
};

// Lowercase, with WNDB underscores turned into spaces.
std::string NormalizeLemma(std::string_view lemma);

// Reads index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv} from `dir`.
// Only member lemmas and the gloss definition are kept. Throws Error(kLoad)
// for a missing file and Error(kParse) with file and line for a malformed
// line.
LexDatabase LoadWndb(const std::filesystem::path &dir);

// Base forms tried when a surface form is not in the database, in order.
// Nouns: -ies -> y, -es, -s. Verbs: -s, -ed, -ing, undoubling a final
// doubled consonant and restoring a silent e. Other classes: none.
std::vector<std::string> MorphologicalCandidates(std::string_view word, Pos pos);

// Exact lookup, then one retry round over MorphologicalCandidates. Returns
// the senses of the first candidate that has any.
std::vector<Synset> LookupSenses(const LexDatabase &db, std::string_view lemma,
                                 Pos pos);

}  // namespace mosaic

#endif  // MOSAIC_LEXICON_H_
