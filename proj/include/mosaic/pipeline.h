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

#ifndef MOSAIC_PIPELINE_H_
#define MOSAIC_PIPELINE_H_

#include <memory>
#include <optional>
#include <string_view>

#include "mosaic/annotation.h"
#include "mosaic/concept_mapper.h"
#include "mosaic/lexicon.h"
#include "mosaic/provenance.h"
#include "mosaic/settings.h"
#include "mosaic/skos.h"

namespace mosaic {

// Loads the resources of every enabled source once and annotates documents
// with them. Text is tokenized and tagged once; each source then runs over
// the shared token stream in the fixed order SKOS, WordNet, DBPedia,
// MetaMap.
class Annotator {
 public:
  // Validates settings and loads thesauri and the lexical database. Throws
  // Error(kConfig) for invalid settings and the loader errors otherwise.
  explicit Annotator(Settings settings, Clock clock = SystemClock());

  // Replaces the JSON frame client, e.g. with a bridge to another mapper.
  void set_concept_mapper(std::unique_ptr<ConceptMapper> mapper);

  // Network failures abort unless the failing source is marked optional, in
  // which case its annotations are skipped with a warning.
  AnnotatedDocument Annotate(std::string_view text) const;

  const Settings &settings() const { return settings_; }

 private:
  Settings settings_;
  Clock clock_;
  std::optional<SkosIndex> skos_;
  LexDatabase lexicon_;
  std::unique_ptr<ConceptMapper> mapper_;
};

// One-shot convenience wrapper around Annotator.
AnnotatedDocument AnnotateAll(std::string_view text, const Settings &settings,
                              const Clock &clock = SystemClock());

}  // namespace mosaic

#endif  // MOSAIC_PIPELINE_H_
