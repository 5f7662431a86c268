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

#include "mosaic/pipeline.h"

#include "mosaic/dbpedia.h"
#include "mosaic/errors.h"
#include "mosaic/log.h"
#include "mosaic/text_pipeline.h"
#include "mosaic/wordnet.h"

namespace mosaic {

Annotator::Annotator(Settings settings, Clock clock)
    : settings_(std::move(settings)), clock_(std::move(clock)) {
  ValidateSettings(settings_);
  if (settings_.enabled(SourceKind::kSkos)) {
    std::vector<SkosConcept> concepts;
    for (const auto &file : settings_.skos_files) {
      std::vector<SkosConcept> loaded = LoadSkos(file);
      concepts.insert(concepts.end(), std::make_move_iterator(loaded.begin()),
                      std::make_move_iterator(loaded.end()));
    }
    skos_ = BuildIndex(std::move(concepts));
  }
  if (settings_.enabled(SourceKind::kWordNet)) {
    lexicon_ = LoadWndb(settings_.wordnet_path);
  }
  if (settings_.enabled(SourceKind::kMetaMap)) {
    mapper_ = std::make_unique<JsonFrameMapper>(settings_.metamap);
  }
}

void Annotator::set_concept_mapper(std::unique_ptr<ConceptMapper> mapper) {
  mapper_ = std::move(mapper);
}

namespace {

bool IsNetworkFailure(const Error &e) {
  switch (e.code()) {
    case ErrorCode::kThrottled:
    case ErrorCode::kTransport:
    case ErrorCode::kEndpointUnreachable:
    case ErrorCode::kProtocol:
    case ErrorCode::kParse:
      return true;
    default:
      return false;
  }
}

}  // namespace

AnnotatedDocument Annotator::Annotate(std::string_view text) const {
  TokenStream stream = PosTag(Tokenize(text), lexicon_);
  AnnotatedDocument doc{std::string(text)};

  for (SourceKind source : kExecutionOrder) {
    if (!settings_.enabled(source)) continue;
    ProvenanceRecord provenance =
        BuildProvenance(settings_.provenance, source, clock_);
    std::vector<Annotation> found;
    switch (source) {
      case SourceKind::kSkos:
        found = AnnotateSkos(stream, *skos_, provenance);
        break;
      case SourceKind::kWordNet:
        found = AnnotateWordNet(stream, lexicon_, provenance,
                                {settings_.wordnet_stopwords});
        break;
      case SourceKind::kDbpedia:
        try {
          found = AnnotateDbpedia(stream, settings_.dbpedia, provenance);
        } catch (const Error &e) {
          if (!settings_.dbpedia_optional || !IsNetworkFailure(e)) throw;
          Warn(std::string("DBPedia source skipped: ") + e.what());
        }
        break;
      case SourceKind::kMetaMap:
        try {
          found = AnnotateMapper(text, *mapper_, provenance);
        } catch (const Error &e) {
          if (!settings_.metamap_optional || !IsNetworkFailure(e)) throw;
          Warn(std::string("MetaMap source skipped: ") + e.what());
        }
        break;
    }
    for (Annotation &ann : found) doc.Add(std::move(ann));
  }
  return doc;
}

AnnotatedDocument AnnotateAll(std::string_view text, const Settings &settings,
                              const Clock &clock) {
  return Annotator(settings, clock).Annotate(text);
}

}  // namespace mosaic
