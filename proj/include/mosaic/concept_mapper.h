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

#ifndef MOSAIC_CONCEPT_MAPPER_H_
#define MOSAIC_CONCEPT_MAPPER_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/annotation.h"
#include "mosaic/provenance.h"

namespace mosaic {

struct MapperEndpoint {
  std::string host = "localhost";
  int port = 0;
  std::chrono::milliseconds timeout{5000};
};

// Throws Error(kConfig) unless 1 <= port <= 65535, timeout > 0 and host is set.
void ValidateMapperEndpoint(const MapperEndpoint &ep);

struct ConceptMapping {
  std::string concept_id;  // e.g. a UMLS CUI
  std::string preferred_name;
  std::string matched_phrase;
  std::optional<double> mapper_score;

  bool operator==(const ConceptMapping &) const = default;
};

struct EnrichedMapping {
  ConceptMapping mapping;
  size_t prevalence = 0;
  std::vector<Span> occurrences;
};

// Seam for concept-mapping services. JsonFrameMapper speaks the JSON frame
// protocol; a bridge to another service implements the same interface.
class ConceptMapper {
 public:
  virtual ~ConceptMapper() = default;
  virtual std::vector<ConceptMapping> RequestMappings(std::string_view text) = 0;
};

// One TCP connection per request. Request frame:
//   {"v":1,"op":"map","text":"..."}\n
// Response frame:
//   {"v":1,"mappings":[{"id":..,"name":..,"phrase":..,"score":..}]}\n
class JsonFrameMapper : public ConceptMapper {
 public:
  explicit JsonFrameMapper(MapperEndpoint endpoint);

  // Throws Error(kEndpointUnreachable) when the server cannot be reached or
  // times out and Error(kProtocol) for a malformed response frame.
  std::vector<ConceptMapping> RequestMappings(std::string_view text) override;

 private:
  MapperEndpoint endpoint_;
};

std::string EncodeRequestFrame(std::string_view text);
// Parses one response line (without the newline).
std::vector<ConceptMapping> DecodeResponseFrame(std::string_view frame);

std::vector<ConceptMapping> RequestMappings(std::string_view text,
                                            const MapperEndpoint &ep);

// Case-insensitive occurrences of `phrase` whose ends fall on word
// boundaries: the neighbouring scalar, if any, is not a letter or digit.
// Spans are scalar offsets.
std::vector<Span> FindOccurrences(std::string_view text, std::string_view phrase);

// Attaches occurrences and prevalence; mappings whose phrase does not occur
// are dropped with a warning.
std::vector<EnrichedMapping> Enrich(const std::vector<ConceptMapping> &mappings,
                                    std::string_view text);

std::vector<Annotation> AnnotateMapper(std::string_view text,
                                       ConceptMapper &mapper,
                                       const ProvenanceRecord &provenance);
std::vector<Annotation> AnnotateMapper(std::string_view text,
                                       const MapperEndpoint &ep,
                                       const ProvenanceRecord &provenance);

}  // namespace mosaic

#endif  // MOSAIC_CONCEPT_MAPPER_H_
