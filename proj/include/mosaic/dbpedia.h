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

#ifndef MOSAIC_DBPEDIA_H_
#define MOSAIC_DBPEDIA_H_

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/annotation.h"
#include "mosaic/provenance.h"
#include "mosaic/text_pipeline.h"

namespace mosaic {

inline constexpr std::string_view kDefaultDbpediaEndpoint =
    "http://dbpedia.org/sparql";

struct EndpointConfig {
  std::string url = std::string(kDefaultDbpediaEndpoint);
  // Minimum gap between the end of one request and the start of the next.
  std::chrono::milliseconds min_request_interval{200};
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{500};
  std::string language_tag = "en";
  std::chrono::milliseconds timeout{10000};
};

// Throws Error(kConfig) for negative intervals or retries, a malformed URL or
// a language tag that is not a BCP 47 style tag.
void ValidateEndpointConfig(const EndpointConfig &cfg);

struct SparqlResult {
  std::string resource_uri;
  std::string matched_label;

  bool operator==(const SparqlResult &) const = default;
};

// First scalar uppercased, the rest lowercased, white space trimmed and
// collapsed. Throws Error(kNormalization) for blank input.
std::string NormalizeLabel(std::string_view surface);

// Escapes a string for use inside a double-quoted SPARQL literal.
std::string EscapeSparqlString(std::string_view s);

// SELECT DISTINCT ?s WHERE { ?s rdfs:label "L"@T } LIMIT 10, with rdfs:label
// written as a full IRI.
std::string BuildQuery(std::string_view label, const EndpointConfig &cfg);

// Sends `query` and parses results.bindings[*].s. Requests to one endpoint
// URL are serialized process-wide and paced by min_request_interval. A 503
// response is retried up to max_retries times after sleeping
// backoff_base * 2^attempt. Throws ThrottledEndpointError when retries run
// out, TransportError for other statuses or connection failures, and
// Error(kParse) for a malformed results document.
std::vector<SparqlResult> ExecuteQuery(std::string_view query,
                                       const EndpointConfig &cfg);

// Normalized label lookup; fills matched_label.
std::vector<SparqlResult> QueryLabel(std::string_view label,
                                     const EndpointConfig &cfg);

// Queries every distinct normalized n-gram once and emits one annotation per
// n-gram occurrence and matching resource. Errors carry the failing label.
std::vector<Annotation> AnnotateDbpedia(const TokenStream &stream,
                                        const EndpointConfig &cfg,
                                        const ProvenanceRecord &provenance);

}  // namespace mosaic

#endif  // MOSAIC_DBPEDIA_H_
