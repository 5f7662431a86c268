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

#ifndef MOSAIC_SETTINGS_H_
#define MOSAIC_SETTINGS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/concept_mapper.h"
#include "mosaic/dbpedia.h"
#include "mosaic/provenance.h"
#include "mosaic/types.h"

namespace mosaic {

struct Settings {
  // Enabled sources in execution order: SKOS, WordNet, DBPedia, MetaMap.
  std::vector<SourceKind> sources;

  std::vector<std::filesystem::path> skos_files;
  std::filesystem::path wordnet_path;
  bool wordnet_stopwords = true;
  EndpointConfig dbpedia;
  bool dbpedia_optional = false;
  MapperEndpoint metamap;
  bool metamap_optional = false;
  ProvenanceConfig provenance;

  bool enabled(SourceKind kind) const;
};

// Execution order of annotators.
inline constexpr SourceKind kExecutionOrder[] = {
    SourceKind::kSkos, SourceKind::kWordNet, SourceKind::kDbpedia,
    SourceKind::kMetaMap};

// Comma-separated, case-insensitive source names ("skos", "wordnet",
// "dbpedia", "metamap"), returned in execution order without repeats.
// Throws Error(kConfig) for unknown names or an empty list.
std::vector<SourceKind> ParseSourceList(std::string_view list);

// settings.cfg: `key=value` lines, '#' comments, blank lines ignored.
// Relative paths resolve against `base_dir`. Unknown keys warn. Throws
// Error(kConfig) naming the line for unparseable lines or bad values and
// naming the key for missing required settings.
Settings ParseSettingsText(std::string_view content,
                           const std::filesystem::path &base_dir = {});
Settings ParseSettings(const std::filesystem::path &file);

// As above but without ValidateSettings, so callers can override fields
// (e.g. the source list) before validating.
Settings ReadSettingsText(std::string_view content,
                          const std::filesystem::path &base_dir = {});
Settings ReadSettings(const std::filesystem::path &file);

// Checks that sources are non-empty and that each enabled source and the
// provenance block have what they need.
void ValidateSettings(const Settings &settings);

}  // namespace mosaic

#endif  // MOSAIC_SETTINGS_H_
