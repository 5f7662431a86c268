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

#ifndef MOSAIC_PROVENANCE_H_
#define MOSAIC_PROVENANCE_H_

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

#include "mosaic/types.h"

#ifndef MOSAIC_TOOL_ID
#define MOSAIC_TOOL_ID "MosaicAnnotator"
#endif

namespace mosaic {

// Identifies this software in every provenance record. Fixed at build time.
inline constexpr std::string_view kToolIdentifier = MOSAIC_TOOL_ID;

using Timestamp = std::chrono::system_clock::time_point;
using Clock = std::function<Timestamp()>;

Clock SystemClock();
Clock FrozenClock(Timestamp at);

// Second-precision UTC, e.g. "2026-10-16T08:30:00Z".
std::string FormatRfc3339Utc(Timestamp t);
// Accepts "YYYY-MM-DDTHH:MM:SS" followed by "Z" or a numeric offset.
// Throws Error(kParse) otherwise.
Timestamp ParseRfc3339(std::string_view text);

// User-described provenance fields taken from the settings file.
struct ProvenanceConfig {
  std::string agent_name;
  std::string agent_version;
  std::string environment_description;
  std::string location;
};

struct ProvenanceRecord {
  std::string agent_name;
  std::string agent_version;
  SourceKind annotation_system = SourceKind::kSkos;
  std::string source;
  std::string environment;
  std::string date_time;
  std::string location;

  bool operator==(const ProvenanceRecord &) const = default;
};

// Assembles the record for one annotating system. The timestamp comes from
// `clock`; `source` is always kToolIdentifier. Throws Error(kConfig) naming
// the first missing config field.
ProvenanceRecord BuildProvenance(const ProvenanceConfig &config,
                                 SourceKind system, const Clock &clock);

// Throws Error(kValidation) unless all seven fields are non-empty.
void ValidateProvenance(const ProvenanceRecord &record);

}  // namespace mosaic

#endif  // MOSAIC_PROVENANCE_H_
