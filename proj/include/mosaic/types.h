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

#ifndef MOSAIC_TYPES_H_
#define MOSAIC_TYPES_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>

namespace mosaic {

// Half-open character range [start, end) measured in Unicode scalar values
// of the original input text.
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool ValidFor(size_t text_length) const {
    return start < end && end <= text_length;
  }

  auto operator<=>(const Span &) const = default;
};

// Knowledge source that produced an annotation. Declaration order is the
// tie-break order used when sorting annotations.
enum class SourceKind { kSkos, kMetaMap, kWordNet, kDbpedia };

inline constexpr SourceKind kAllSources[] = {
    SourceKind::kSkos, SourceKind::kMetaMap, SourceKind::kWordNet,
    SourceKind::kDbpedia};

// "SKOS", "MetaMap", "WordNet", "DBPedia".
std::string_view SourceKindName(SourceKind kind);
std::optional<SourceKind> ParseSourceKind(std::string_view name);

// Coarse part-of-speech classes. Only the four open classes are looked up in
// the lexical database.
enum class Pos { kNoun, kVerb, kAdj, kAdv, kOther };

inline constexpr Pos kOpenClasses[] = {Pos::kNoun, Pos::kVerb, Pos::kAdj,
                                       Pos::kAdv};

std::string_view PosName(Pos pos);

}  // namespace mosaic

#endif  // MOSAIC_TYPES_H_
