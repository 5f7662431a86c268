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

#include "mosaic/types.h"

namespace mosaic {

std::string_view SourceKindName(SourceKind kind) {
  switch (kind) {
    case SourceKind::kSkos: return "SKOS";
    case SourceKind::kMetaMap: return "MetaMap";
    case SourceKind::kWordNet: return "WordNet";
    case SourceKind::kDbpedia: return "DBPedia";
  }
  return "";
}

std::optional<SourceKind> ParseSourceKind(std::string_view name) {
  for (SourceKind kind : kAllSources) {
    if (SourceKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "NOUN";
    case Pos::kVerb: return "VERB";
    case Pos::kAdj: return "ADJ";
    case Pos::kAdv: return "ADV";
    case Pos::kOther: return "OTHER";
  }
  return "";
}

}  // namespace mosaic
