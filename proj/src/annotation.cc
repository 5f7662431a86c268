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

#include "mosaic/annotation.h"

#include <algorithm>
#include <utility>

#include "json.hpp"
#include "mosaic/errors.h"
#include "mosaic/unicode.h"

namespace mosaic {

using Json = nlohmann::ordered_json;

std::vector<std::string> ConceptIdSet(const Annotation &ann) {
  std::vector<std::string> ids;
  ids.reserve(ann.concepts.size());
  for (const ConceptRef &c : ann.concepts) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

auto SortKey(const Annotation &a) {
  return std::make_tuple(a.span.start, a.span.end, a.source, ConceptIdSet(a));
}

void CheckAnnotation(const Annotation &ann, const std::string &slice) {
  auto fail = [](const std::string &msg) {
    throw Error(ErrorCode::kValidation, "invalid annotation: " + msg);
  };
  if (ann.concepts.empty()) fail("no concepts");
  for (const ConceptRef &c : ann.concepts) {
    if (c.id.empty()) fail("empty concept id");
  }
  if (ann.surface != slice) {
    fail("surface '" + ann.surface + "' does not match text '" + slice + "'");
  }
  bool wants_score = ann.source == SourceKind::kWordNet;
  if (ann.score.has_value() != wants_score) {
    fail(wants_score ? "WordNet annotation without score"
                     : "score on a non-WordNet annotation");
  }
  if (ann.score && !(*ann.score >= 0.0 && *ann.score <= 1.0)) {
    fail("score outside [0,1]");
  }
  if (ann.provenance.annotation_system != ann.source) {
    fail("provenance system differs from annotation source");
  }
  ValidateProvenance(ann.provenance);
}

}  // namespace

bool AnnotationLess(const Annotation &a, const Annotation &b) {
  return SortKey(a) < SortKey(b);
}

AnnotatedDocument::AnnotatedDocument(std::string text)
    : text_(std::move(text)), scalars_(unicode::Decode(text_)) {}

std::string AnnotatedDocument::Slice(Span span) const {
  if (!span.ValidFor(scalars_.size())) {
    throw Error(ErrorCode::kSpanBounds,
                "span " + std::to_string(span.start) + ".." +
                    std::to_string(span.end) + " out of bounds for text of length " +
                    std::to_string(scalars_.size()));
  }
  return unicode::Encode(
      std::u32string_view(scalars_).substr(span.start, span.length()));
}

bool AnnotatedDocument::Add(Annotation ann) {
  CheckAnnotation(ann, Slice(ann.span));
  auto key = SortKey(ann);
  auto it = std::lower_bound(
      annotations_.begin(), annotations_.end(), key,
      [](const Annotation &a, const auto &k) { return SortKey(a) < k; });
  if (it != annotations_.end() && SortKey(*it) == key) return false;
  annotations_.insert(it, std::move(ann));
  return true;
}

AnnotatedDocument AddAnnotation(AnnotatedDocument doc, Annotation ann) {
  doc.Add(std::move(ann));
  return doc;
}

std::string SerializeDocument(const AnnotatedDocument &doc) {
  Json annotations = Json::array();
  for (const Annotation &ann : doc.annotations()) {
    Json concepts = Json::array();
    for (const ConceptRef &c : ann.concepts) {
      Json concept_json = {{"id", c.id}};
      if (c.label) concept_json["label"] = *c.label;
      if (c.definition) concept_json["definition"] = *c.definition;
      if (c.prevalence) concept_json["prevalence"] = *c.prevalence;
      concepts.push_back(std::move(concept_json));
    }
    const ProvenanceRecord &p = ann.provenance;
    Json a = {
        {"start", ann.span.start},
        {"end", ann.span.end},
        {"surface", ann.surface},
        {"source", SourceKindName(ann.source)},
        {"concepts", std::move(concepts)},
    };
    if (ann.score) a["score"] = *ann.score;
    a["provenance"] = {
        {"agent_name", p.agent_name},
        {"agent_version", p.agent_version},
        {"annotation_system", SourceKindName(p.annotation_system)},
        {"source", p.source},
        {"environment", p.environment},
        {"date_time", p.date_time},
        {"location", p.location},
    };
    annotations.push_back(std::move(a));
  }
  Json root = {{"text", doc.text()}, {"annotations", std::move(annotations)}};
  return root.dump(2) + "\n";
}

namespace {

SourceKind SourceFromJson(const Json &value) {
  auto kind = ParseSourceKind(value.get<std::string>());
  if (!kind) {
    throw Error(ErrorCode::kParse,
                "unknown annotation source '" + value.get<std::string>() + "'");
  }
  return *kind;
}

std::optional<std::string> OptionalString(const Json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

AnnotatedDocument DeserializeDocument(std::string_view json) {
  Json root;
  try {
    root = Json::parse(json);
  } catch (const Json::parse_error &e) {
    throw Error(ErrorCode::kParse, std::string("malformed document JSON: ") +
                                       e.what());
  }
  try {
    AnnotatedDocument doc(root.at("text").get<std::string>());
    for (const Json &a : root.at("annotations")) {
      Annotation ann;
      ann.span.start = a.at("start").get<size_t>();
      ann.span.end = a.at("end").get<size_t>();
      ann.surface = a.at("surface").get<std::string>();
      ann.source = SourceFromJson(a.at("source"));
      for (const Json &c : a.at("concepts")) {
        ConceptRef ref;
        ref.id = c.at("id").get<std::string>();
        ref.label = OptionalString(c, "label");
        ref.definition = OptionalString(c, "definition");
        if (auto it = c.find("prevalence"); it != c.end()) {
          ref.prevalence = it->get<int64_t>();
        }
        ann.concepts.push_back(std::move(ref));
      }
      if (auto it = a.find("score"); it != a.end()) {
        ann.score = it->get<double>();
      }
      const Json &p = a.at("provenance");
      ann.provenance.agent_name = p.at("agent_name").get<std::string>();
      ann.provenance.agent_version = p.at("agent_version").get<std::string>();
      ann.provenance.annotation_system = SourceFromJson(p.at("annotation_system"));
      ann.provenance.source = p.at("source").get<std::string>();
      ann.provenance.environment = p.at("environment").get<std::string>();
      ann.provenance.date_time = p.at("date_time").get<std::string>();
      ann.provenance.location = p.at("location").get<std::string>();
      doc.Add(std::move(ann));
    }
    return doc;
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("invalid document schema: ") +
                                       e.what());
  }
}

}  // namespace mosaic
