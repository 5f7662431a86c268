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

#ifndef MOSAIC_ANNOTATION_H_
#define MOSAIC_ANNOTATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/provenance.h"
#include "mosaic/types.h"

namespace mosaic {

// Reference to a concept in some knowledge source: a URI, a synset id or a
// CUI, plus whatever descriptive payload the source supplies.
struct ConceptRef {
  std::string id;
  std::optional<std::string> label;
  std::optional<std::string> definition;
  // Document occurrence count of the mapped phrase (concept mapper only).
  std::optional<int64_t> prevalence;

  bool operator==(const ConceptRef &) const = default;
};

struct Annotation {
  Span span;
  std::string surface;
  SourceKind source = SourceKind::kSkos;
  std::vector<ConceptRef> concepts;
  // Lesk value; present exactly for WordNet annotations.
  std::optional<double> score;
  ProvenanceRecord provenance;

  bool operator==(const Annotation &) const = default;
};

// Sorted concept ids; two annotations with equal span, source and concept id
// set are duplicates.
std::vector<std::string> ConceptIdSet(const Annotation &ann);

// Total order used for documents: start, end, source, then concept ids.
bool AnnotationLess(const Annotation &a, const Annotation &b);

// Standoff annotations over one immutable input text. Annotations are kept
// sorted by AnnotationLess and free of duplicates.
class AnnotatedDocument {
 public:
  AnnotatedDocument() = default;
  explicit AnnotatedDocument(std::string text);

  const std::string &text() const { return text_; }
  // Text length in scalar values.
  size_t length() const { return scalars_.size(); }
  const std::vector<Annotation> &annotations() const { return annotations_; }

  // UTF-8 slice of the text. Throws Error(kSpanBounds) for invalid spans.
  std::string Slice(Span span) const;

  // Inserts `ann` at its sorted position. Returns false when an annotation
  // with the same span, source and concept set is already present; the
  // document is then unchanged. Throws Error(kSpanBounds) when the span does
  // not fit the text and Error(kValidation) when the annotation breaks one of
  // its own invariants.
  bool Add(Annotation ann);

  bool operator==(const AnnotatedDocument &other) const {
    return text_ == other.text_ && annotations_ == other.annotations_;
  }

 private:
  std::string text_;
  std::u32string scalars_;
  std::vector<Annotation> annotations_;
};

// Functional form of AnnotatedDocument::Add.
AnnotatedDocument AddAnnotation(AnnotatedDocument doc, Annotation ann);

// Standoff JSON, UTF-8, newline terminated.
std::string SerializeDocument(const AnnotatedDocument &doc);

// Inverse of SerializeDocument. Throws Error(kParse) on malformed JSON or
// schema violations, and the Add errors for invalid annotations.
AnnotatedDocument DeserializeDocument(std::string_view json);

}  // namespace mosaic

#endif  // MOSAIC_ANNOTATION_H_
