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

#ifndef MOSAIC_SKOS_H_
#define MOSAIC_SKOS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mosaic/annotation.h"
#include "mosaic/provenance.h"
#include "mosaic/text_pipeline.h"

namespace mosaic {

struct SkosConcept {
  std::string uri;
  std::string pref_label;
  std::vector<std::string> alt_labels;
  std::vector<std::string> broader;  // URIs; may point outside the thesaurus

  // Preferred label first, then alternatives.
  std::vector<std::string> labels() const;

  bool operator==(const SkosConcept &) const = default;
};

// Parses a thesaurus file. Content starting with '<' is read as SKOS RDF/XML,
// anything else as the line format
//
//   URI | prefLabel | alt1; alt2 | broader1; broader2
//
// with '#' comment lines. Concepts without a preferred label are skipped with
// a warning. Throws Error(kLoad) if the file cannot be read, Error(kParse)
// naming the line for malformed or empty input and Error(kValidation) for a
// concept with more than one preferred label.
std::vector<SkosConcept> LoadSkos(const std::filesystem::path &file);
std::vector<SkosConcept> ParseSkos(std::string_view content,
                                   const std::string &origin);
std::vector<SkosConcept> ParseSkosRdfXml(std::string_view content,
                                         const std::string &origin);
std::vector<SkosConcept> ParseSkosLines(std::string_view content,
                                        const std::string &origin);

// Two-map thesaurus index: URI -> concept and label word -> concepts.
class SkosIndex {
 public:
  SkosIndex() = default;

  const SkosConcept *Find(std::string_view uri) const;

  // Concepts having `word` (lowercase) in any label, in load order.
  std::vector<const SkosConcept *> ConceptsForWord(std::string_view word) const;

  // Lowercased token sequences of each label of `entry`, parallel to
  // SkosConcept::labels().
  const std::vector<std::vector<std::string>> &LabelTokens(
      const SkosConcept &entry) const;

  const std::vector<SkosConcept> &concepts() const { return concepts_; }
  size_t size() const { return concepts_.size(); }
  size_t word_count() const { return by_word_.size(); }

 private:
  friend SkosIndex BuildIndex(std::vector<SkosConcept> concepts);

  std::vector<SkosConcept> concepts_;
  std::vector<std::vector<std::vector<std::string>>> label_tokens_;
  std::unordered_map<std::string, size_t> by_uri_;
  std::unordered_map<std::string, std::vector<size_t>> by_word_;
};

// Throws Error(kValidation) on an empty or repeated URI. Warns about broader
// links to unknown concepts.
SkosIndex BuildIndex(std::vector<SkosConcept> concepts);

// Ancestors of `uri` in breadth-first order, each once, excluding the start.
// Broader links to unknown concepts are skipped. Throws Error(kLookup) when
// `uri` is not in the index.
std::vector<const SkosConcept *> BroaderClosure(const SkosIndex &index,
                                                std::string_view uri);

// Label hits anchored on every token whose lowercase form is a label word,
// plus one annotation per ancestor on the same span. Duplicates collapse.
std::vector<Annotation> AnnotateSkos(const TokenStream &stream,
                                     const SkosIndex &index,
                                     const ProvenanceRecord &provenance);

}  // namespace mosaic

#endif  // MOSAIC_SKOS_H_
