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

#include "mosaic/skos.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "mosaic/errors.h"
#include "mosaic/log.h"
#include "mosaic/unicode.h"

namespace mosaic {

std::vector<std::string> SkosConcept::labels() const {
  std::vector<std::string> out;
  out.reserve(alt_labels.size() + 1);
  out.push_back(pref_label);
  out.insert(out.end(), alt_labels.begin(), alt_labels.end());
  return out;
}

namespace {

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t from = 0;
  while (true) {
    size_t at = s.find(sep, from);
    out.push_back(Trim(s.substr(from, at - from)));
    if (at == std::string_view::npos) break;
    from = at + 1;
  }
  return out;
}

std::vector<std::string> SplitList(std::string_view s) {
  std::vector<std::string> out;
  for (std::string &item : Split(s, ';')) {
    if (!item.empty()) out.push_back(std::move(item));
  }
  return out;
}

}  // namespace

std::vector<SkosConcept> ParseSkosLines(std::string_view content,
                                        const std::string &origin) {
  std::vector<SkosConcept> concepts;
  std::istringstream in{std::string(content)};
  std::string line;
  size_t lineno = 0;
  size_t entries = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    ++entries;
    auto where = [&] { return origin + ":" + std::to_string(lineno) + ": "; };
    std::vector<std::string> fields = Split(trimmed, '|');
    if (fields.size() > 4) {
      throw Error(ErrorCode::kParse, where() + "more than four '|' fields");
    }
    fields.resize(4);
    if (fields[0].empty()) throw Error(ErrorCode::kParse, where() + "empty URI");

    std::vector<std::string> pref = SplitList(fields[1]);
    if (pref.size() > 1) {
      throw Error(ErrorCode::kValidation,
                  where() + "concept " + fields[0] + " has more than one prefLabel");
    }
    if (pref.empty()) {
      Warn(where() + "concept " + fields[0] + " has no prefLabel; skipped");
      continue;
    }
    SkosConcept entry;
    entry.uri = fields[0];
    entry.pref_label = pref.front();
    entry.alt_labels = SplitList(fields[2]);
    entry.broader = SplitList(fields[3]);
    concepts.push_back(std::move(entry));
  }
  if (entries == 0) {
    throw Error(ErrorCode::kParse, origin + ": no thesaurus entries");
  }
  return concepts;
}

std::vector<SkosConcept> ParseSkos(std::string_view content,
                                   const std::string &origin) {
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kParse, origin + ":1: empty thesaurus file");
  }
  if (content.substr(first, 3) == "\xEF\xBB\xBF") {
    content.remove_prefix(first + 3);
    first = content.find_first_not_of(" \t\r\n");
  }
  if (first != std::string_view::npos && content[first] == '<') {
    return ParseSkosRdfXml(content, origin);
  }
  return ParseSkosLines(content, origin);
}

std::vector<SkosConcept> LoadSkos(const std::filesystem::path &file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open thesaurus " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseSkos(buf.str(), file.string());
}

const SkosConcept *SkosIndex::Find(std::string_view uri) const {
  auto it = by_uri_.find(std::string(uri));
  return it == by_uri_.end() ? nullptr : &concepts_[it->second];
}

std::vector<const SkosConcept *> SkosIndex::ConceptsForWord(
    std::string_view word) const {
  std::vector<const SkosConcept *> out;
  auto it = by_word_.find(std::string(word));
  if (it == by_word_.end()) return out;
  for (size_t i : it->second) out.push_back(&concepts_[i]);
  return out;
}

const std::vector<std::vector<std::string>> &SkosIndex::LabelTokens(
    const SkosConcept &entry) const {
  size_t i = static_cast<size_t>(&entry - concepts_.data());
  return label_tokens_.at(i);
}

SkosIndex BuildIndex(std::vector<SkosConcept> concepts) {
  SkosIndex index;
  index.concepts_ = std::move(concepts);
  for (size_t i = 0; i < index.concepts_.size(); ++i) {
    const SkosConcept &c = index.concepts_[i];
    if (c.uri.empty()) throw Error(ErrorCode::kValidation, "concept with empty URI");
    if (!index.by_uri_.emplace(c.uri, i).second) {
      throw Error(ErrorCode::kValidation, "duplicate concept URI " + c.uri);
    }
    auto &per_label = index.label_tokens_.emplace_back();
    for (const std::string &label : c.labels()) {
      auto &tokens = per_label.emplace_back();
      for (const Token &t : Tokenize(label).tokens) {
        std::string lower = unicode::Lower(t.surface);
        if (!t.is_punctuation()) {
          auto &bucket = index.by_word_[lower];
          if (std::find(bucket.begin(), bucket.end(), i) == bucket.end()) {
            bucket.push_back(i);
          }
        }
        tokens.push_back(std::move(lower));
      }
    }
  }
  for (const SkosConcept &c : index.concepts_) {
    for (const std::string &b : c.broader) {
      if (!index.by_uri_.count(b)) {
        Warn("concept " + c.uri + " has broader link to unknown concept " + b);
      }
    }
  }
  return index;
}

std::vector<const SkosConcept *> BroaderClosure(const SkosIndex &index,
                                                std::string_view uri) {
  const SkosConcept *start = index.Find(uri);
  if (start == nullptr) {
    throw Error(ErrorCode::kLookup, "unknown concept " + std::string(uri));
  }
  std::vector<const SkosConcept *> out;
  std::unordered_set<const SkosConcept *> visited{start};
  std::deque<const SkosConcept *> queue{start};
  while (!queue.empty()) {
    const SkosConcept *c = queue.front();
    queue.pop_front();
    for (const std::string &b : c->broader) {
      const SkosConcept *parent = index.Find(b);
      if (parent == nullptr || !visited.insert(parent).second) continue;
      out.push_back(parent);
      queue.push_back(parent);
    }
  }
  return out;
}

std::vector<Annotation> AnnotateSkos(const TokenStream &stream,
                                     const SkosIndex &index,
                                     const ProvenanceRecord &provenance) {
  AnnotatedDocument doc(stream.text);
  std::vector<std::string> lowered;
  lowered.reserve(stream.size());
  for (const Token &t : stream.tokens) lowered.push_back(unicode::Lower(t.surface));

  auto emit = [&](Span span, const SkosConcept &entry) {
    Annotation ann;
    ann.span = span;
    ann.surface = doc.Slice(span);
    ann.source = SourceKind::kSkos;
    ann.concepts.push_back({entry.uri, entry.pref_label, std::nullopt,
                            std::nullopt});
    ann.provenance = provenance;
    doc.Add(std::move(ann));
  };

  for (size_t i = 0; i < stream.size(); ++i) {
    if (stream[i].is_punctuation()) continue;
    for (const SkosConcept *entry : index.ConceptsForWord(lowered[i])) {
      for (const auto &label : index.LabelTokens(*entry)) {
        for (size_t j = 0; j < label.size(); ++j) {
          if (label[j] != lowered[i] || j > i) continue;
          size_t begin = i - j;
          if (begin + label.size() > stream.size()) continue;
          if (!std::equal(label.begin(), label.end(), lowered.begin() + begin)) {
            continue;
          }
          Span span{stream[begin].span.start,
                    stream[begin + label.size() - 1].span.end};
          emit(span, *entry);
          for (const SkosConcept *ancestor : BroaderClosure(index, entry->uri)) {
            emit(span, *ancestor);
          }
        }
      }
    }
  }
  return doc.annotations();
}

}  // namespace mosaic
