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

// SKOS Core subset of RDF/XML: skos:Concept nodes (or rdf:Description nodes
// typed as skos:Concept) with prefLabel, altLabel and broader properties.

#include <expat.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mosaic/errors.h"
#include "mosaic/log.h"
#include "mosaic/skos.h"

namespace mosaic {
namespace {

// Expat joins namespace URI and local name with this separator.
constexpr char kSep = '|';
constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";

std::string Rdf(std::string_view local) {
  return std::string(kRdf) + kSep + std::string(local);
}
std::string Skos(std::string_view local) {
  return std::string(kSkos) + kSep + std::string(local);
}

struct NodeData {
  std::string uri;
  bool typed_concept = false;
  std::vector<std::string> pref;
  std::vector<std::string> alt;
  std::vector<std::string> broader;
  size_t line = 0;
};

enum class FrameKind { kNode, kPrefLabel, kAltLabel, kBroader, kType, kOther };

struct Frame {
  FrameKind kind = FrameKind::kOther;
  NodeData *node = nullptr;  // node this element belongs to
  std::string text;
  bool broader_resolved = false;
};

class RdfXmlReader {
 public:
  explicit RdfXmlReader(std::string origin)
      : origin_(std::move(origin)), parser_(XML_ParserCreateNS(nullptr, kSep)) {
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &RdfXmlReader::OnStart, &RdfXmlReader::OnEnd);
    XML_SetCharacterDataHandler(parser_, &RdfXmlReader::OnText);
  }
  ~RdfXmlReader() { XML_ParserFree(parser_); }
  RdfXmlReader(const RdfXmlReader &) = delete;
  RdfXmlReader &operator=(const RdfXmlReader &) = delete;

  std::vector<SkosConcept> Parse(std::string_view content) {
    if (XML_Parse(parser_, content.data(), static_cast<int>(content.size()),
                  XML_TRUE) == XML_STATUS_ERROR) {
      throw Error(ErrorCode::kParse,
                  origin_ + ":" + std::to_string(XML_GetCurrentLineNumber(parser_)) +
                      ": " + XML_ErrorString(XML_GetErrorCode(parser_)));
    }
    return Collect();
  }

 private:
  static void OnStart(void *self, const XML_Char *name, const XML_Char **atts) {
    static_cast<RdfXmlReader *>(self)->Start(name, atts);
  }
  static void OnEnd(void *self, const XML_Char *) {
    static_cast<RdfXmlReader *>(self)->End();
  }
  static void OnText(void *self, const XML_Char *s, int len) {
    auto *reader = static_cast<RdfXmlReader *>(self);
    if (!reader->frames_.empty()) reader->frames_.back().text.append(s, len);
  }

  static std::optional<std::string> Attr(const XML_Char **atts,
                                         const std::string &name) {
    for (int i = 0; atts[i] != nullptr; i += 2) {
      if (name == atts[i]) return std::string(atts[i + 1]);
    }
    return std::nullopt;
  }

  NodeData *NodeFor(const std::string &uri) {
    auto it = nodes_.find(uri);
    if (it != nodes_.end()) return it->second.get();
    auto node = std::make_unique<NodeData>();
    node->uri = uri;
    node->line = XML_GetCurrentLineNumber(parser_);
    NodeData *raw = node.get();
    nodes_.emplace(uri, std::move(node));
    order_.push_back(raw);
    return raw;
  }

  // Node elements: anything that is not a property of an enclosing node.
  bool InPropertyPosition() const {
    return !frames_.empty() && frames_.back().kind == FrameKind::kNode;
  }

  void Start(const XML_Char *raw_name, const XML_Char **atts) {
    std::string name(raw_name);
    Frame frame;
    Frame *parent = frames_.empty() ? nullptr : &frames_.back();

    if (InPropertyPosition()) {
      frame.node = parent->node;
      if (name == Skos("prefLabel")) frame.kind = FrameKind::kPrefLabel;
      else if (name == Skos("altLabel")) frame.kind = FrameKind::kAltLabel;
      else if (name == Rdf("type")) frame.kind = FrameKind::kType;
      else if (name == Skos("broader")) frame.kind = FrameKind::kBroader;

      if (frame.node != nullptr && frame.kind == FrameKind::kBroader) {
        if (auto res = Attr(atts, Rdf("resource"))) {
          frame.node->broader.push_back(*res);
          frame.broader_resolved = true;
        }
      }
      if (frame.node != nullptr && frame.kind == FrameKind::kType) {
        if (Attr(atts, Rdf("resource")) == std::string(kSkos) + "Concept") {
          frame.node->typed_concept = true;
        }
      }
      frames_.push_back(std::move(frame));
      return;
    }

    // The rdf:RDF wrapper holds node elements, not properties.
    if (name == Rdf("RDF")) {
      frames_.push_back(std::move(frame));
      return;
    }

    // Node element.
    frame.kind = FrameKind::kNode;
    std::optional<std::string> uri = Attr(atts, Rdf("about"));
    if (!uri) {
      if (auto id = Attr(atts, Rdf("ID"))) uri = "#" + *id;
    }
    bool is_concept = name == Skos("Concept");
    if (uri && (is_concept || name == Rdf("Description"))) {
      frame.node = NodeFor(*uri);
      if (is_concept) frame.node->typed_concept = true;
      // <skos:broader><skos:Concept rdf:about="..."/></skos:broader>
      if (parent != nullptr && parent->kind == FrameKind::kBroader &&
          parent->node != nullptr && !parent->broader_resolved) {
        parent->node->broader.push_back(*uri);
        parent->broader_resolved = true;
      }
    }
    frames_.push_back(std::move(frame));
  }

  void End() {
    Frame frame = std::move(frames_.back());
    frames_.pop_back();
    if (frame.node == nullptr) return;
    std::string text = Trim(frame.text);
    if (text.empty()) return;
    if (frame.kind == FrameKind::kPrefLabel) frame.node->pref.push_back(text);
    if (frame.kind == FrameKind::kAltLabel) frame.node->alt.push_back(text);
  }

  static std::string Trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  std::vector<SkosConcept> Collect() {
    std::vector<SkosConcept> out;
    for (NodeData *node : order_) {
      if (!node->typed_concept) continue;
      auto where = origin_ + ":" + std::to_string(node->line) + ": ";
      if (node->pref.size() > 1) {
        throw Error(ErrorCode::kValidation,
                    where + "concept " + node->uri + " has more than one prefLabel");
      }
      if (node->pref.empty()) {
        Warn(where + "concept " + node->uri + " has no prefLabel; skipped");
        continue;
      }
      SkosConcept entry;
      entry.uri = node->uri;
      entry.pref_label = node->pref.front();
      entry.alt_labels = node->alt;
      entry.broader = node->broader;
      out.push_back(std::move(entry));
    }
    return out;
  }

  std::string origin_;
  XML_Parser parser_;
  std::vector<Frame> frames_;
  std::map<std::string, std::unique_ptr<NodeData>> nodes_;
  std::vector<NodeData *> order_;
};

}  // namespace

std::vector<SkosConcept> ParseSkosRdfXml(std::string_view content,
                                         const std::string &origin) {
  RdfXmlReader reader(origin);
  return reader.Parse(content);
}

}  // namespace mosaic
