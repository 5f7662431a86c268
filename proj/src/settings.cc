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

#include "mosaic/settings.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mosaic/errors.h"
#include "mosaic/log.h"
#include "mosaic/unicode.h"

namespace mosaic {

bool Settings::enabled(SourceKind kind) const {
  return std::find(sources.begin(), sources.end(), kind) != sources.end();
}

namespace {

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> SplitCommas(std::string_view s) {
  std::vector<std::string> out;
  size_t from = 0;
  while (from <= s.size()) {
    size_t at = std::min(s.find(',', from), s.size());
    std::string item = Trim(s.substr(from, at - from));
    if (!item.empty()) out.push_back(std::move(item));
    from = at + 1;
  }
  return out;
}

std::optional<SourceKind> SourceFromConfigName(const std::string &name) {
  std::string lower = unicode::Lower(name);
  if (lower == "skos") return SourceKind::kSkos;
  if (lower == "wordnet") return SourceKind::kWordNet;
  if (lower == "dbpedia") return SourceKind::kDbpedia;
  if (lower == "metamap") return SourceKind::kMetaMap;
  return std::nullopt;
}

}  // namespace

std::vector<SourceKind> ParseSourceList(std::string_view list) {
  std::vector<SourceKind> requested;
  for (const std::string &name : SplitCommas(list)) {
    auto kind = SourceFromConfigName(name);
    if (!kind) throw Error(ErrorCode::kConfig, "unknown source '" + name + "'");
    requested.push_back(*kind);
  }
  if (requested.empty()) {
    throw Error(ErrorCode::kConfig, "no annotation sources enabled");
  }
  std::vector<SourceKind> out;
  for (SourceKind kind : kExecutionOrder) {
    if (std::find(requested.begin(), requested.end(), kind) != requested.end()) {
      out.push_back(kind);
    }
  }
  return out;
}

Settings ReadSettingsText(std::string_view content,
                          const std::filesystem::path &base_dir) {
  Settings settings;
  std::istringstream in{std::string(content)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto fail = [&](const std::string &why) -> Error {
      return Error(ErrorCode::kConfig,
                   "settings line " + std::to_string(lineno) + ": " + why);
    };
    size_t eq = trimmed.find('=');
    if (eq == std::string::npos) throw fail("expected key=value");
    std::string key = Trim(std::string_view(trimmed).substr(0, eq));
    std::string value = Trim(std::string_view(trimmed).substr(eq + 1));
    if (key.empty()) throw fail("empty key");

    auto as_bool = [&]() {
      std::string v = unicode::Lower(value);
      if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
      if (v == "false" || v == "off" || v == "no" || v == "0") return false;
      throw fail("'" + key + "' expects a boolean, got '" + value + "'");
    };
    auto as_int = [&]() {
      try {
        size_t used = 0;
        long v = std::stol(value, &used);
        if (used == value.size()) return v;
      } catch (const std::exception &) {
      }
      throw fail("'" + key + "' expects an integer, got '" + value + "'");
    };
    auto as_path = [&](const std::string &p) {
      std::filesystem::path path(p);
      return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
    };

    if (key == "sources") {
      try {
        settings.sources = ParseSourceList(value);
      } catch (const Error &e) {
        throw fail(e.what());
      }
    } else if (key == "skos.files") {
      settings.skos_files.clear();
      for (const std::string &p : SplitCommas(value)) {
        settings.skos_files.push_back(as_path(p));
      }
    } else if (key == "wordnet.path") {
      settings.wordnet_path = value.empty() ? std::filesystem::path() : as_path(value);
    } else if (key == "wordnet.stopwords") {
      settings.wordnet_stopwords = as_bool();
    } else if (key == "dbpedia.endpoint") {
      settings.dbpedia.url = value.empty() ? std::string(kDefaultDbpediaEndpoint) : value;
    } else if (key == "dbpedia.min_interval_ms") {
      settings.dbpedia.min_request_interval = std::chrono::milliseconds(as_int());
    } else if (key == "dbpedia.max_retries") {
      settings.dbpedia.max_retries = static_cast<int>(as_int());
    } else if (key == "dbpedia.lang") {
      settings.dbpedia.language_tag = value;
    } else if (key == "dbpedia.optional") {
      settings.dbpedia_optional = as_bool();
    } else if (key == "metamap.host") {
      settings.metamap.host = value;
    } else if (key == "metamap.port") {
      settings.metamap.port = static_cast<int>(as_int());
    } else if (key == "metamap.optional") {
      settings.metamap_optional = as_bool();
    } else if (key == "agent.name") {
      settings.provenance.agent_name = value;
    } else if (key == "agent.version") {
      settings.provenance.agent_version = value;
    } else if (key == "environment.description") {
      settings.provenance.environment_description = value;
    } else if (key == "location") {
      settings.provenance.location = value;
    } else {
      Warn("settings line " + std::to_string(lineno) + ": unknown key '" + key +
           "' ignored");
    }
  }
  return settings;
}

namespace {

std::string ReadFile(const std::filesystem::path &file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfig, "cannot read settings file " + file.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Settings ReadSettings(const std::filesystem::path &file) {
  return ReadSettingsText(ReadFile(file), file.parent_path());
}

void ValidateSettings(const Settings &settings) {
  auto missing = [](const char *key, const char *source) {
    return Error(ErrorCode::kConfig, std::string("missing required setting '") +
                                         key + "' for source " + source);
  };
  if (settings.sources.empty()) {
    throw Error(ErrorCode::kConfig, "no annotation sources enabled ('sources')");
  }
  if (settings.enabled(SourceKind::kSkos) && settings.skos_files.empty()) {
    throw missing("skos.files", "skos");
  }
  if (settings.enabled(SourceKind::kWordNet) && settings.wordnet_path.empty()) {
    throw missing("wordnet.path", "wordnet");
  }
  if (settings.enabled(SourceKind::kDbpedia)) {
    ValidateEndpointConfig(settings.dbpedia);
  }
  if (settings.enabled(SourceKind::kMetaMap)) {
    if (settings.metamap.host.empty()) throw missing("metamap.host", "metamap");
    if (settings.metamap.port == 0) throw missing("metamap.port", "metamap");
    ValidateMapperEndpoint(settings.metamap);
  }
  const ProvenanceConfig &p = settings.provenance;
  std::pair<const std::string *, const char *> fields[] = {
      {&p.agent_name, "agent.name"},
      {&p.agent_version, "agent.version"},
      {&p.environment_description, "environment.description"},
      {&p.location, "location"},
  };
  for (const auto &[value, key] : fields) {
    if (value->empty()) {
      throw Error(ErrorCode::kConfig,
                  std::string("missing required setting '") + key + "'");
    }
  }
}

Settings ParseSettingsText(std::string_view content,
                           const std::filesystem::path &base_dir) {
  Settings settings = ReadSettingsText(content, base_dir);
  ValidateSettings(settings);
  return settings;
}

Settings ParseSettings(const std::filesystem::path &file) {
  Settings settings = ReadSettings(file);
  ValidateSettings(settings);
  return settings;
}

}  // namespace mosaic
