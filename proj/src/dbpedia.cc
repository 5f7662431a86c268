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

#include "mosaic/dbpedia.h"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <thread>
#include <unordered_map>

#include "httplib.h"
#include "json.hpp"
#include "mosaic/errors.h"
#include "mosaic/unicode.h"

namespace mosaic {
namespace {

struct ParsedUrl {
  std::string host;
  int port = 80;
  std::string path = "/";
};

ParsedUrl ParseEndpointUrl(const std::string &url) {
  static const std::regex kUrl(R"(^http://([^/:?#]+)(?::(\d{1,5}))?(/[^#]*)?$)",
                               std::regex::icase);
  std::smatch m;
  if (!std::regex_match(url, m, kUrl)) {
    throw Error(ErrorCode::kConfig,
                "unsupported SPARQL endpoint URL '" + url +
                    "' (expected http://host[:port]/path)");
  }
  ParsedUrl out;
  out.host = m[1];
  if (m[2].matched) out.port = std::stoi(m[2]);
  if (m[3].matched) out.path = m[3];
  if (out.port < 1 || out.port > 65535) {
    throw Error(ErrorCode::kConfig, "port out of range in endpoint URL " + url);
  }
  return out;
}

// One gate per endpoint URL; requests through a gate are serialized and
// paced.
struct EndpointGate {
  std::mutex mu;
  std::optional<std::chrono::steady_clock::time_point> last_finished;
};

EndpointGate &GateFor(const std::string &url) {
  static std::mutex registry_mu;
  static std::map<std::string, std::unique_ptr<EndpointGate>> registry;
  std::lock_guard<std::mutex> lock(registry_mu);
  auto &gate = registry[url];
  if (!gate) gate = std::make_unique<EndpointGate>();
  return *gate;
}

std::vector<SparqlResult> ParseBindings(const std::string &body) {
  try {
    auto root = nlohmann::json::parse(body);
    std::vector<SparqlResult> out;
    for (const auto &binding : root.at("results").at("bindings")) {
      SparqlResult r;
      r.resource_uri = binding.at("s").at("value").get<std::string>();
      if (r.resource_uri.empty()) {
        throw Error(ErrorCode::kParse, "SPARQL binding with empty resource");
      }
      out.push_back(std::move(r));
    }
    return out;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse,
                std::string("malformed SPARQL results: ") + e.what());
  }
}

}  // namespace

void ValidateEndpointConfig(const EndpointConfig &cfg) {
  ParseEndpointUrl(cfg.url);
  if (cfg.min_request_interval.count() < 0) {
    throw Error(ErrorCode::kConfig, "dbpedia.min_interval_ms must be >= 0");
  }
  if (cfg.max_retries < 0) {
    throw Error(ErrorCode::kConfig, "dbpedia.max_retries must be >= 0");
  }
  if (cfg.backoff_base.count() < 0) {
    throw Error(ErrorCode::kConfig, "retry backoff must be >= 0");
  }
  static const std::regex kLangTag("^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$");
  if (!std::regex_match(cfg.language_tag, kLangTag)) {
    throw Error(ErrorCode::kConfig,
                "invalid language tag '" + cfg.language_tag + "'");
  }
}

std::string NormalizeLabel(std::string_view surface) {
  std::u32string in = unicode::Decode(surface);
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : in) {
    if (unicode::IsWhiteSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(out.empty() ? unicode::ToUpper(c) : unicode::ToLower(c));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kNormalization, "cannot normalize a blank label");
  }
  return unicode::Encode(out);
}

std::string EscapeSparqlString(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: out += c;
    }
  }
  return out;
}

std::string BuildQuery(std::string_view label, const EndpointConfig &cfg) {
  return "SELECT DISTINCT ?s WHERE { ?s "
         "<http://www.w3.org/2000/01/rdf-schema#label> \"" +
         EscapeSparqlString(label) + "\"@" + cfg.language_tag + " } LIMIT 10";
}

std::vector<SparqlResult> ExecuteQuery(std::string_view query,
                                       const EndpointConfig &cfg) {
  ValidateEndpointConfig(cfg);
  ParsedUrl url = ParseEndpointUrl(cfg.url);
  EndpointGate &gate = GateFor(cfg.url);

  httplib::Params params{{"query", std::string(query)},
                         {"format", "application/sparql-results+json"}};
  httplib::Headers headers{{"Accept", "application/sparql-results+json"}};

  for (int attempt = 0;; ++attempt) {
    int status = 0;
    std::string body;
    {
      std::lock_guard<std::mutex> lock(gate.mu);
      if (gate.last_finished) {
        std::this_thread::sleep_until(*gate.last_finished +
                                      cfg.min_request_interval);
      }
      httplib::Client client(url.host, url.port);
      auto secs = std::chrono::duration_cast<std::chrono::seconds>(cfg.timeout);
      auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
          cfg.timeout - secs);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      httplib::Result res = client.Get(url.path, params, headers);
      gate.last_finished = std::chrono::steady_clock::now();
      if (!res) {
        throw TransportError("SPARQL request to " + cfg.url + " failed: " +
                                 httplib::to_string(res.error()),
                             0);
      }
      status = res->status;
      body = std::move(res->body);
    }

    if (status == 200) return ParseBindings(body);
    if (status != 503) {
      throw TransportError("SPARQL endpoint " + cfg.url + " answered HTTP " +
                               std::to_string(status),
                           status);
    }
    if (attempt >= cfg.max_retries) {
      throw ThrottledEndpointError(
          "SPARQL endpoint " + cfg.url + " still throttling after " +
              std::to_string(attempt + 1) + " attempts",
          attempt + 1);
    }
    std::this_thread::sleep_for(cfg.backoff_base * (int64_t{1} << attempt));
  }
}

std::vector<SparqlResult> QueryLabel(std::string_view label,
                                     const EndpointConfig &cfg) {
  std::string normalized = NormalizeLabel(label);
  std::vector<SparqlResult> results =
      ExecuteQuery(BuildQuery(normalized, cfg), cfg);
  for (SparqlResult &r : results) r.matched_label = normalized;
  return results;
}

std::vector<Annotation> AnnotateDbpedia(const TokenStream &stream,
                                        const EndpointConfig &cfg,
                                        const ProvenanceRecord &provenance) {
  AnnotatedDocument doc(stream.text);
  std::unordered_map<std::string, std::vector<SparqlResult>> memo;
  for (const NGram &gram : NGrams(stream)) {
    std::string label = NormalizeLabel(NGramWords(stream, gram));
    auto it = memo.find(label);
    if (it == memo.end()) {
      std::vector<SparqlResult> results;
      try {
        results = QueryLabel(label, cfg);
      } catch (const ThrottledEndpointError &e) {
        throw ThrottledEndpointError(
            std::string(e.what()) + " (label \"" + label + "\")", e.attempts());
      } catch (const TransportError &e) {
        throw TransportError(std::string(e.what()) + " (label \"" + label + "\")",
                             e.status());
      } catch (const Error &e) {
        throw Error(e.code(), std::string(e.what()) + " (label \"" + label + "\")");
      }
      it = memo.emplace(label, std::move(results)).first;
    }
    for (const SparqlResult &r : it->second) {
      Annotation ann;
      ann.span = gram.span;
      ann.surface = gram.surface;
      ann.source = SourceKind::kDbpedia;
      ann.concepts.push_back({r.resource_uri, r.matched_label, std::nullopt,
                              std::nullopt});
      ann.provenance = provenance;
      doc.Add(std::move(ann));
    }
  }
  return doc.annotations();
}

}  // namespace mosaic
