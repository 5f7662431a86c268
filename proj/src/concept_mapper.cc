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

#include "mosaic/concept_mapper.h"

#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <memory>

#include "json.hpp"
#include "mosaic/errors.h"
#include "mosaic/log.h"
#include "mosaic/unicode.h"

namespace mosaic {
namespace {

using SteadyClock = std::chrono::steady_clock;

class Socket {
 public:
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket() {
    if (fd_ >= 0) ::close(fd_);
  }
  Socket(const Socket &) = delete;
  Socket &operator=(const Socket &) = delete;
  int fd() const { return fd_; }

 private:
  int fd_;
};

[[noreturn]] void Unreachable(const MapperEndpoint &ep, const std::string &why) {
  throw Error(ErrorCode::kEndpointUnreachable,
              "concept mapper at " + ep.host + ":" + std::to_string(ep.port) +
                  " unreachable: " + why);
}

int RemainingMs(SteadyClock::time_point deadline) {
  auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
      deadline - SteadyClock::now());
  return left.count() > 0 ? static_cast<int>(left.count()) : 0;
}

// Waits for `events` on fd until the deadline. False on timeout.
bool WaitFor(int fd, short events, SteadyClock::time_point deadline) {
  while (true) {
    pollfd p{fd, events, 0};
    int rc = ::poll(&p, 1, RemainingMs(deadline));
    if (rc > 0) return true;
    if (rc == 0) return false;
    if (errno != EINTR) return false;
  }
}

std::unique_ptr<Socket> Connect(const MapperEndpoint &ep,
                                SteadyClock::time_point deadline) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo *found = nullptr;
  std::string port = std::to_string(ep.port);
  int rc = ::getaddrinfo(ep.host.c_str(), port.c_str(), &hints, &found);
  if (rc != 0) Unreachable(ep, gai_strerror(rc));
  std::unique_ptr<addrinfo, decltype(&::freeaddrinfo)> guard(found, ::freeaddrinfo);

  std::string last_error = "no addresses";
  for (addrinfo *ai = found; ai != nullptr; ai = ai->ai_next) {
    auto sock = std::make_unique<Socket>(
        ::socket(ai->ai_family, ai->ai_socktype | SOCK_CLOEXEC, ai->ai_protocol));
    if (sock->fd() < 0) {
      last_error = std::strerror(errno);
      continue;
    }
    ::fcntl(sock->fd(), F_SETFL, ::fcntl(sock->fd(), F_GETFL) | O_NONBLOCK);
    if (::connect(sock->fd(), ai->ai_addr, ai->ai_addrlen) == 0) return sock;
    if (errno != EINPROGRESS) {
      last_error = std::strerror(errno);
      continue;
    }
    if (!WaitFor(sock->fd(), POLLOUT, deadline)) {
      last_error = "connect timed out";
      continue;
    }
    int err = 0;
    socklen_t len = sizeof(err);
    ::getsockopt(sock->fd(), SOL_SOCKET, SO_ERROR, &err, &len);
    if (err == 0) return sock;
    last_error = std::strerror(err);
  }
  Unreachable(ep, last_error);
}

}  // namespace

void ValidateMapperEndpoint(const MapperEndpoint &ep) {
  if (ep.host.empty()) throw Error(ErrorCode::kConfig, "metamap.host is empty");
  if (ep.port < 1 || ep.port > 65535) {
    throw Error(ErrorCode::kConfig,
                "metamap.port " + std::to_string(ep.port) + " outside 1..65535");
  }
  if (ep.timeout.count() <= 0) {
    throw Error(ErrorCode::kConfig, "concept mapper timeout must be positive");
  }
}

std::string EncodeRequestFrame(std::string_view text) {
  nlohmann::ordered_json frame = {{"v", 1}, {"op", "map"}, {"text", text}};
  return frame.dump() + "\n";
}

std::vector<ConceptMapping> DecodeResponseFrame(std::string_view frame) {
  auto fail = [](const std::string &why) -> Error {
    return Error(ErrorCode::kProtocol, "bad concept mapper response: " + why);
  };
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(frame);
  } catch (const nlohmann::json::parse_error &e) {
    throw fail(e.what());
  }
  try {
    if (root.at("v").get<int>() != 1) throw fail("unsupported protocol version");
    std::vector<ConceptMapping> out;
    for (const auto &m : root.at("mappings")) {
      ConceptMapping mapping;
      mapping.concept_id = m.at("id").get<std::string>();
      mapping.preferred_name = m.value("name", std::string());
      mapping.matched_phrase = m.at("phrase").get<std::string>();
      if (auto it = m.find("score"); it != m.end() && !it->is_null()) {
        mapping.mapper_score = it->get<double>();
      }
      if (mapping.concept_id.empty() || mapping.matched_phrase.empty()) {
        throw fail("mapping with empty id or phrase");
      }
      out.push_back(std::move(mapping));
    }
    return out;
  } catch (const nlohmann::json::exception &e) {
    throw fail(e.what());
  }
}

JsonFrameMapper::JsonFrameMapper(MapperEndpoint endpoint)
    : endpoint_(std::move(endpoint)) {
  ValidateMapperEndpoint(endpoint_);
}

std::vector<ConceptMapping> JsonFrameMapper::RequestMappings(
    std::string_view text) {
  const auto deadline = SteadyClock::now() + endpoint_.timeout;
  std::unique_ptr<Socket> sock = Connect(endpoint_, deadline);

  std::string request = EncodeRequestFrame(text);
  size_t sent = 0;
  while (sent < request.size()) {
    ssize_t n = ::send(sock->fd(), request.data() + sent, request.size() - sent,
                       MSG_NOSIGNAL);
    if (n > 0) {
      sent += static_cast<size_t>(n);
    } else if (n < 0 && (errno == EAGAIN || errno == EWOULDBLOCK || errno == EINTR)) {
      if (!WaitFor(sock->fd(), POLLOUT, deadline)) Unreachable(endpoint_, "send timed out");
    } else {
      Unreachable(endpoint_, std::string("send failed: ") + std::strerror(errno));
    }
  }

  std::string response;
  char buf[4096];
  while (response.find('\n') == std::string::npos) {
    ssize_t n = ::recv(sock->fd(), buf, sizeof(buf), 0);
    if (n > 0) {
      response.append(buf, static_cast<size_t>(n));
    } else if (n == 0) {
      throw Error(ErrorCode::kProtocol,
                  "concept mapper closed the connection before a full frame");
    } else if (errno == EAGAIN || errno == EWOULDBLOCK || errno == EINTR) {
      if (!WaitFor(sock->fd(), POLLIN, deadline)) {
        Unreachable(endpoint_, "response timed out");
      }
    } else {
      Unreachable(endpoint_, std::string("recv failed: ") + std::strerror(errno));
    }
  }
  response.resize(response.find('\n'));
  if (!response.empty() && response.back() == '\r') response.pop_back();
  return DecodeResponseFrame(response);
}

std::vector<ConceptMapping> RequestMappings(std::string_view text,
                                            const MapperEndpoint &ep) {
  JsonFrameMapper mapper(ep);
  return mapper.RequestMappings(text);
}

std::vector<Span> FindOccurrences(std::string_view text, std::string_view phrase) {
  std::u32string hay = unicode::Lower(unicode::Decode(text));
  std::u32string needle = unicode::Lower(unicode::Decode(phrase));
  std::vector<Span> out;
  if (needle.empty() || needle.size() > hay.size()) return out;
  for (size_t pos = hay.find(needle); pos != std::u32string::npos;
       pos = hay.find(needle, pos + 1)) {
    size_t end = pos + needle.size();
    bool left_ok = pos == 0 || !unicode::IsAlnum(hay[pos - 1]);
    bool right_ok = end == hay.size() || !unicode::IsAlnum(hay[end]);
    if (left_ok && right_ok) out.push_back({pos, end});
  }
  return out;
}

std::vector<EnrichedMapping> Enrich(const std::vector<ConceptMapping> &mappings,
                                    std::string_view text) {
  std::vector<EnrichedMapping> out;
  for (const ConceptMapping &m : mappings) {
    std::vector<Span> spans = FindOccurrences(text, m.matched_phrase);
    if (spans.empty()) {
      Warn("mapped phrase \"" + m.matched_phrase + "\" (" + m.concept_id +
           ") does not occur in the text; dropped");
      continue;
    }
    EnrichedMapping e;
    e.mapping = m;
    e.prevalence = spans.size();
    e.occurrences = std::move(spans);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Annotation> AnnotateMapper(std::string_view text,
                                       ConceptMapper &mapper,
                                       const ProvenanceRecord &provenance) {
  AnnotatedDocument doc{std::string(text)};
  for (const EnrichedMapping &e : Enrich(mapper.RequestMappings(text), text)) {
    for (const Span &span : e.occurrences) {
      Annotation ann;
      ann.span = span;
      ann.surface = doc.Slice(span);
      ann.source = SourceKind::kMetaMap;
      ConceptRef ref;
      ref.id = e.mapping.concept_id;
      if (!e.mapping.preferred_name.empty()) ref.label = e.mapping.preferred_name;
      ref.prevalence = static_cast<int64_t>(e.prevalence);
      ann.concepts.push_back(std::move(ref));
      ann.provenance = provenance;
      doc.Add(std::move(ann));
    }
  }
  return doc.annotations();
}

std::vector<Annotation> AnnotateMapper(std::string_view text,
                                       const MapperEndpoint &ep,
                                       const ProvenanceRecord &provenance) {
  JsonFrameMapper mapper(ep);
  return AnnotateMapper(text, mapper, provenance);
}

}  // namespace mosaic
