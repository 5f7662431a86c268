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

#include "mosaic/provenance.h"

#include <ctime>
#include <cstdio>

#include "mosaic/errors.h"

namespace mosaic {

Clock SystemClock() {
  return [] { return std::chrono::system_clock::now(); };
}

Clock FrozenClock(Timestamp at) {
  return [at] { return at; };
}

std::string FormatRfc3339Utc(Timestamp t) {
  std::time_t secs = std::chrono::system_clock::to_time_t(
      std::chrono::floor<std::chrono::seconds>(t));
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Timestamp ParseRfc3339(std::string_view text) {
  std::string s(text);
  std::tm tm{};
  int consumed = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%n", &tm.tm_year,
                  &tm.tm_mon, &tm.tm_mday, &tm.tm_hour, &tm.tm_min,
                  &tm.tm_sec, &consumed) != 6 ||
      consumed != 19) {
    throw Error(ErrorCode::kParse, "not an RFC 3339 timestamp: " + s);
  }
  std::string_view zone = std::string_view(s).substr(consumed);
  long offset = 0;
  if (zone == "Z" || zone == "z") {
    offset = 0;
  } else if (zone.size() == 6 && (zone[0] == '+' || zone[0] == '-') &&
             zone[3] == ':') {
    int hh = 0, mm = 0;
    if (std::sscanf(s.c_str() + consumed + 1, "%2d:%2d", &hh, &mm) != 2) {
      throw Error(ErrorCode::kParse, "bad UTC offset in timestamp: " + s);
    }
    offset = (hh * 60L + mm) * 60L * (zone[0] == '-' ? -1 : 1);
  } else {
    throw Error(ErrorCode::kParse, "missing time zone in timestamp: " + s);
  }
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  if (tm.tm_mon < 0 || tm.tm_mon > 11 || tm.tm_mday < 1 || tm.tm_mday > 31 ||
      tm.tm_hour > 23 || tm.tm_min > 59 || tm.tm_sec > 60) {
    throw Error(ErrorCode::kParse, "timestamp field out of range: " + s);
  }
  std::time_t secs = timegm(&tm) - offset;
  return std::chrono::system_clock::from_time_t(secs);
}

ProvenanceRecord BuildProvenance(const ProvenanceConfig &config,
                                 SourceKind system, const Clock &clock) {
  auto require = [](const std::string &value, const char *key) {
    if (value.empty()) {
      throw Error(ErrorCode::kConfig,
                  std::string("missing provenance setting '") + key + "'");
    }
  };
  require(config.agent_name, "agent.name");
  require(config.agent_version, "agent.version");
  require(config.environment_description, "environment.description");
  require(config.location, "location");

  ProvenanceRecord record;
  record.agent_name = config.agent_name;
  record.agent_version = config.agent_version;
  record.annotation_system = system;
  record.source = std::string(kToolIdentifier);
  record.environment = config.environment_description;
  record.date_time = FormatRfc3339Utc(clock());
  record.location = config.location;
  return record;
}

void ValidateProvenance(const ProvenanceRecord &record) {
  auto require = [](const std::string &value, const char *field) {
    if (value.empty()) {
      throw Error(ErrorCode::kValidation,
                  std::string("provenance field '") + field + "' is empty");
    }
  };
  require(record.agent_name, "agent_name");
  require(record.agent_version, "agent_version");
  require(record.source, "source");
  require(record.environment, "environment");
  require(record.date_time, "date_time");
  require(record.location, "location");
}

}  // namespace mosaic
