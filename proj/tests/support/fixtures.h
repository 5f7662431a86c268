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

#ifndef MOSAIC_TESTS_SUPPORT_FIXTURES_H_
#define MOSAIC_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/annotation.h"
#include "mosaic/log.h"
#include "mosaic/provenance.h"

namespace mosaic {
namespace testing {

inline std::filesystem::path TestData(std::string_view relative) {
  return std::filesystem::path(MOSAIC_TEST_DATA_DIR) / relative;
}

inline std::string StopwordFile() { return MOSAIC_STOPWORDS_FILE; }

inline Timestamp FixedTime() { return ParseRfc3339("2026-01-01T00:00:00Z"); }

inline ProvenanceConfig TestProvenanceConfig() {
  return {"TestAgent", "1.0", "unit-test-vm", "Manchester"};
}

inline ProvenanceRecord TestProvenance(SourceKind system) {
  return BuildProvenance(TestProvenanceConfig(), system, FrozenClock(FixedTime()));
}

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  ScratchDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("mosaic-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir &) = delete;
  ScratchDir &operator=(const ScratchDir &) = delete;

  const std::filesystem::path &path() const { return path_; }

  std::filesystem::path Write(const std::string &name, std::string_view content) const {
    std::filesystem::path file = path_ / name;
    std::ofstream(file, std::ios::binary) << content;
    return file;
  }

 private:
  std::filesystem::path path_;
};

// Collects warnings for the lifetime of the object.
class WarningCapture {
 public:
  WarningCapture()
      : previous_(SetWarningSink(
            [this](std::string_view m) { messages_.emplace_back(m); })) {}
  ~WarningCapture() { SetWarningSink(previous_); }

  const std::vector<std::string> &messages() const { return messages_; }
  bool Contains(std::string_view needle) const {
    for (const auto &m : messages_) {
      if (m.find(needle) != std::string::npos) return true;
    }
    return false;
  }

 private:
  std::vector<std::string> messages_;
  WarningSink previous_;
};

}  // namespace testing
}  // namespace mosaic

#endif  // MOSAIC_TESTS_SUPPORT_FIXTURES_H_
