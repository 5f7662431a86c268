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

#include "mosaic/log.h"

#include <iostream>
#include <mutex>
#include <utility>

#include "mosaic/errors.h"

namespace mosaic {
namespace {

std::mutex &SinkMutex() {
  static std::mutex mu;
  return mu;
}

WarningSink &CurrentSink() {
  static WarningSink sink;
  return sink;
}

}  // namespace

void Warn(std::string_view message) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  if (CurrentSink()) {
    CurrentSink()(message);
  } else {
    std::cerr << "warning: " << message << "\n";
  }
}

WarningSink SetWarningSink(WarningSink sink) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  return std::exchange(CurrentSink(), std::move(sink));
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSpanBounds: return "span-bounds";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kLoad: return "load";
    case ErrorCode::kLookup: return "lookup";
    case ErrorCode::kPosition: return "position";
    case ErrorCode::kNormalization: return "normalization";
    case ErrorCode::kContract: return "contract";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kThrottled: return "throttled-endpoint";
    case ErrorCode::kTransport: return "transport";
    case ErrorCode::kEndpointUnreachable: return "endpoint-unreachable";
    case ErrorCode::kProtocol: return "protocol";
  }
  return "unknown";
}

}  // namespace mosaic
