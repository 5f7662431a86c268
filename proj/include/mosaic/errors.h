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

#ifndef MOSAIC_ERRORS_H_
#define MOSAIC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mosaic {

enum class ErrorCode {
  kSpanBounds,
  kValidation,
  kParse,
  kLoad,
  kLookup,
  kPosition,
  kNormalization,
  kContract,
  kConfig,
  kThrottled,
  kTransport,
  kEndpointUnreachable,
  kProtocol,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base for every error raised by the library. The code lets callers map
// failures onto exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an endpoint keeps answering 503 after every retry.
class ThrottledEndpointError : public Error {
 public:
  ThrottledEndpointError(const std::string &message, int attempts)
      : Error(ErrorCode::kThrottled, message), attempts_(attempts) {}

  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// Raised for HTTP statuses other than 200 and 503.
class TransportError : public Error {
 public:
  TransportError(const std::string &message, int status)
      : Error(ErrorCode::kTransport, message), status_(status) {}

  // HTTP status, or 0 when no response was received.
  int status() const { return status_; }

 private:
  int status_;
};

}  // namespace mosaic

#endif  // MOSAIC_ERRORS_H_
