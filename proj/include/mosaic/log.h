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

#ifndef MOSAIC_LOG_H_
#define MOSAIC_LOG_H_

#include <functional>
#include <string_view>

namespace mosaic {

using WarningSink = std::function<void(std::string_view)>;

// Reports a recoverable problem (skipped concept, unknown config key, ...).
// Goes to stderr unless a sink is installed.
void Warn(std::string_view message);

// Installs a sink and returns the previous one. An empty sink restores the
// stderr default.
WarningSink SetWarningSink(WarningSink sink);

}  // namespace mosaic

#endif  // MOSAIC_LOG_H_
