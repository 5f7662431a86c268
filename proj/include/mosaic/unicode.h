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

#ifndef MOSAIC_UNICODE_H_
#define MOSAIC_UNICODE_H_

#include <string>
#include <string_view>

namespace mosaic {
namespace unicode {

// Decodes UTF-8 into scalar values. Throws Error(kParse) on malformed input.
std::u32string Decode(std::string_view utf8);
std::string Encode(std::u32string_view text);

// Number of scalar values in a UTF-8 string.
size_t Length(std::string_view utf8);

// Simple (one-to-one) default case mappings; never locale dependent.
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);
std::u32string Lower(std::u32string_view text);
std::string Lower(std::string_view utf8);

bool IsWhiteSpace(char32_t c);
bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsAlnum(char32_t c);

}  // namespace unicode
}  // namespace mosaic

#endif  // MOSAIC_UNICODE_H_
