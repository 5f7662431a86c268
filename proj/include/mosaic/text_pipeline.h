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

#ifndef MOSAIC_TEXT_PIPELINE_H_
#define MOSAIC_TEXT_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "mosaic/types.h"

namespace mosaic {

class LexDatabase;

struct Token {
  std::string surface;
  Span span;
  Pos pos = Pos::kOther;

  // No letter or digit in the surface.
  bool is_punctuation() const;
  // ".", "!" or "?".
  bool is_sentence_end() const;

  bool operator==(const Token &) const = default;
};

struct TokenStream {
  std::string text;
  std::vector<Token> tokens;

  size_t size() const { return tokens.size(); }
  const Token &operator[](size_t i) const { return tokens[i]; }
};

// Characters split off the start and end of whitespace-delimited chunks.
bool IsDetachablePunctuation(char32_t c);

bool IsPunctuationToken(std::string_view surface);
bool IsSentenceTerminator(std::string_view surface);
// Contains a digit and no letter.
bool IsNumberToken(std::string_view surface);

// Rule tokenizer: split on Unicode white space, then peel leading and
// trailing detachable punctuation into one-character tokens. Hyphens and
// apostrophes inside a word stay in it. Spans are in scalar values.
TokenStream Tokenize(std::string_view text);

// Tag precedence: punctuation or number -> OTHER; senses under exactly one
// open class -> that class; several -> NOUN, VERB, ADJ, ADV in that order;
// suffix rules -ly, -ing/-ed, -ous/-ful/-ive/-al; otherwise NOUN.
Pos TagWord(std::string_view surface, const LexDatabase &lexicon);
TokenStream PosTag(TokenStream stream, const LexDatabase &lexicon);

// Up to three consecutive word tokens that do not straddle punctuation.
struct NGram {
  std::vector<size_t> tokens;  // indices into the stream
  Span span;
  std::string surface;         // original text slice

  size_t order() const { return tokens.size(); }
};

// All unigrams in document order, then bigrams, then trigrams.
std::vector<NGram> NGrams(const TokenStream &stream);

// Space-joined surfaces of the n-gram's tokens.
std::string NGramWords(const TokenStream &stream, const NGram &ngram);

inline constexpr size_t kDefaultContextRadius = 15;

// Lowercased surfaces of up to `radius` word tokens on each side of
// `index`, excluding punctuation and the token itself, stopping at sentence
// terminators and document edges. Throws Error(kPosition) when `index` is
// out of range.
std::vector<std::string> ContextWindow(const TokenStream &stream, size_t index,
                                       size_t radius = kDefaultContextRadius);

}  // namespace mosaic

#endif  // MOSAIC_TEXT_PIPELINE_H_
