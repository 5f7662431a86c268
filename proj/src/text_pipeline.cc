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

#include "mosaic/text_pipeline.h"

#include <algorithm>

#include "mosaic/errors.h"
#include "mosaic/lexicon.h"
#include "mosaic/unicode.h"

namespace mosaic {

bool IsDetachablePunctuation(char32_t c) {
  switch (c) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?':
    case U'(': case U')': case U'"': case U'\'': case U'[': case U']':
    case U'{': case U'}':
      return true;
    default:
      return false;
  }
}

bool IsPunctuationToken(std::string_view surface) {
  std::u32string s = unicode::Decode(surface);
  return std::none_of(s.begin(), s.end(), unicode::IsAlnum);
}

bool IsSentenceTerminator(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?";
}

bool IsNumberToken(std::string_view surface) {
  std::u32string s = unicode::Decode(surface);
  return std::any_of(s.begin(), s.end(), unicode::IsDigit) &&
         std::none_of(s.begin(), s.end(), unicode::IsLetter);
}

bool Token::is_punctuation() const { return IsPunctuationToken(surface); }

bool Token::is_sentence_end() const { return IsSentenceTerminator(surface); }

TokenStream Tokenize(std::string_view text) {
  TokenStream stream;
  stream.text = std::string(text);
  const std::u32string s = unicode::Decode(text);
  auto emit = [&](size_t begin, size_t end) {
    Token token;
    token.surface =
        unicode::Encode(std::u32string_view(s).substr(begin, end - begin));
    token.span = {begin, end};
    stream.tokens.push_back(std::move(token));
  };

  size_t i = 0;
  while (i < s.size()) {
    if (unicode::IsWhiteSpace(s[i])) {
      ++i;
      continue;
    }
    size_t begin = i;
    while (i < s.size() && !unicode::IsWhiteSpace(s[i])) ++i;
    size_t end = i;

    while (begin < end && IsDetachablePunctuation(s[begin])) {
      emit(begin, begin + 1);
      ++begin;
    }
    size_t core_end = end;
    while (core_end > begin && IsDetachablePunctuation(s[core_end - 1])) {
      --core_end;
    }
    if (begin < core_end) emit(begin, core_end);
    for (size_t p = core_end; p < end; ++p) emit(p, p + 1);
  }
  return stream;
}

namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Pos TagWord(std::string_view surface, const LexDatabase &lexicon) {
  if (IsPunctuationToken(surface) || IsNumberToken(surface)) return Pos::kOther;

  std::string word = unicode::Lower(surface);
  // kOpenClasses is already in preference order.
  for (Pos pos : kOpenClasses) {
    if (!LookupSenses(lexicon, word, pos).empty()) return pos;
  }

  // Suffix rules look at the whole word, then at each hyphen-separated part
  // from left to right.
  std::vector<std::string_view> parts = {word};
  if (word.find('-') != std::string::npos) {
    for (size_t begin = 0; begin <= word.size();) {
      size_t end = std::min(word.find('-', begin), word.size());
      parts.push_back(std::string_view(word).substr(begin, end - begin));
      begin = end + 1;
    }
  }
  for (std::string_view part : parts) {
    if (EndsWith(part, "ly")) return Pos::kAdv;
    if (EndsWith(part, "ing") || EndsWith(part, "ed")) return Pos::kVerb;
    for (std::string_view suffix : {"ous", "ful", "ive", "al"}) {
      if (EndsWith(part, suffix)) return Pos::kAdj;
    }
  }
  return Pos::kNoun;
}

TokenStream PosTag(TokenStream stream, const LexDatabase &lexicon) {
  for (Token &token : stream.tokens) token.pos = TagWord(token.surface, lexicon);
  return stream;
}

std::vector<NGram> NGrams(const TokenStream &stream) {
  // Runs of consecutive word tokens; any punctuation token ends a run.
  std::vector<std::vector<size_t>> runs(1);
  for (size_t i = 0; i < stream.size(); ++i) {
    if (stream[i].is_punctuation()) {
      if (!runs.back().empty()) runs.emplace_back();
    } else {
      runs.back().push_back(i);
    }
  }

  const std::u32string text = unicode::Decode(stream.text);
  std::vector<NGram> out;
  for (size_t order = 1; order <= 3; ++order) {
    for (const auto &run : runs) {
      for (size_t k = 0; k + order <= run.size(); ++k) {
        NGram gram;
        gram.tokens.assign(run.begin() + k, run.begin() + k + order);
        gram.span = {stream[gram.tokens.front()].span.start,
                     stream[gram.tokens.back()].span.end};
        gram.surface = unicode::Encode(std::u32string_view(text).substr(
            gram.span.start, gram.span.length()));
        out.push_back(std::move(gram));
      }
    }
  }
  return out;
}

std::string NGramWords(const TokenStream &stream, const NGram &ngram) {
  std::string out;
  for (size_t i : ngram.tokens) {
    if (!out.empty()) out += ' ';
    out += stream[i].surface;
  }
  return out;
}

std::vector<std::string> ContextWindow(const TokenStream &stream, size_t index,
                                       size_t radius) {
  if (index >= stream.size()) {
    throw Error(ErrorCode::kPosition,
                "token index " + std::to_string(index) +
                    " out of range for stream of " +
                    std::to_string(stream.size()) + " tokens");
  }
  std::vector<std::string> left;
  for (size_t i = index; i-- > 0 && left.size() < radius;) {
    const Token &t = stream[i];
    if (t.is_sentence_end()) break;
    if (t.is_punctuation()) continue;
    left.push_back(unicode::Lower(t.surface));
  }
  std::reverse(left.begin(), left.end());

  std::vector<std::string> right;
  for (size_t i = index + 1; i < stream.size() && right.size() < radius; ++i) {
    const Token &t = stream[i];
    if (t.is_sentence_end()) break;
    if (t.is_punctuation()) continue;
    right.push_back(unicode::Lower(t.surface));
  }

  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace mosaic
