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

#include "mosaic/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mosaic/errors.h"
#include "mosaic/unicode.h"

namespace mosaic {

std::string NormalizeLemma(std::string_view lemma) {
  std::string out = unicode::Lower(lemma);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

void LexDatabase::AddSynset(Synset synset) {
  if (synset.id.empty()) {
    throw Error(ErrorCode::kValidation, "synset with empty id");
  }
  if (synset.lemmas.empty()) {
    throw Error(ErrorCode::kValidation, "synset " + synset.id + " has no lemmas");
  }
  if (by_id_.count(synset.id)) {
    throw Error(ErrorCode::kValidation, "duplicate synset id " + synset.id);
  }
  by_id_.emplace(synset.id, synsets_.size());
  synsets_.push_back(std::move(synset));
}

void LexDatabase::AddSense(std::string_view lemma, Pos pos,
                           std::string_view id) {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) {
    throw Error(ErrorCode::kValidation,
                "sense of '" + std::string(lemma) + "' refers to unknown synset " +
                    std::string(id));
  }
  const Synset &synset = synsets_[it->second];
  std::string key = NormalizeLemma(lemma);
  if (synset.pos != pos) {
    throw Error(ErrorCode::kValidation, "synset " + synset.id +
                                            " has a different part of speech than "
                                            "the sense '" + key + "'");
  }
  bool listed = std::any_of(
      synset.lemmas.begin(), synset.lemmas.end(),
      [&](const std::string &l) { return NormalizeLemma(l) == key; });
  if (!listed) {
    throw Error(ErrorCode::kValidation,
                "synset " + synset.id + " does not contain lemma '" + key + "'");
  }
  auto &senses = senses_[{key, pos}];
  if (std::find(senses.begin(), senses.end(), it->second) == senses.end()) {
    senses.push_back(it->second);
  }
}

const Synset *LexDatabase::FindSynset(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &synsets_[it->second];
}

std::vector<Synset> LexDatabase::Senses(std::string_view lemma, Pos pos) const {
  std::vector<Synset> out;
  auto it = senses_.find({NormalizeLemma(lemma), pos});
  if (it == senses_.end()) return out;
  for (size_t i : it->second) out.push_back(synsets_[i]);
  return out;
}

bool LexDatabase::Contains(std::string_view lemma, Pos pos) const {
  return senses_.count({NormalizeLemma(lemma), pos}) > 0;
}

namespace {

struct WndbPart {
  Pos pos;
  const char *suffix;
  char letter;
};

constexpr WndbPart kParts[] = {
    {Pos::kNoun, "noun", 'n'},
    {Pos::kVerb, "verb", 'v'},
    {Pos::kAdj, "adj", 'a'},
    {Pos::kAdv, "adv", 'r'},
};

[[noreturn]] void FailLine(const std::filesystem::path &file, size_t line,
                           const std::string &what) {
  throw Error(ErrorCode::kParse, file.string() + ":" + std::to_string(line) +
                                     ": " + what);
}

std::vector<std::string> Fields(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

bool ParseCount(const std::string &s, int base, size_t *out) {
  if (s.empty()) return false;
  size_t used = 0;
  try {
    unsigned long v = std::stoul(s, &used, base);
    if (used != s.size()) return false;
    *out = v;
    return true;
  } catch (const std::exception &) {
    return false;
  }
}

std::ifstream OpenWndbFile(const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::kLoad, "cannot open WordNet file " + file.string());
  return in;
}

// Copyright header lines start with a space.
bool SkipLine(const std::string &line) {
  return line.empty() || line[0] == ' ' || line == "\r";
}

// Syntactic markers such as "(a)" or "(ip)" trail adjective lemmas.
std::string StripAdjectiveMarker(std::string lemma) {
  if (lemma.size() > 2 && lemma.back() == ')') {
    size_t open = lemma.rfind('(');
    if (open != std::string::npos && open > 0) lemma.resize(open);
  }
  return lemma;
}

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void LoadDataFile(const std::filesystem::path &file, const WndbPart &part,
                  LexDatabase *db) {
  std::ifstream in = OpenWndbFile(file);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (SkipLine(line)) continue;
    size_t bar = line.find('|');
    if (bar == std::string::npos) FailLine(file, lineno, "missing '|' before gloss");
    std::vector<std::string> f = Fields(std::string_view(line).substr(0, bar));
    size_t word_count = 0;
    if (f.size() < 4 || !ParseCount(f[3], 16, &word_count) || word_count == 0) {
      FailLine(file, lineno, "malformed synset header");
    }
    if (f.size() < 4 + 2 * word_count) FailLine(file, lineno, "truncated word list");

    Synset synset;
    synset.id = part.letter + f[0];
    synset.pos = part.pos;
    for (size_t w = 0; w < word_count; ++w) {
      synset.lemmas.push_back(StripAdjectiveMarker(f[4 + 2 * w]));
    }
    std::string gloss = Trim(std::string_view(line).substr(bar + 1));
    size_t semi = gloss.find(';');
    synset.gloss = Trim(std::string_view(gloss).substr(0, semi));
    try {
      db->AddSynset(std::move(synset));
    } catch (const Error &e) {
      FailLine(file, lineno, e.what());
    }
  }
}

void LoadIndexFile(const std::filesystem::path &file, const WndbPart &part,
                   LexDatabase *db) {
  std::ifstream in = OpenWndbFile(file);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (SkipLine(line)) continue;
    std::vector<std::string> f = Fields(line);
    size_t synset_count = 0, pointer_count = 0;
    if (f.size() < 6 || !ParseCount(f[2], 10, &synset_count) ||
        !ParseCount(f[3], 10, &pointer_count)) {
      FailLine(file, lineno, "malformed index entry");
    }
    if (f.size() != 6 + pointer_count + synset_count) {
      FailLine(file, lineno, "index entry field count does not match its counts");
    }
    for (size_t k = f.size() - synset_count; k < f.size(); ++k) {
      try {
        db->AddSense(f[0], part.pos, part.letter + f[k]);
      } catch (const Error &e) {
        FailLine(file, lineno, e.what());
      }
    }
  }
}

}  // namespace

LexDatabase LoadWndb(const std::filesystem::path &dir) {
  LexDatabase db;
  for (const WndbPart &part : kParts) {
    LoadDataFile(dir / (std::string("data.") + part.suffix), part, &db);
  }
  for (const WndbPart &part : kParts) {
    LoadIndexFile(dir / (std::string("index.") + part.suffix), part, &db);
  }
  return db;
}

namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsConsonant(char c) {
  return c >= 'a' && c <= 'z' && !IsVowel(c);
}

// Base forms of a verb stem left after removing -ed or -ing.
void AddVerbStems(const std::string &stem, std::vector<std::string> *out) {
  size_t n = stem.size();
  if (n == 0) return;
  if (n >= 2 && stem[n - 1] == stem[n - 2] && IsConsonant(stem[n - 1])) {
    out->push_back(stem.substr(0, n - 1));  // running -> run
    out->push_back(stem);                   // falling -> fall
    return;
  }
  bool cvc = n >= 3 && IsConsonant(stem[n - 3]) && IsVowel(stem[n - 2]) &&
             IsConsonant(stem[n - 1]) && stem[n - 1] != 'w' &&
             stem[n - 1] != 'x' && stem[n - 1] != 'y';
  if (cvc) {
    out->push_back(stem + "e");  // hoping -> hope
    out->push_back(stem);
  } else {
    out->push_back(stem);
    out->push_back(stem + "e");
  }
}

bool HasSuffix(const std::string &s, std::string_view suffix, size_t min_stem) {
  return s.size() >= suffix.size() + min_stem &&
         std::string_view(s).substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::vector<std::string> MorphologicalCandidates(std::string_view word, Pos pos) {
  std::string w = NormalizeLemma(word);
  std::vector<std::string> out;
  if (pos == Pos::kNoun) {
    if (HasSuffix(w, "ies", 1)) out.push_back(w.substr(0, w.size() - 3) + "y");
    if (HasSuffix(w, "es", 1)) out.push_back(w.substr(0, w.size() - 2));
    if (HasSuffix(w, "s", 1)) out.push_back(w.substr(0, w.size() - 1));
  } else if (pos == Pos::kVerb) {
    if (HasSuffix(w, "s", 1)) out.push_back(w.substr(0, w.size() - 1));
    if (HasSuffix(w, "ed", 2)) AddVerbStems(w.substr(0, w.size() - 2), &out);
    if (HasSuffix(w, "ing", 2)) AddVerbStems(w.substr(0, w.size() - 3), &out);
  }
  std::vector<std::string> unique;
  for (std::string &c : out) {
    if (c != w && std::find(unique.begin(), unique.end(), c) == unique.end()) {
      unique.push_back(std::move(c));
    }
  }
  return unique;
}

std::vector<Synset> LookupSenses(const LexDatabase &db, std::string_view lemma,
                                 Pos pos) {
  if (pos == Pos::kOther) return {};
  std::vector<Synset> senses = db.Senses(lemma, pos);
  if (!senses.empty()) return senses;
  for (const std::string &candidate : MorphologicalCandidates(lemma, pos)) {
    senses = db.Senses(candidate, pos);
    if (!senses.empty()) return senses;
  }
  return {};
}

}  // namespace mosaic
