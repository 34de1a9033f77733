// Copyright 2026 The Veilbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "veilbreak/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "veilbreak/corpus.h"
#include "veilbreak/error.h"
#include "veilbreak/textnorm.h"
#include "veilbreak/utf8.h"

namespace veilbreak {

Vocabulary Vocabulary::FromCounts(std::span<const VocabEntry> counts,
                                  Frequency min_frequency) {
  std::map<std::string, Frequency> merged;
  for (const VocabEntry& e : counts) {
    merged[utf8::ToLower(e.word)] += e.frequency;
  }
  Vocabulary v;
  v.min_frequency_ = min_frequency;
  for (auto& [word, freq] : merged) {
    if (freq < min_frequency || word.empty()) continue;
    v.index_.emplace(word, v.entries_.size());
    v.entries_.push_back({word, freq});
  }
  return v;
}

bool Vocabulary::Contains(std::string_view word) const {
  return index_.contains(utf8::ToLower(word));
}

Frequency Vocabulary::FrequencyOf(std::string_view word) const {
  auto it = index_.find(utf8::ToLower(word));
  return it == index_.end() ? 0 : entries_[it->second].frequency;
}

Vocabulary ParseVocabulary(std::istream& in, Frequency min_frequency) {
  std::vector<VocabEntry> counts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("expected word<TAB>count", lineno);
    }
    std::string_view word(line.data(), tab);
    std::string_view count(line.data() + tab + 1, line.size() - tab - 1);
    if (utf8::HasWhitespace(word)) {
      throw ParseError("word contains whitespace", lineno);
    }
    Frequency value = 0;
    auto [ptr, ec] =
        std::from_chars(count.data(), count.data() + count.size(), value);
    if (count.empty() || ec != std::errc() ||
        ptr != count.data() + count.size()) {
      throw ParseError("count is not a non-negative integer", lineno);
    }
    counts.push_back({std::string(word), value});
  }
  if (in.bad()) throw IoError("read failure while loading vocabulary");
  return Vocabulary::FromCounts(counts, min_frequency);
}

Vocabulary LoadVocabulary(const std::filesystem::path& path,
                          Frequency min_frequency) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vocabulary file: " + path.string());
  return ParseVocabulary(in, min_frequency);
}

void WriteVocabulary(const Vocabulary& vocab, std::ostream& out) {
  for (const VocabEntry& e : vocab.entries()) {
    out << e.word << '\t' << e.frequency << '\n';
  }
}

void SaveVocabulary(const Vocabulary& vocab,
                    const std::filesystem::path& path) {
  WriteFileAtomically(path,
                      [&](std::ostream& out) { WriteVocabulary(vocab, out); });
}

Vocabulary AugmentFromCorpus(const Vocabulary& vocab,
                             std::span<const std::string> corpus,
                             Frequency min_frequency) {
  if (min_frequency < 1) {
    throw ContractViolation("AugmentFromCorpus: min_frequency must be >= 1");
  }
  std::map<std::string, Frequency> seen;
  for (const std::string& doc : corpus) {
    for (const Token& t : TokenizeFlat(doc)) {
      if (t.kind == TokenKind::kWord) ++seen[t.lower];
    }
  }
  std::vector<VocabEntry> merged(vocab.entries().begin(),
                                 vocab.entries().end());
  for (VocabEntry& e : merged) {
    auto it = seen.find(e.word);
    if (it != seen.end()) {
      e.frequency = std::max(e.frequency, it->second);
      seen.erase(it);
    }
  }
  for (auto& [word, freq] : seen) {
    if (freq >= min_frequency) merged.push_back({word, freq});
  }
  return Vocabulary::FromCounts(
      merged, std::min(vocab.min_frequency(), min_frequency));
}

bool IsValid(const Vocabulary& vocab, std::string_view token) {
  if (IsPlaceholder(token)) return true;
  if (!utf8::HasLetter(token)) return true;
  return vocab.Contains(token);
}

FunctionWordList FunctionWordList::FromWords(
    std::span<const std::string_view> words) {
  FunctionWordList list;
  for (std::string_view w : words) {
    if (!w.empty()) list.words_.insert(utf8::ToLower(w));
  }
  if (list.words_.empty()) {
    throw DataError("function-word list must not be empty");
  }
  return list;
}

FunctionWordList FunctionWordList::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open function-word file: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  std::vector<std::string_view> views(lines.begin(), lines.end());
  return FromWords(views);
}

bool FunctionWordList::Contains(std::string_view word) const {
  return words_.contains(utf8::ToLower(word));
}

bool IsSensitiveEligible(const Vocabulary& vocab, const FunctionWordList& fwl,
                         std::string_view word, Frequency min_count) {
  if (utf8::Decode(word).size() <= 2) return false;
  if (fwl.Contains(word)) return false;
  const Frequency f = vocab.FrequencyOf(word);
  return f > 0 && f >= min_count;
}

}  // namespace veilbreak
