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

#ifndef VEILBREAK_LEXICON_H_
#define VEILBREAK_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace veilbreak {

using Frequency = std::uint64_t;

struct VocabEntry {
  std::string word;
  Frequency frequency = 0;
};

// The set of valid words with their corpus frequencies. Words are stored
// lowercased; lookups lowercase the query. Immutable once built, so it can
// be shared across threads.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Lowercases and merges duplicate words by summing, then keeps words whose
  // merged count reaches `min_frequency`.
  static Vocabulary FromCounts(std::span<const VocabEntry> counts,
                               Frequency min_frequency);

  bool Contains(std::string_view word) const;
  // Zero when absent.
  Frequency FrequencyOf(std::string_view word) const;

  // Entries sorted by word (byte order).
  std::span<const VocabEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Frequency min_frequency() const { return min_frequency_; }

 private:
  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  Frequency min_frequency_ = 0;
};

// Reads `word<TAB>count` lines. Throws IoError / ParseError.
Vocabulary LoadVocabulary(const std::filesystem::path& path,
                          Frequency min_frequency);
Vocabulary ParseVocabulary(std::istream& in, Frequency min_frequency);

void WriteVocabulary(const Vocabulary& vocab, std::ostream& out);
void SaveVocabulary(const Vocabulary& vocab,
                    const std::filesystem::path& path);

// Adds every word token of `corpus` seen at least `min_frequency` times.
// Existing words keep the larger of the two frequencies.
Vocabulary AugmentFromCorpus(const Vocabulary& vocab,
                             std::span<const std::string> corpus,
                             Frequency min_frequency);

// True for vocabulary members, normalization placeholders and tokens with no
// alphabetic character.
bool IsValid(const Vocabulary& vocab, std::string_view token);

class FunctionWordList {
 public:
  // Bundled English function-word list.
  static const FunctionWordList& Default();
  static FunctionWordList Load(const std::filesystem::path& path);
  static FunctionWordList FromWords(std::span<const std::string_view> words);

  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Sensitive-word filter: longer than two characters, at least `min_count`
// occurrences, and not a function word.
bool IsSensitiveEligible(const Vocabulary& vocab, const FunctionWordList& fwl,
                         std::string_view word, Frequency min_count);

}  // namespace veilbreak

#endif  // VEILBREAK_LEXICON_H_
