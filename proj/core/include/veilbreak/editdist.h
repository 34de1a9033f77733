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

#ifndef VEILBREAK_EDITDIST_H_
#define VEILBREAK_EDITDIST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "veilbreak/lexicon.h"

namespace veilbreak {

inline constexpr int kDefaultMaxRadius = 2;

// Restricted Damerau-Levenshtein (optimal string alignment) distance:
// insertions, deletions, substitutions and adjacent transpositions, with no
// substring edited twice. The UTF-8 overload measures scalar values.
int DlDistance(std::u32string_view a, std::u32string_view b);
int DlDistance(std::string_view a, std::string_view b);

struct Candidate {
  std::string word;
  Frequency frequency = 0;

  bool operator==(const Candidate&) const = default;
};

// Vocabulary words at the smallest distance found from `source`. Candidates
// are sorted by word.
struct CandidateSet {
  std::string source;
  int distance = 0;
  std::vector<Candidate> candidates;
};

// Linear scan over the whole vocabulary, radius 1, 2, ... max_radius.
// Returns nullopt when nothing lies within max_radius.
std::optional<CandidateSet> EnumerateCandidates(const Vocabulary& vocab,
                                                std::string_view token,
                                                int max_radius);

// Deletion-neighborhood index: every vocabulary word is stored under each
// string obtained by deleting up to `radius` characters. Two strings within
// OSA distance d always share such a key with at most d deletions on each
// side, so candidates found this way and then verified with DlDistance are
// exactly the linear-scan result.
class CandidateIndex {
 public:
  explicit CandidateIndex(const Vocabulary& vocab,
                          int radius = kDefaultMaxRadius);

  // Same contract as EnumerateCandidates. Radii above the build radius fall
  // back to a scan over the stored words.
  std::optional<CandidateSet> Enumerate(std::string_view token,
                                        int max_radius) const;

  int radius() const { return radius_; }
  std::size_t word_count() const { return words_.size(); }
  std::size_t key_count() const { return deletes_.size(); }

 private:
  struct Word {
    std::string text;
    std::u32string scalars;
    Frequency frequency;
  };

  std::optional<CandidateSet> Finish(std::string_view token,
                                     const std::vector<std::uint32_t>& ids,
                                     const std::u32string& query,
                                     int max_radius) const;

  int radius_;
  std::vector<Word> words_;
  std::unordered_map<std::u32string, std::vector<std::uint32_t>> deletes_;
};

}  // namespace veilbreak

#endif  // VEILBREAK_EDITDIST_H_
