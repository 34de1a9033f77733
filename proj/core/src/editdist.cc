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

#include "veilbreak/editdist.h"

#include <algorithm>
#include <unordered_set>

#include "veilbreak/error.h"
#include "veilbreak/utf8.h"

namespace veilbreak {
namespace {

// All strings reachable from `s` by deleting at most `depth` characters,
// `s` itself included.
std::unordered_set<std::u32string> DeletionNeighborhood(
    const std::u32string& s, int depth) {
  std::unordered_set<std::u32string> out{s};
  std::vector<std::u32string> frontier{s};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::u32string> next;
    for (const auto& w : frontier) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        std::u32string shorter = w;
        shorter.erase(i, 1);
        if (out.insert(shorter).second) next.push_back(std::move(shorter));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

int LengthGap(std::size_t a, std::size_t b) {
  return static_cast<int>(a > b ? a - b : b - a);
}

void CheckRadius(int max_radius) {
  if (max_radius < 1) throw ContractViolation("max_radius must be >= 1");
}

}  // namespace

int DlDistance(std::u32string_view a, std::u32string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return static_cast<int>(m);
  if (m == 0) return static_cast<int>(n);
  // Three rolling rows: i-2, i-1, i.
  std::vector<int> prev2(m + 1), prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int cost = a[i - 1] == b[j - 1] ? 0 : 1;
      int best = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        best = std::min(best, prev2[j - 2] + 1);
      }
      cur[j] = best;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

int DlDistance(std::string_view a, std::string_view b) {
  return DlDistance(utf8::Decode(a), utf8::Decode(b));
}

std::optional<CandidateSet> EnumerateCandidates(const Vocabulary& vocab,
                                                std::string_view token,
                                                int max_radius) {
  CheckRadius(max_radius);
  const std::string lower = utf8::ToLower(token);
  const std::u32string query = utf8::Decode(lower);
  CandidateSet result;
  result.source = lower;
  result.distance = max_radius + 1;
  for (const VocabEntry& e : vocab.entries()) {
    if (e.word == lower) continue;
    const std::u32string w = utf8::Decode(e.word);
    if (LengthGap(w.size(), query.size()) > result.distance) continue;
    const int d = DlDistance(query, w);
    if (d == 0 || d > max_radius || d > result.distance) continue;
    if (d < result.distance) {
      result.distance = d;
      result.candidates.clear();
    }
    result.candidates.push_back({e.word, e.frequency});
  }
  if (result.candidates.empty()) return std::nullopt;
  // Entries are already sorted by word.
  return result;
}

CandidateIndex::CandidateIndex(const Vocabulary& vocab, int radius)
    : radius_(radius) {
  if (radius < 1) throw ContractViolation("index radius must be >= 1");
  if (vocab.empty()) {
    throw ContractViolation("cannot index an empty vocabulary");
  }
  words_.reserve(vocab.size());
  for (const VocabEntry& e : vocab.entries()) {
    const auto id = static_cast<std::uint32_t>(words_.size());
    words_.push_back({e.word, utf8::Decode(e.word), e.frequency});
    for (const auto& key : DeletionNeighborhood(words_.back().scalars, radius)) {
      deletes_[key].push_back(id);
    }
  }
}

std::optional<CandidateSet> CandidateIndex::Enumerate(std::string_view token,
                                                      int max_radius) const {
  CheckRadius(max_radius);
  const std::string lower = utf8::ToLower(token);
  const std::u32string query = utf8::Decode(lower);
  std::vector<std::uint32_t> ids;
  if (max_radius > radius_) {
    ids.resize(words_.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
  } else {
    for (const auto& key : DeletionNeighborhood(query, max_radius)) {
      auto it = deletes_.find(key);
      if (it == deletes_.end()) continue;
      ids.insert(ids.end(), it->second.begin(), it->second.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  return Finish(lower, ids, query, max_radius);
}

std::optional<CandidateSet> CandidateIndex::Finish(
    std::string_view token, const std::vector<std::uint32_t>& ids,
    const std::u32string& query, int max_radius) const {
  CandidateSet result;
  result.source = std::string(token);
  result.distance = max_radius + 1;
  // ids ascend, and words_ is sorted by word, so candidates come out sorted.
  for (std::uint32_t id : ids) {
    const Word& w = words_[id];
    if (LengthGap(w.scalars.size(), query.size()) > result.distance) continue;
    const int d = DlDistance(query, w.scalars);
    if (d == 0 || d > max_radius || d > result.distance) continue;
    if (d < result.distance) {
      result.distance = d;
      result.candidates.clear();
    }
    result.candidates.push_back({w.text, w.frequency});
  }
  if (result.candidates.empty()) return std::nullopt;
  return result;
}

}  // namespace veilbreak
