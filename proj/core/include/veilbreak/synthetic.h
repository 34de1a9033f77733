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

#ifndef VEILBREAK_SYNTHETIC_H_
#define VEILBREAK_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "veilbreak/corpus.h"
#include "veilbreak/embedding.h"
#include "veilbreak/lexicon.h"

namespace veilbreak {

// Seeded two-class corpus with planted spam-indicative words, plus an
// oracle vocabulary and topic-clustered embeddings to go with it.
//
// Words come from three topics. "Finance" holds the planted spam words and
// a pool of class-neutral context words; "nature" words lean ham; general
// filler words each get their own random direction. Every planted word has
// one-substitution distractors in the nature topic, so a misspelling of it
// often has several candidates at the same distance. Vocabulary frequencies
// are drawn from a log-uniform background distribution, independent of
// topic.
struct SyntheticConfig {
  std::uint64_t seed = 20190101;
  std::size_t documents = 300;  // split evenly between spam and ham
  int dimension = 50;
  std::size_t planted_words = 10;
  std::size_t distractors_per_word = 4;
  std::size_t context_words = 20;
  std::size_t nature_words = 20;
  std::size_t general_words = 30;
  // Norm of the per-word noise relative to the unit topic direction.
  double noise = 0.4;
};

struct SyntheticData {
  Corpus corpus;
  Vocabulary vocab;
  EmbeddingTable embeddings{1};
  std::vector<std::string> planted;
  std::vector<std::string> distractors;
  std::vector<std::string> context_words;
  std::vector<std::string> nature_words;
  std::vector<std::string> general_words;
};

SyntheticData GenerateSynthetic(const SyntheticConfig& config);

// Stratified split: per label, a seeded shuffle sends round(n *
// test_fraction) documents to the test side. Relative order is kept.
std::pair<Corpus, Corpus> SplitCorpus(const Corpus& corpus,
                                      double test_fraction,
                                      std::uint64_t seed);

}  // namespace veilbreak

#endif  // VEILBREAK_SYNTHETIC_H_
